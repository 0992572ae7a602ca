#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "bcast/graph.hpp"
#include "bcast/scheme.hpp"

namespace bcast {

struct SolverConfig {
    int workers = 1;
    long long node_budget = 0;               // 0: unlimited
    std::chrono::milliseconds time_budget{0};  // 0: unlimited
    std::size_t memo_cap = std::size_t{1} << 22;

    // Pruning rules; each can be switched off without changing exact answers.
    bool prune_doubling = true;
    bool prune_distance = true;
    bool prune_flow = true;
    bool prune_dominance = true;
    bool decompose = true;
    bool twin_symmetry = true;
};

struct SolveResult {
    enum class Status { Exact, LowerBounded };
    Status status = Status::LowerBounded;
    int time = 0;  // the exact value, or proven_lower when bounded
    std::optional<BroadcastScheme> witness;
    int proven_lower = 0;
    long long nodes = 0;

    bool exact() const { return status == Status::Exact; }
};

struct BroadcastCenter {
    std::vector<VertexLabel> members;
    int min_time = 0;
};

enum class Feasibility { Feasible, Infeasible, Unknown };

struct Decision {
    Feasibility verdict = Feasibility::Unknown;
    std::optional<BroadcastScheme> witness;  // when Feasible
    long long nodes = 0;
};

// max(ceil(log2 n), eccentricity(v))
int lower_bound(const Graph& g, const VertexLabel& v);

// Can the origins inform every vertex within `rounds` rounds? Unknown only
// when the budget runs out.
Decision decide_within(const Graph& g, const std::vector<VertexLabel>& origins, int rounds, const SolverConfig& cfg = {});

SolveResult broadcast_time_from(const Graph& g, const VertexLabel& v, const SolverConfig& cfg = {});

// b(G,v) for every vertex, in vertex order; origins are spread over cfg.workers threads.
std::vector<SolveResult> broadcast_times(const Graph& g, const SolverConfig& cfg = {});

// b(G); throws SolverError if any origin could not be solved exactly.
int broadcast_time(const Graph& g, const SolverConfig& cfg = {});

bool is_broadcast_graph(const Graph& g, const SolverConfig& cfg = {});

// Candidate times from ceil(log2 n) upward; the first time reached by some
// vertex gives the center.
BroadcastCenter broadcast_center(const Graph& g, const SolverConfig& cfg = {});

bool bc_size_decision(const Graph& g, int x, const SolverConfig& cfg = {});

}  // namespace bcast
