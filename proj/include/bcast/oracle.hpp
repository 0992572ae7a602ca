#pragma once

#include <optional>
#include <vector>

#include "bcast/graph.hpp"
#include "bcast/instances.hpp"

namespace bcast {

struct OracleConfig {
    int max_vertices = 10;  // never more than kOracleHardLimit
    int max_sat_vars = 20;
    int max_3dm_w = 12;
};

inline constexpr int kOracleHardLimit = 14;

enum class CallSets {
    All,      // every set of distinct-sender/distinct-receiver calls, including none
    Maximal,  // only assignments where no idle sender still has an uninformed neighbor free
};

// Minimum number of rounds until every vertex is informed, by breadth-first
// search over informed sets.
int oracle_broadcast_time(const Graph& g, const std::vector<VertexLabel>& origins, const OracleConfig& cfg = {},
                          CallSets calls = CallSets::All);

// Same search, stopping once all `targets` are informed.
int oracle_multicast_time(const Graph& g, const std::vector<VertexLabel>& origins, const std::vector<VertexLabel>& targets,
                          const OracleConfig& cfg = {});

// Indices into inst.W of some perfect matching, or nullopt.
std::optional<std::vector<int>> solve_3dm(const ThreeDMInstance& inst, const OracleConfig& cfg = {});

struct SatClass {
    enum Kind { Unsat, Unique, Multiple } kind = Unsat;
    std::vector<bool> witness;  // set for Unique (and the first model for Multiple)
    long long models = 0;
};

SatClass sat_classify(const CnfFormula& phi, const OracleConfig& cfg = {});

// Whether phi stays satisfiable with the literal forced true.
bool satisfiable_with(const CnfFormula& phi, const Literal& lit, const OracleConfig& cfg = {});

}  // namespace bcast
