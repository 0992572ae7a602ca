#pragma once

#include <map>
#include <string>
#include <vector>

#include "bcast/graph.hpp"
#include "bcast/instances.hpp"
#include "bcast/oracle.hpp"
#include "bcast/scheme.hpp"

namespace bcast {

// A gadget graph together with the named vertices and numbers a caller needs
// to check it: marks name roles ("v_0", "r1", "s", "delta_2", ...), params
// hold sizes and target times, warnings collect range-condition failures.
struct ReductionArtifact {
    Graph graph;
    std::map<std::string, VertexLabel> marks;
    std::map<std::string, long long> params;
    std::map<std::string, std::vector<VertexLabel>> groups;
    std::vector<std::string> warnings;

    const VertexLabel& mark(const std::string& role) const;
    long long param(const std::string& name) const;
    const std::vector<VertexLabel>& group(const std::string& name) const;
};

// ---- 3DM -> single-originator broadcast time ----

// Elements become "elem:<name>", triple j becomes "triple:<j>".
Graph graph_of_3dm(const ThreeDMInstance& inst);

ReductionArtifact stbt_from_3dm(const ThreeDMInstance& inst);

// Scheme from v_0 finishing in ceil(log w) + 5 rounds, given k disjoint triples.
BroadcastScheme stbt_yes_scheme(const ReductionArtifact& art, const std::vector<Triple>& matching);

// ---- single-originator broadcast time -> broadcast graph ----

ReductionArtifact bg_from_stbt(const Graph& g_s, const VertexLabel& v_s);

// `inner` is a scheme for (g_s, v_s) in the original labels, at most t rounds.
BroadcastScheme bg_yes_scheme(const ReductionArtifact& art, const VertexLabel& originator, const BroadcastScheme& inner);

// Which of the three originator regions a vertex of G_u falls in: 1 for the
// Knödel core, 2 for T1/T5/T6/G_s, 3 for T2/T3/T4.
int bg_originator_case(const ReductionArtifact& art, const VertexLabel& v);

// ---- Unique-SAT -> broadcast center size ----

ReductionArtifact bcsize_from_usat(const CnfFormula& phi, const OracleConfig& oracle = {});

// Constructive schemes for s, r and, given a satisfying assignment, r^l for
// every literal l it makes true. The proof's schedule is followed first and
// any vertex it leaves out is filled in greedily afterwards, so every scheme
// is complete. If that takes more than t rounds the exact solver gets a
// bounded try at a t-round scheme; failing that, the longer one is returned.
std::map<VertexLabel, BroadcastScheme> bcsize_center_schemes(const ReductionArtifact& art, const CnfFormula& phi,
                                                             const std::vector<bool>* assignment);

// Distance-based lower bound on b(G,v) for vertices outside {s, r, r^l};
// 0 for those.
int case4_lower_bound(const ReductionArtifact& art, const VertexLabel& v);

// 2 + number of literals l with phi && l satisfiable.
int expected_bc_size(const CnfFormula& phi, const OracleConfig& oracle = {});

}  // namespace bcast
