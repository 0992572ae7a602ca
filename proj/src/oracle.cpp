#include "bcast/oracle.hpp"

#include <cstdint>
#include <functional>
#include <set>
#include <unordered_set>

namespace bcast {

namespace {

using Mask = std::uint32_t;

struct Arena {
    int n = 0;
    std::vector<Mask> adj;
};

Arena prepare(const Graph& g, const OracleConfig& cfg) {
    const int limit = std::min(cfg.max_vertices, kOracleHardLimit);
    if (static_cast<int>(g.vertex_count()) > limit)
        throw OracleError("oracle refuses " + std::to_string(g.vertex_count()) + " vertices (limit " + std::to_string(limit) + ")");
    if (!is_connected(g)) throw OracleError("oracle needs a connected graph");
    Arena a;
    a.n = static_cast<int>(g.vertex_count());
    a.adj.assign(static_cast<std::size_t>(a.n), 0);
    for (auto [u, v] : g.edges()) {
        a.adj[static_cast<std::size_t>(u)] |= Mask{1} << v;
        a.adj[static_cast<std::size_t>(v)] |= Mask{1} << u;
    }
    return a;
}

// All receiver sets reachable in one round from `informed`.
void successors(const Arena& a, Mask informed, CallSets mode, std::unordered_set<Mask>& out) {
    std::vector<int> senders;
    for (int v = 0; v < a.n; ++v)
        if ((informed >> v & 1) && (a.adj[static_cast<std::size_t>(v)] & ~informed)) senders.push_back(v);

    std::function<void(std::size_t, Mask, Mask)> go = [&](std::size_t i, Mask taken, Mask idle) {
        if (i == senders.size()) {
            if (mode == CallSets::Maximal)
                for (int v : senders)
                    if ((idle >> v & 1) && (a.adj[static_cast<std::size_t>(v)] & ~informed & ~taken)) return;
            out.insert(informed | taken);
            return;
        }
        int v = senders[i];
        go(i + 1, taken, idle | Mask{1} << v);
        Mask options = a.adj[static_cast<std::size_t>(v)] & ~informed & ~taken;
        for (int u = 0; u < a.n; ++u)
            if (options >> u & 1) go(i + 1, taken | Mask{1} << u, idle);
    };
    go(0, 0, 0);
}

int search(const Graph& g, const std::vector<VertexLabel>& origins, Mask goal_of_targets, bool use_targets,
           const OracleConfig& cfg, CallSets mode) {
    if (origins.empty()) throw OracleError("oracle needs at least one origin");
    Arena a = prepare(g, cfg);
    Mask start = 0;
    for (const auto& o : origins) start |= Mask{1} << g.index_of(o);
    const Mask full = a.n == 32 ? ~Mask{0} : (Mask{1} << a.n) - 1;
    const Mask goal = use_targets ? goal_of_targets : full;

    std::unordered_set<Mask> seen{start};
    std::vector<Mask> layer{start};
    for (int round = 0;; ++round) {
        for (Mask m : layer)
            if ((m & goal) == goal) return round;
        std::unordered_set<Mask> next;
        for (Mask m : layer) {
            std::unordered_set<Mask> succ;
            successors(a, m, mode, succ);
            for (Mask s : succ)
                if (seen.insert(s).second) next.insert(s);
        }
        if (next.empty()) throw OracleError("oracle: goal unreachable");
        layer.assign(next.begin(), next.end());
    }
}

}  // namespace

int oracle_broadcast_time(const Graph& g, const std::vector<VertexLabel>& origins, const OracleConfig& cfg, CallSets calls) {
    return search(g, origins, 0, false, cfg, calls);
}

int oracle_multicast_time(const Graph& g, const std::vector<VertexLabel>& origins, const std::vector<VertexLabel>& targets,
                          const OracleConfig& cfg) {
    Mask goal = 0;
    for (const auto& t : targets) goal |= Mask{1} << g.index_of(t);
    return search(g, origins, goal, true, cfg, CallSets::All);
}

std::optional<std::vector<int>> solve_3dm(const ThreeDMInstance& inst, const OracleConfig& cfg) {
    inst.validate();
    if (inst.w() > cfg.max_3dm_w)
        throw OracleError("3DM oracle refuses w = " + std::to_string(inst.w()) + " (limit " + std::to_string(cfg.max_3dm_w) + ")");
    std::vector<int> chosen;
    std::set<std::string> used;
    std::function<bool(int)> pick = [&](int from) {
        if (static_cast<int>(chosen.size()) == inst.k) return true;
        for (int i = from; i < inst.w(); ++i) {
            const auto& t = inst.W[static_cast<std::size_t>(i)];
            if (used.contains(t[0]) || used.contains(t[1]) || used.contains(t[2])) continue;
            chosen.push_back(i);
            used.insert(t.begin(), t.end());
            if (pick(i + 1)) return true;
            chosen.pop_back();
            for (const auto& e : t) used.erase(e);
        }
        return false;
    };
    if (pick(0)) return chosen;
    return std::nullopt;
}

SatClass sat_classify(const CnfFormula& phi, const OracleConfig& cfg) {
    phi.validate();
    if (phi.n > cfg.max_sat_vars)
        throw OracleError("SAT oracle refuses n = " + std::to_string(phi.n) + " (limit " + std::to_string(cfg.max_sat_vars) + ")");
    SatClass out;
    std::vector<bool> a(static_cast<std::size_t>(phi.n));
    for (long long bits = 0; bits < (1LL << phi.n); ++bits) {
        for (int v = 0; v < phi.n; ++v) a[static_cast<std::size_t>(v)] = (bits >> v & 1) != 0;
        if (!phi.satisfied_by(a)) continue;
        if (out.models == 0) out.witness = a;
        ++out.models;
    }
    out.kind = out.models == 0 ? SatClass::Unsat : out.models == 1 ? SatClass::Unique : SatClass::Multiple;
    return out;
}

bool satisfiable_with(const CnfFormula& phi, const Literal& lit, const OracleConfig& cfg) {
    CnfFormula forced = phi;
    forced.clauses.push_back({lit});
    return sat_classify(forced, cfg).kind != SatClass::Unsat;
}

}  // namespace bcast
