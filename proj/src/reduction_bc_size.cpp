#include <algorithm>
#include <chrono>
#include <set>

#include "bcast/reductions.hpp"
#include "bcast/solver.hpp"
#include "reduction_util.hpp"

namespace bcast {

using detail::single_call;

namespace {

VertexLabel hub() { return {"hub", "s"}; }
VertexLabel clause(int i) { return {"clause", std::to_string(i)}; }  // 1-based
std::string lit_key(const Literal& l) { return l.name(); }

std::vector<Literal> literals(int n) {
    std::vector<Literal> out;
    for (int v = 0; v < n; ++v) {
        out.push_back({v, true});
        out.push_back({v, false});
    }
    return out;
}

// Root labels of T^l and H^l.
VertexLabel lit_root(const ReductionArtifact& art, const Literal& l) { return art.mark(lit_key(l)); }
VertexLabel assign_root(const ReductionArtifact& art, const Literal& l) { return art.mark("r^" + lit_key(l)); }

// Replays `plan` round by round, dropping calls that no longer apply, and
// lets every informed vertex left idle call an uninformed neighbour (the one
// with most uninformed neighbours of its own). Runs until all are informed.
BroadcastScheme complete_greedily(const Graph& g, const VertexLabel& origin, const BroadcastScheme& plan) {
    const int n = static_cast<int>(g.vertex_count());
    std::vector<char> informed(static_cast<std::size_t>(n), 0);
    informed[static_cast<std::size_t>(g.index_of(origin))] = 1;
    int count = 1;
    BroadcastScheme out;
    out.origins = {origin};
    for (std::size_t r = 0; count < n; ++r) {
        if (r > static_cast<std::size_t>(4 * n)) throw ReductionError("greedy completion made no progress");
        std::vector<char> busy(static_cast<std::size_t>(n), 0), hit(static_cast<std::size_t>(n), 0);
        std::vector<Call> calls;
        auto take = [&](int a, int b) {
            busy[static_cast<std::size_t>(a)] = 1;
            hit[static_cast<std::size_t>(b)] = 1;
            calls.push_back({g.label(a), g.label(b)});
        };
        if (r < plan.rounds.size())
            for (const auto& c : plan.rounds[r]) {
                auto a = g.find(c.from), b = g.find(c.to);
                if (!a || !b || !g.has_edge(*a, *b)) continue;
                if (!informed[static_cast<std::size_t>(*a)] || busy[static_cast<std::size_t>(*a)]) continue;
                if (informed[static_cast<std::size_t>(*b)] || hit[static_cast<std::size_t>(*b)]) continue;
                take(*a, *b);
            }
        for (int a = 0; a < n; ++a) {
            if (!informed[static_cast<std::size_t>(a)] || busy[static_cast<std::size_t>(a)]) continue;
            int best = -1, best_key = -1;
            for (int b : g.neighbors(a)) {
                if (informed[static_cast<std::size_t>(b)] || hit[static_cast<std::size_t>(b)]) continue;
                int key = 0;
                for (int x : g.neighbors(b)) key += informed[static_cast<std::size_t>(x)] ? 0 : 1;
                if (key > best_key) best = b, best_key = key;
            }
            if (best >= 0) take(a, best);
        }
        for (const auto& c : calls) informed[static_cast<std::size_t>(g.index_of(c.to))] = 1;
        count += static_cast<int>(calls.size());
        out.rounds.push_back(std::move(calls));
    }
    return out;
}

// The replayed schedule can overshoot t on small formulas. Then the exact
// solver gets a bounded attempt at a t-round scheme instead.
BroadcastScheme within_target(const Graph& g, const VertexLabel& origin, BroadcastScheme scheme, int t) {
    if (validate_scheme(g, scheme) <= t) return scheme;
    SolverConfig cfg;
    cfg.time_budget = std::chrono::seconds(30);
    Decision d = decide_within(g, {origin}, t, cfg);
    return d.witness ? *d.witness : scheme;
}

}  // namespace

ReductionArtifact bcsize_from_usat(const CnfFormula& phi, const OracleConfig& oracle) {
    phi.validate();
    const int n = phi.n;
    const int c = phi.c();
    if (n < 2) throw ReductionError("construction needs at least 2 variables, got " + std::to_string(n));
    if (c < 1) throw ReductionError("construction needs at least one clause");
    const int pend = 2 * n - ceil_log2(c) - 2;
    if (pend < 0)
        throw ReductionError("2n - ceil(log c) - 2 = " + std::to_string(pend) + " is negative (n = " + std::to_string(n) +
                             ", c = " + std::to_string(c) + ")");
    const int d1 = ceil_log2(c) + 1;
    const int d2 = ceil_log2(n) + 1;
    const int path_len = 2 * n + ceil_log2(n) + 2;

    ReductionArtifact art;
    Graph g;
    g.add_vertex(hub());
    BinomialTree tr = binomial_tree(d1 + d2 + 1, "Tr");
    g = disjoint_union(g, tr.graph);
    g.add_edge(hub(), tr.root);
    art.marks["s"] = hub();
    art.marks["r"] = tr.root;

    std::map<std::string, BinomialTree> t_of, h_of;
    for (const auto& l : literals(n)) {
        BinomialTree t = binomial_tree(d1, "T" + lit_key(l));
        BinomialTree h = binomial_tree(d2, "H" + lit_key(l));
        g = disjoint_union(g, t.graph);
        g = disjoint_union(g, h.graph);
        g.add_edge(hub(), h.root);
        art.marks[lit_key(l)] = t.root;
        art.marks["r^" + lit_key(l)] = h.root;
        art.groups["literals"].push_back(t.root);
        art.groups["assignment_roots"].push_back(h.root);
        t_of.emplace(lit_key(l), std::move(t));
        h_of.emplace(lit_key(l), std::move(h));
    }

    for (int i = 1; i <= c; ++i) {
        g.add_vertex(clause(i));
        art.marks["delta_" + std::to_string(i)] = clause(i);
        art.groups["clauses"].push_back(clause(i));
        for (int j = 1; j <= pend; ++j) {
            VertexLabel p{"cp" + std::to_string(i), std::to_string(j)};
            g.add_vertex(p);
            g.add_edge(clause(i), p);
        }
    }

    // Leaf i of T^l meets the (i+1)-th clause containing l.
    for (const auto& l : literals(n)) {
        const auto& t = t_of.at(lit_key(l));
        const auto holding = phi.clauses_with(l);
        if (holding.size() > t.leaves.size())
            throw ReductionError("literal " + l.name() + " occurs in " + std::to_string(holding.size()) + " clauses but T^" +
                                 l.name() + " has only " + std::to_string(t.leaves.size()) + " leaves");
        for (std::size_t i = 0; i < holding.size(); ++i) g.add_edge(t.leaves[i], clause(holding[i] + 1));
    }
    // Leaf k of H^l reaches both literals of x_k, except leaf var(l), which
    // reaches l alone.
    for (const auto& l : literals(n)) {
        const auto& h = h_of.at(lit_key(l));
        for (int k = 0; k < n; ++k) {
            const VertexLabel& leaf = h.leaves[static_cast<std::size_t>(k)];
            if (k == l.var) {
                g.add_edge(leaf, t_of.at(lit_key(l)).root);
            } else {
                g.add_edge(leaf, t_of.at(lit_key(Literal{k, true})).root);
                g.add_edge(leaf, t_of.at(lit_key(Literal{k, false})).root);
            }
        }
    }
    for (int i = 1; i <= c; ++i) g.add_edge(tr.leaves[static_cast<std::size_t>(i - 1)], clause(i));

    Path p = path(path_len, "path");
    g = disjoint_union(g, p.graph);
    g.add_edge(hub(), p.first);
    art.marks["p_0"] = p.first;
    art.marks["p_last"] = p.last;
    art.groups["path"] = p.graph.labels();

    art.graph = std::move(g);
    const long long lits = 2LL * n;
    art.params["n"] = n;
    art.params["c"] = c;
    art.params["d1"] = d1;
    art.params["d2"] = d2;
    art.params["t"] = 2LL * n + ceil_log2(n) + 3;
    art.params["pendants"] = pend;
    art.params["path_vertices"] = path_len;
    art.params["vertices"] = static_cast<long long>(art.graph.vertex_count());
    art.params["edges"] = static_cast<long long>(art.graph.edge_count());
    art.params["closed_form_vertices"] =
        (1LL << (d1 + d2 + 1)) + lits * (1LL << d1) + lits * (1LL << d2) + 1 + static_cast<long long>(c) * (1 + pend) + path_len;
    if (n <= oracle.max_sat_vars)
        art.params["expected_bc_size"] = expected_bc_size(phi, oracle);
    else
        art.warnings.push_back("expected center size not computed: n exceeds the SAT oracle limit");
    return art;
}

std::map<VertexLabel, BroadcastScheme> bcsize_center_schemes(const ReductionArtifact& art, const CnfFormula& phi,
                                                             const std::vector<bool>* assignment) {
    if (assignment && (static_cast<int>(assignment->size()) != phi.n || !phi.satisfied_by(*assignment)))
        throw ReductionError("assignment does not satisfy the formula");
    const Graph& g = art.graph;
    const int n = phi.n;
    const int d1 = static_cast<int>(art.param("d1"));
    const int d2 = static_cast<int>(art.param("d2"));
    const int t = static_cast<int>(art.param("t"));
    const VertexLabel s = art.mark("s");
    const VertexLabel r = art.mark("r");
    const auto& pathv = art.group("path");
    const auto lits = literals(n);

    auto path_run = [&](int start) {
        std::vector<BroadcastScheme> parts{single_call(s, pathv[0], start)};
        for (std::size_t i = 0; i + 1 < pathv.size(); ++i)
            parts.push_back(single_call(pathv[i], pathv[i + 1], start + 1 + static_cast<int>(i)));
        return parts;
    };
    auto tree_run = [&](const std::string& ns, int degree, int informed_at) {
        return shifted(binomial_scheme(degree, ns), informed_at);
    };
    auto clause_calls = [&](int round) {
        // The first c leaves of T^r reach the clauses once T^r is done.
        std::vector<BroadcastScheme> parts;
        for (const auto& dv : art.group("clauses"))
            for (int nb : g.neighbors(g.index_of(dv)))
                if (g.label(nb).ns == "Tr") parts.push_back(single_call(g.label(nb), dv, round));
        return parts;
    };

    std::map<VertexLabel, BroadcastScheme> out;
    // s and r: one calls the other, r covers T^r and the clauses, s runs the
    // path and then the assignment trees one by one.
    for (const auto& [origin, other] : {std::pair{s, r}, std::pair{r, s}}) {
        std::vector<BroadcastScheme> plan{single_call(origin, other, 1), tree_run("Tr", d1 + d2 + 1, 1)};
        for (auto& part : path_run(2)) plan.push_back(std::move(part));
        for (std::size_t j = 0; j < lits.size(); ++j) {
            plan.push_back(single_call(s, assign_root(art, lits[j]), 3 + static_cast<int>(j)));
            plan.push_back(tree_run("H" + lits[j].name(), d2, 3 + static_cast<int>(j)));
        }
        for (auto& part : clause_calls(d1 + d2 + 3)) plan.push_back(std::move(part));
        out[origin] = within_target(g, origin, complete_greedily(g, origin, overlay({origin}, plan)), t);
    }

    if (!assignment) return out;
    for (const auto& l : lits) {
        if ((*assignment)[static_cast<std::size_t>(l.var)] != l.positive) continue;
        const VertexLabel origin = assign_root(art, l);
        // r^l reaches s first; its own tree then picks the literals of the
        // assignment, whose trees reach the clauses.
        std::vector<BroadcastScheme> plan{single_call(origin, s, 1), tree_run("H" + l.name(), d2, 1)};
        for (auto& part : path_run(2)) plan.push_back(std::move(part));
        plan.push_back(single_call(s, r, 3));
        plan.push_back(tree_run("Tr", d1 + d2 + 1, 3));
        int next = 4;
        for (const auto& other : lits) {
            if (other == l) continue;
            plan.push_back(single_call(s, assign_root(art, other), next));
            plan.push_back(tree_run("H" + other.name(), d2, next));
            ++next;
        }
        const auto& leaves = binomial_tree(d2, "H" + l.name()).leaves;
        for (int k = 0; k < n; ++k) {
            const Literal pick{k, static_cast<bool>((*assignment)[static_cast<std::size_t>(k)])};
            plan.push_back(single_call(leaves[static_cast<std::size_t>(k)], lit_root(art, pick), d2 + 2));
            plan.push_back(tree_run("T" + pick.name(), d1, d2 + 2));
        }
        out[origin] = within_target(g, origin, complete_greedily(g, origin, overlay({origin}, plan)), t);
    }
    return out;
}

int case4_lower_bound(const ReductionArtifact& art, const VertexLabel& v) {
    const Graph& g = art.graph;
    const int iv = g.index_of(v);
    if (v == art.mark("s") || v == art.mark("r")) return 0;
    const auto& roots = art.group("assignment_roots");
    if (std::find(roots.begin(), roots.end(), v) != roots.end()) return 0;

    const auto dist = bfs_distances(g, iv);
    int bound = 0;
    for (int d : dist) bound = std::max(bound, d);  // the far path end, among others
    // A clause vertex alone can reach its pendants, one per round.
    const int pend = static_cast<int>(art.param("pendants"));
    for (const auto& dv : art.group("clauses")) {
        const int id = g.index_of(dv);
        const bool own = dist[static_cast<std::size_t>(id)] == 1 && g.label(iv).ns.rfind("cp", 0) == 0 && g.degree(iv) == 1;
        bound = std::max(bound, dist[static_cast<std::size_t>(id)] + pend - (own ? 1 : 0));
    }
    return bound;
}

int expected_bc_size(const CnfFormula& phi, const OracleConfig& oracle) {
    int size = 2;
    for (const auto& l : literals(phi.n))
        if (satisfiable_with(phi, l, oracle)) ++size;
    return size;
}

}  // namespace bcast
