#include <algorithm>
#include <array>

#include "bcast/reductions.hpp"
#include "reduction_util.hpp"

namespace bcast {

using detail::relabeled;
using detail::single_call;

namespace {

// Knödel vertex hosting each of v_s, r1..r5. KG_6 is the 6-cycle
// 0-1-2-5-4-3; this placement puts the roots around it in the order
// v_s, r1, r4, r3, r2, r5, so {r2, r3, r4} hangs off the rest by the two
// edges r1-r4 and r2-r5.
constexpr std::array<int, 6> kSlot{0, 1, 4, 5, 2, 3};

std::string tree_ns(int i) { return "T" + std::to_string(i); }

}  // namespace

ReductionArtifact bg_from_stbt(const Graph& g_s, const VertexLabel& v_s) {
    const int n_s = static_cast<int>(g_s.vertex_count());
    if (n_s < 2) throw ReductionError("source graph needs at least 2 vertices");
    if (!is_connected(g_s)) throw ReductionError("source graph is disconnected");
    g_s.index_of(v_s);
    const int t = ceil_log2(n_s);

    KnodelGraph kg = knodel(6, "kg");
    Graph g = kg.graph;
    ReductionArtifact art;
    std::array<VertexLabel, 7> r;
    for (int i = 1; i <= 5; ++i) {
        BinomialTree tree = binomial_tree(t + 1, tree_ns(i));
        r[static_cast<std::size_t>(i)] = kg.vertex(kSlot[static_cast<std::size_t>(i)]);
        g = disjoint_union(g, tree.graph);
        g = merge_vertices(g, r[static_cast<std::size_t>(i)], tree.root);
        auto& members = art.groups[tree_ns(i)];
        for (const auto& l : tree.graph.labels()) members.push_back(l == tree.root ? r[static_cast<std::size_t>(i)] : l);
    }
    BinomialTree t6 = binomial_tree(t, tree_ns(6));
    r[6] = t6.root;
    g = disjoint_union(g, t6.graph);
    art.groups[tree_ns(6)] = t6.graph.labels();

    Graph inner = prefixed(g_s, "s");
    const VertexLabel vs{"s", v_s.str()};
    g = disjoint_union(g, inner);
    g = merge_vertices(g, vs, kg.vertex(kSlot[0]));
    art.groups["G_s"] = inner.labels();

    for (const char* name : {"T1", "T5", "T6", "G_s"})
        for (const auto& u : art.groups[name]) {
            g.add_edge(u, r[1]);
            g.add_edge(u, r[5]);
        }
    g.add_edge(vs, r[6]);
    for (const char* name : {"T2", "T3", "T4"})
        for (const auto& u : art.groups[name]) {
            g.add_edge(u, r[2]);
            g.add_edge(u, r[4]);
        }

    auto& core = art.groups["KG"];
    for (int x = 0; x < 6; ++x) core.push_back(x == kSlot[0] ? vs : kg.vertex(x));

    art.graph = std::move(g);
    art.marks["v_s"] = vs;
    for (int i = 1; i <= 6; ++i) art.marks["r" + std::to_string(i)] = r[static_cast<std::size_t>(i)];

    const long long p = 1LL << t;
    art.params["t"] = t;
    art.params["n_s"] = n_s;
    art.params["e_s"] = static_cast<long long>(g_s.edge_count());
    art.params["vertices"] = static_cast<long long>(art.graph.vertex_count());
    art.params["edges"] = static_cast<long long>(art.graph.edge_count());
    art.params["closed_form_vertices"] = 11 * p + n_s;
    art.params["closed_form_edges"] = 33 * p + 2LL * n_s + static_cast<long long>(g_s.edge_count()) + 1;
    art.params["expected_time"] = t + 4;
    if (art.params["edges"] != art.params["closed_form_edges"])
        art.warnings.push_back("edge count " + std::to_string(art.params["edges"]) + " differs from the closed form " +
                               std::to_string(art.params["closed_form_edges"]) +
                               " (the closed form counts self-loops and repeated adjacencies)");
    if (ceil_log2(art.params["vertices"]) != t + 4)
        art.warnings.push_back("ceil(log |V_u|) != t + 4");
    return art;
}

int bg_originator_case(const ReductionArtifact& art, const VertexLabel& v) {
    auto in = [&](const char* name) {
        const auto& grp = art.group(name);
        return std::find(grp.begin(), grp.end(), v) != grp.end();
    };
    if (in("KG")) return 1;
    for (const char* name : {"T1", "T5", "T6", "G_s"})
        if (in(name)) return 2;
    for (const char* name : {"T2", "T3", "T4"})
        if (in(name)) return 3;
    throw ReductionError(v.str() + " is not a vertex of the construction");
}

BroadcastScheme bg_yes_scheme(const ReductionArtifact& art, const VertexLabel& originator, const BroadcastScheme& inner) {
    const Graph& g = art.graph;
    const int t = static_cast<int>(art.param("t"));
    const VertexLabel vs = art.mark("v_s");

    // Inner scheme, moved into the G_s namespace and checked on G_s itself.
    std::map<VertexLabel, VertexLabel> into;
    for (const auto& l : art.group("G_s")) into[VertexLabel::parse(l.local)] = l;
    BroadcastScheme moved = relabeled(inner, into);
    if (moved.origins != std::vector<VertexLabel>{vs})
        throw ReductionError("inner scheme must originate at " + vs.local + " alone");
    std::vector<int> idx;
    for (const auto& l : art.group("G_s")) idx.push_back(g.index_of(l));
    int inner_time = 0;
    try {
        inner_time = validate_scheme(induced_subgraph(g, idx), moved);
    } catch (const Error& e) {
        throw ReductionError(std::string("inner scheme is invalid: ") + e.what());
    }
    if (inner_time > t)
        throw ReductionError("inner scheme takes " + std::to_string(inner_time) + " rounds, more than t = " + std::to_string(t));

    // The core vertex whose part the originator plays in the first rounds: itself
    // inside the core, otherwise the core vertex whose two neighbours are exactly
    // the hubs the originator is joined to.
    KnodelGraph kg = knodel(6, "kg");
    std::map<VertexLabel, VertexLabel> core_name{{kg.vertex(kSlot[0]), vs}};
    auto core_label = [&](int x) {
        VertexLabel l = kg.vertex(x);
        auto it = core_name.find(l);
        return it == core_name.end() ? l : it->second;
    };
    const int which = bg_originator_case(art, originator);
    int m = -1;
    for (int x = 0; x < 6 && m < 0; ++x) {
        if (which == 1) {
            if (core_label(x) == originator) m = x;
        } else if (g.has_edge(originator, core_label(kg.neighbor(x, 1))) && g.has_edge(originator, core_label(kg.neighbor(x, 2)))) {
            m = x;
        }
    }
    if (m < 0) throw ReductionError("no core vertex for " + originator.str() + " to stand in for");

    BroadcastScheme core = relabeled(knodel_scheme(kg, kg.vertex(m)), core_name);
    if (which != 1) {
        const VertexLabel stand_in = core_label(m);
        for (auto& round : core.rounds)
            for (auto& c : round)
                if (c.from == stand_in) c.from = originator;
        // The dimension-1 partner of the replaced vertex has nothing to do in
        // the last core round and fills it in.
        core.rounds.back().push_back({core_label(kg.neighbor(m, 1)), stand_in});
    }

    std::vector<BroadcastScheme> parts{core};
    for (int i = 1; i <= 5; ++i) {
        const VertexLabel root{tree_ns(i), std::string(static_cast<std::size_t>(t + 1), '1')};
        parts.push_back(shifted(relabeled(binomial_scheme(t + 1, tree_ns(i)), {{root, art.mark("r" + std::to_string(i))}}), 3));
    }
    parts.push_back(single_call(vs, art.mark("r6"), 4));
    parts.push_back(shifted(moved, 4));
    parts.push_back(shifted(binomial_scheme(t, tree_ns(6)), 4));
    return overlay({originator}, parts);
}

}  // namespace bcast
