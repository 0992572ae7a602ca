#include <algorithm>
#include <set>

#include "bcast/reductions.hpp"
#include "reduction_util.hpp"

namespace bcast {

using detail::relabeled;
using detail::restricted;
using detail::single_call;

const VertexLabel& ReductionArtifact::mark(const std::string& role) const {
    auto it = marks.find(role);
    if (it == marks.end()) throw ReductionError("artifact has no mark '" + role + "'");
    return it->second;
}

long long ReductionArtifact::param(const std::string& name) const {
    auto it = params.find(name);
    if (it == params.end()) throw ReductionError("artifact has no param '" + name + "'");
    return it->second;
}

const std::vector<VertexLabel>& ReductionArtifact::group(const std::string& name) const {
    auto it = groups.find(name);
    if (it == groups.end()) throw ReductionError("artifact has no group '" + name + "'");
    return it->second;
}

namespace {

VertexLabel elem(const std::string& name) { return {"elem", name}; }
VertexLabel triple(int j) { return {"triple", std::to_string(j)}; }

}  // namespace

Graph graph_of_3dm(const ThreeDMInstance& inst) {
    inst.validate();
    Graph g;
    for (const auto* set : {&inst.X, &inst.Y, &inst.Z})
        for (const auto& e : *set) g.add_vertex(elem(e));
    for (int j = 0; j < inst.w(); ++j) {
        g.add_vertex(triple(j));
        for (const auto& e : inst.W[static_cast<std::size_t>(j)]) g.add_edge(triple(j), elem(e));
    }
    return g;
}

ReductionArtifact stbt_from_3dm(const ThreeDMInstance& inst) {
    inst.validate();
    const int k = inst.k;
    const int w = inst.w();
    if (w == 0) throw ReductionError("3DM instance has no triples");

    ReductionArtifact art;
    art.params["k"] = k;
    art.params["w"] = w;
    if (w < k) {
        // Fewer triples than k: no matching can exist, so any no-instance will do.
        Path p = path(4, "path");
        art.graph = p.graph;
        art.marks["v_0"] = p.first;
        art.params["no_instance"] = 1;
        art.params["vertices"] = 4;
        art.params["edges"] = 3;
        art.params["expected_time"] = 2;
        art.warnings.push_back("w < k: mapped to the path P_4 from an endpoint (broadcast time 3 > 2)");
        return art;
    }

    const int L = ceil_log2(w);
    BinomialTree top = binomial_tree(L + 1, "top");
    std::vector<VertexLabel> l1(top.leaves.begin(), top.leaves.begin() + k);
    std::vector<VertexLabel> l2(top.leaves.begin() + k, top.leaves.begin() + w);
    std::vector<VertexLabel> l3(top.leaves.begin() + w, top.leaves.end());

    BinomialTree bt3 = binomial_tree(3, "b3");
    PrunedBinomialTree bt4 = pruned_binomial(4, 1, "b4");
    Graph g = compound(top.graph, l1, bt3.graph, bt3.root, "L1");
    g = compound(g, l2, bt4.graph, bt4.root, "L2");
    g = disjoint_union(g, graph_of_3dm(inst));

    std::vector<VertexLabel> ws;
    for (int j = 0; j < w; ++j) ws.push_back(triple(j));
    for (const auto* side : {&l1, &l2})
        for (const auto& u : *side)
            for (const auto& t : ws) g.add_edge(u, t);
    for (const auto& x : inst.X) {
        g.add_vertex({"xp", x});
        g.add_vertex({"xpp", x});
        g.add_edge(elem(x), {"xp", x});
        g.add_edge(elem(x), {"xpp", x});
    }
    for (const auto& y : inst.Y) {
        g.add_vertex({"yp", y});
        g.add_edge(elem(y), {"yp", y});
    }

    art.graph = std::move(g);
    art.marks["v_0"] = top.root;
    art.groups["L1"] = l1;
    art.groups["L2"] = l2;
    art.groups["L3"] = l3;
    art.groups["W"] = ws;
    for (const auto& [name, set] : {std::pair{"X", &inst.X}, std::pair{"Y", &inst.Y}, std::pair{"Z", &inst.Z}}) {
        auto& dst = art.groups[name];
        for (const auto& e : *set) dst.push_back(elem(e));
    }

    const long long n = static_cast<long long>(art.graph.vertex_count());
    art.params["L"] = L;
    art.params["vertices"] = n;
    art.params["closed_form_vertices"] = 15LL * w + (1LL << (L + 1)) - k;
    art.params["edges"] = static_cast<long long>(art.graph.edge_count());
    art.params["expected_time"] = L + 5;
    art.params["log_vertices"] = ceil_log2(n);
    if (ceil_log2(n) != L + 5)
        art.warnings.push_back("range condition fails: ceil(log " + std::to_string(n) + ") = " + std::to_string(ceil_log2(n)) +
                               " but ceil(log w) + 5 = " + std::to_string(L + 5));
    return art;
}

BroadcastScheme stbt_yes_scheme(const ReductionArtifact& art, const std::vector<Triple>& matching) {
    if (art.params.contains("no_instance")) throw ReductionError("instance has fewer triples than k; no matching exists");
    const int k = static_cast<int>(art.param("k"));
    const int L = static_cast<int>(art.param("L"));
    const Graph& g = art.graph;
    if (static_cast<int>(matching.size()) != k)
        throw ReductionError("matching has " + std::to_string(matching.size()) + " triples, expected " + std::to_string(k));

    // Locate each matched triple's vertex by its element neighbourhood.
    std::vector<VertexLabel> chosen;
    std::set<std::string> used;
    for (const auto& t : matching) {
        for (const auto& e : t)
            if (!used.insert(e).second) throw ReductionError("matching reuses element '" + e + "'");
        std::optional<VertexLabel> hit;
        for (const auto& wv : art.group("W")) {
            bool all = true;
            for (const auto& e : t) all = all && g.contains(elem(e)) && g.has_edge(wv, elem(e));
            if (all) hit = wv;
        }
        if (!hit) throw ReductionError("(" + t[0] + "," + t[1] + "," + t[2] + ") is not a triple of the instance");
        chosen.push_back(*hit);
    }

    const auto& l1 = art.group("L1");
    const auto& l2 = art.group("L2");
    const VertexLabel v0 = art.mark("v_0");
    std::vector<BroadcastScheme> parts{binomial_scheme(L + 1, "top")};

    BinomialTree bt3 = binomial_tree(3, "b3");
    for (int i = 0; i < k; ++i) {
        const VertexLabel& leaf = l1[static_cast<std::size_t>(i)];
        const VertexLabel& wv = chosen[static_cast<std::size_t>(i)];
        parts.push_back(single_call(leaf, wv, L + 2));
        const std::string ns = "L1." + std::to_string(i);
        parts.push_back(shifted(relabeled(binomial_scheme(3, ns), {{{ns, bt3.root.local}, leaf}}), L + 2));

        const Triple& t = matching[static_cast<std::size_t>(i)];
        parts.push_back(single_call(wv, elem(t[0]), L + 3));
        parts.push_back(single_call(wv, elem(t[1]), L + 4));
        parts.push_back(single_call(wv, elem(t[2]), L + 5));
        parts.push_back(single_call(elem(t[0]), {"xp", t[0]}, L + 4));
        parts.push_back(single_call(elem(t[0]), {"xpp", t[0]}, L + 5));
        parts.push_back(single_call(elem(t[1]), {"yp", t[1]}, L + 5));
    }

    // Each L2 leaf spends four rounds on its pruned tree, whose root is free
    // in the last of them, and then reaches one unmatched triple.
    PrunedBinomialTree bt4 = pruned_binomial(4, 1, "b4");
    std::vector<VertexLabel> rest;
    for (const auto& wv : art.group("W"))
        if (std::find(chosen.begin(), chosen.end(), wv) == chosen.end()) rest.push_back(wv);
    for (std::size_t i = 0; i < l2.size(); ++i) {
        const std::string ns = "L2." + std::to_string(i);
        Graph local;
        for (const auto& l : bt4.graph.labels()) local.add_vertex({ns, l.local});
        BroadcastScheme tree = restricted(binomial_scheme(4, ns), local);
        parts.push_back(shifted(relabeled(tree, {{{ns, bt4.root.local}, l2[i]}}), L + 1));
        parts.push_back(single_call(l2[i], rest[i], L + 5));
    }

    return overlay({v0}, parts);
}

}  // namespace bcast
