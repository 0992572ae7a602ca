#include "catalog.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "bcast/families.hpp"
#include "bcast/oracle.hpp"

namespace bcast::testing {

namespace {

VertexLabel at(const std::string& ns, int i) { return {ns, std::to_string(i)}; }

Graph from_pruefer(const std::vector<int>& seq, int n, const std::string& ns) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(at(ns, i));
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int x : seq) ++deg[static_cast<std::size_t>(x)];
    for (int x : seq) {
        int leaf = 0;
        while (deg[static_cast<std::size_t>(leaf)] != 1) ++leaf;
        g.add_edge(leaf, x);
        --deg[static_cast<std::size_t>(leaf)];
        --deg[static_cast<std::size_t>(x)];
    }
    int a = -1;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] == 1) {
            if (a < 0) a = v;
            else g.add_edge(a, v);
        }
    return g;
}

std::string rooted_code(const Graph& g, int v, int parent) {
    std::vector<std::string> kids;
    for (int u : g.neighbors(v))
        if (u != parent) kids.push_back(rooted_code(g, u, v));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const auto& k : kids) out += k;
    return out + ")";
}

// Smallest rooted code over the tree's centers.
std::string tree_code(const Graph& g) {
    const int n = static_cast<int>(g.vertex_count());
    std::vector<int> ecc(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        auto d = bfs_distances(g, v);
        ecc[static_cast<std::size_t>(v)] = *std::max_element(d.begin(), d.end());
    }
    const int radius = *std::min_element(ecc.begin(), ecc.end());
    std::string best;
    for (int v = 0; v < n; ++v)
        if (ecc[static_cast<std::size_t>(v)] == radius) {
            std::string c = rooted_code(g, v, -1);
            if (best.empty() || c < best) best = c;
        }
    return best;
}

}  // namespace

std::vector<Graph> trees_up_to_iso(int n) {
    if (n == 1) {
        Graph g;
        g.add_vertex(at("t", 0));
        return {g};
    }
    std::vector<Graph> out;
    std::set<std::string> seen;
    std::vector<int> seq(static_cast<std::size_t>(std::max(n - 2, 0)), 0);
    while (true) {
        Graph g = from_pruefer(seq, n, "t");
        if (seen.insert(tree_code(g)).second) out.push_back(g);
        std::size_t i = 0;
        while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
        if (i == seq.size()) break;
    }
    return out;
}

Graph random_tree(int n, std::mt19937& rng, const std::string& ns) {
    if (n == 1) {
        Graph g;
        g.add_vertex(at(ns, 0));
        return g;
    }
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(static_cast<std::size_t>(std::max(n - 2, 0)));
    for (int& x : seq) x = pick(rng);
    return from_pruefer(seq, n, ns);
}

Graph random_connected(int n, double p, std::mt19937& rng, const std::string& ns) {
    Graph g = random_tree(n, rng, ns);
    std::bernoulli_distribution coin(p);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!g.has_edge(a, b) && coin(rng)) g.add_edge(a, b);
    return g;
}

const std::vector<Graph>& small_catalog() {
    static const std::vector<Graph> all = [] {
        std::vector<Graph> out;
        for (int n = 2; n <= 7; ++n)
            for (auto& t : trees_up_to_iso(n)) out.push_back(std::move(t));
        std::mt19937 rng(20231105);
        std::uniform_int_distribution<int> size(2, 7);
        const double density[] = {0.15, 0.3, 0.5, 0.75};
        for (int i = 0; i < 520; ++i) out.push_back(random_connected(size(rng), density[i % 4], rng));
        return out;
    }();
    return all;
}

Graph complete_graph(int n, const std::string& ns) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(at(ns, i));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
    return g;
}

Graph cycle_graph(int n, const std::string& ns) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(at(ns, i));
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

ThreeDMInstance sample_3dm() {
    ThreeDMInstance inst;
    inst.k = 3;
    inst.X = {"x1", "x2", "x3"};
    inst.Y = {"y1", "y2", "y3"};
    inst.Z = {"z1", "z2", "z3"};
    inst.W = {{"x1", "y1", "z1"}, {"x2", "y2", "z2"}, {"x3", "y3", "z3"}, {"x3", "y2", "z1"}};
    return inst;
}

bool center_size_by_oracle(const Graph& g, int x) {
    const int n = static_cast<int>(g.vertex_count());
    OracleConfig cfg;
    cfg.max_vertices = kOracleHardLimit;
    std::vector<int> b;
    for (const auto& v : g.labels()) b.push_back(oracle_broadcast_time(g, {v}, cfg));
    for (int i = ceil_log2(n); i <= n; ++i) {
        int size = 0;
        for (int bv : b)
            if (bv <= i) ++size;
        if (size != 0) return size == x;
    }
    return false;
}

std::pair<std::vector<VertexLabel>, int> center_by_oracle(const Graph& g) {
    OracleConfig cfg;
    cfg.max_vertices = kOracleHardLimit;
    std::vector<int> b;
    for (const auto& v : g.labels()) b.push_back(oracle_broadcast_time(g, {v}, cfg));
    const int best = *std::min_element(b.begin(), b.end());
    std::vector<VertexLabel> members;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] == best) members.push_back(g.labels()[i]);
    return {members, best};
}

}  // namespace bcast::testing
