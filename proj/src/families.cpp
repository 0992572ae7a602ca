#include "bcast/families.hpp"

#include <bit>

namespace bcast {

int ceil_log2(long long n) {
    if (n < 1) throw std::invalid_argument("ceil_log2 of non-positive value");
    int r = 0;
    while ((1LL << r) < n) ++r;
    return r;
}

int floor_log2(long long n) {
    if (n < 1) throw std::invalid_argument("floor_log2 of non-positive value");
    return 63 - std::countl_zero(static_cast<unsigned long long>(n));
}

std::string binary_label(unsigned long long bits, int width) {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int p = 0; p < width; ++p)
        if (bits >> (width - 1 - p) & 1ULL) s[static_cast<std::size_t>(p)] = '1';
    return s;
}

namespace {

// Parent of a non-root vertex: its rightmost zero bit set to one.
unsigned long long parent_bits(unsigned long long bits) { return bits | (~bits & (bits + 1)); }

void check_k(int k, const FamilyLimits& limits) {
    if (k < 0) throw GraphError("binomial tree degree must be non-negative");
    if (k > limits.max_k)
        throw GraphError("binomial tree degree " + std::to_string(k) + " exceeds configured maximum " +
                         std::to_string(limits.max_k));
}

}  // namespace

BinomialTree binomial_tree(int k, const std::string& ns, const FamilyLimits& limits) {
    check_k(k, limits);
    BinomialTree t;
    t.k = k;
    const unsigned long long size = 1ULL << k;
    const unsigned long long all = size - 1;
    // Root first, then descending bit value.
    for (unsigned long long v = size; v-- > 0;) t.graph.add_vertex({ns, binary_label(v, k)});
    auto index = [&](unsigned long long v) { return static_cast<int>(all - v); };
    for (unsigned long long v = 0; v < all; ++v) t.graph.add_edge(index(v), index(parent_bits(v) & all));
    t.root = {ns, binary_label(all, k)};
    if (k >= 1)
        for (unsigned long long i = 0; i < size / 2; ++i) t.leaves.push_back({ns, binary_label(i << 1, k)});
    return t;
}

PrunedBinomialTree pruned_binomial(int k, int i, const std::string& ns, const FamilyLimits& limits) {
    check_k(k, limits);
    if (i < 0 || i > k) throw GraphError("pruned binomial tree needs 0 <= i <= k");
    const unsigned long long size = 1ULL << k;
    const unsigned long long all = size - 1;
    // The branch BT_j hangs off the root at the vertex 1^{k-1-j} 0 1^j; its
    // members are exactly the strings whose first zero sits at position k-1-j.
    auto kept = [&](unsigned long long v) {
        if (v == all) return true;
        int first_zero = std::countl_one(v << (64 - k));
        int order = k - 1 - first_zero;
        return order >= i;
    };
    PrunedBinomialTree t;
    t.k = k;
    t.i = i;
    for (unsigned long long v = size; v-- > 0;)
        if (kept(v)) t.graph.add_vertex({ns, binary_label(v, k)});
    for (unsigned long long v = 0; v < all; ++v)
        if (kept(v)) t.graph.add_edge(VertexLabel{ns, binary_label(v, k)}, VertexLabel{ns, binary_label(parent_bits(v) & all, k)});
    t.root = {ns, binary_label(all, k)};
    return t;
}

int KnodelGraph::dimensions() const { return floor_log2(n); }

int KnodelGraph::neighbor(int x, int d) const {
    long long y = ((1LL << d) - 1 - x) % n;
    if (y < 0) y += n;
    return static_cast<int>(y);
}

VertexLabel KnodelGraph::vertex(int x) const { return graph.label(x); }

KnodelGraph knodel(int n, const std::string& ns, const FamilyLimits& limits) {
    if (n < 2 || n % 2 != 0) throw GraphError("Knodel graph needs an even order n >= 2, got " + std::to_string(n));
    if (n > limits.max_n) throw GraphError("Knodel order exceeds configured maximum");
    KnodelGraph kg;
    kg.n = n;
    for (int x = 0; x < n; ++x) kg.graph.add_vertex({ns, std::to_string(x)});
    std::map<std::pair<int, int>, int> dim;
    for (int d = 1; d <= floor_log2(n); ++d)
        for (int x = 0; x < n; ++x) {
            int y = kg.neighbor(x, d);
            if (x < y) {
                kg.graph.add_edge(x, y);
                dim[{x, y}] = d;
            }
        }
    for (auto e : kg.graph.edges()) kg.edge_dimension.push_back(dim.at(e));
    return kg;
}

Star star(int m, const std::string& ns) {
    if (m < 1) throw GraphError("star needs at least one vertex");
    Star s;
    for (int v = 0; v < m; ++v) s.graph.add_vertex({ns, std::to_string(v)});
    for (int v = 1; v < m; ++v) s.graph.add_edge(0, v);
    s.center = {ns, "0"};
    return s;
}

Path path(int m, const std::string& ns) {
    if (m < 1) throw GraphError("path needs at least one vertex");
    Path p;
    for (int v = 0; v < m; ++v) p.graph.add_vertex({ns, std::to_string(v)});
    for (int v = 1; v < m; ++v) p.graph.add_edge(v - 1, v);
    p.first = {ns, "0"};
    p.last = {ns, std::to_string(m - 1)};
    return p;
}

Graph compound(const Graph& g, const std::vector<VertexLabel>& attach, const Graph& tree, const VertexLabel& tree_root,
               const std::string& prefix) {
    tree.index_of(tree_root);
    for (const auto& a : attach)
        if (!g.contains(a)) throw GraphError("compound: attach vertex " + a.str() + " is not in the graph");

    Graph out = g;
    for (std::size_t j = 0; j < attach.size(); ++j) {
        std::string ns = prefix + "." + std::to_string(j);
        Graph replica;
        for (const auto& l : tree.labels()) replica.add_vertex({ns, l.local});
        for (auto [a, b] : tree.edges()) replica.add_edge(a, b);
        out = disjoint_union(out, replica);
        out = merge_vertices(out, attach[j], {ns, tree_root.local});
    }
    return out;
}

}  // namespace bcast
