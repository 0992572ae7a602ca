#pragma once

#include <string>
#include <vector>

#include "bcast/graph.hpp"

namespace bcast {

struct FamilyLimits {
    int max_k = 20;
    int max_n = 1 << 20;
};

// BT_k. Vertices are the k-bit strings; the root is 1^k ("" when k = 0) and
// a vertex's parent is obtained by flipping its rightmost '0' to '1'.
struct BinomialTree {
    Graph graph;
    int k = 0;
    VertexLabel root;
    // leaves[i] = bin(i) on k-1 bits followed by '0'
    std::vector<VertexLabel> leaves;
};

// BT_k with its i smallest root branches (BT_0 .. BT_{i-1}) removed.
struct PrunedBinomialTree {
    Graph graph;
    int k = 0;
    int i = 0;
    VertexLabel root;
};

struct KnodelGraph {
    Graph graph;
    int n = 0;
    // Parallel to graph.edges().
    std::vector<int> edge_dimension;

    int dimensions() const;
    int neighbor(int x, int d) const;
    VertexLabel vertex(int x) const;
};

struct Star {
    Graph graph;
    VertexLabel center;
};

struct Path {
    Graph graph;
    VertexLabel first;
    VertexLabel last;
};

BinomialTree binomial_tree(int k, const std::string& ns = "bt", const FamilyLimits& limits = {});
PrunedBinomialTree pruned_binomial(int k, int i, const std::string& ns = "pbt", const FamilyLimits& limits = {});
KnodelGraph knodel(int n, const std::string& ns = "kg", const FamilyLimits& limits = {});

// Vertices ns:0 (center) .. ns:m-1.
Star star(int m, const std::string& ns = "star");
// Vertices ns:0 .. ns:m-1 in a line.
Path path(int m, const std::string& ns = "path");

// attach ×_t tree: for the j-th attach vertex a replica of `tree` in namespace
// "<prefix>.<j>" is added and its root merged into the attach vertex.
Graph compound(const Graph& g, const std::vector<VertexLabel>& attach, const Graph& tree, const VertexLabel& tree_root,
               const std::string& prefix);

// Label of a binomial-tree vertex from its bit string.
std::string binary_label(unsigned long long bits, int width);

int ceil_log2(long long n);   // ceil(log2 n), n >= 1
int floor_log2(long long n);  // floor(log2 n), n >= 1

}  // namespace bcast
