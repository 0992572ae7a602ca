#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bcast/error.hpp"

namespace bcast {

// A vertex name "namespace:local". The namespace tags the component a vertex
// came from (a tree, a gadget); the local part is a binary string or an index.
struct VertexLabel {
    std::string ns;
    std::string local;

    VertexLabel() = default;
    VertexLabel(std::string ns_, std::string local_) : ns(std::move(ns_)), local(std::move(local_)) {}

    // Splits at the first ':'; the namespace must be non-empty.
    static VertexLabel parse(std::string_view text);
    std::string str() const { return ns + ":" + local; }

    auto operator<=>(const VertexLabel&) const = default;
};

inline constexpr int kUnreachable = -1;

// Labeled simple undirected graph. Vertices keep insertion order, which makes
// every traversal and serialization deterministic.
class Graph {
public:
    Graph() = default;

    int add_vertex(const VertexLabel& label);
    // Adds {a,b}. Self-loops and already-present edges are ignored; the return
    // value says whether an edge was actually inserted.
    bool add_edge(const VertexLabel& a, const VertexLabel& b);
    bool add_edge(int a, int b);

    std::size_t vertex_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    bool contains(const VertexLabel& label) const;
    int index_of(const VertexLabel& label) const;  // throws GraphError when absent
    std::optional<int> find(const VertexLabel& label) const;
    const VertexLabel& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
    const std::vector<VertexLabel>& labels() const { return labels_; }

    // Sorted ascending by vertex index.
    const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(int a, int b) const;
    bool has_edge(const VertexLabel& a, const VertexLabel& b) const;

    // Each edge once as (lower index, higher index), in index order.
    std::vector<std::pair<int, int>> edges() const;

    // Labels merged into a vertex (see merge_vertices), keyed by the survivor.
    const std::map<VertexLabel, std::vector<VertexLabel>>& provenance() const { return provenance_; }
    void record_provenance(const VertexLabel& survivor, const VertexLabel& absorbed);

    // Checks the undirected/simple invariants; throws GraphError with detail.
    void validate() const;

private:
    friend Graph merge_vertices(const Graph&, const VertexLabel&, const VertexLabel&);

    std::vector<VertexLabel> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> adj_;
    std::size_t edge_count_ = 0;
    std::map<VertexLabel, std::vector<VertexLabel>> provenance_;
};

Graph disjoint_union(const Graph& g1, const Graph& g2);

// Merges b into a. The survivor keeps a's label and position; b's label (and
// anything b had absorbed) is recorded in a's provenance.
Graph merge_vertices(const Graph& g, const VertexLabel& a, const VertexLabel& b);

// Breadth-first distances from v; kUnreachable marks other components.
std::vector<int> bfs_distances(const Graph& g, int v);
int distance(const Graph& g, const VertexLabel& u, const VertexLabel& v);
int eccentricity(const Graph& g, const VertexLabel& v);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

// Induced subgraph on the given vertex indices (labels preserved).
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Returns a copy with every label moved into namespace `ns`, the old full
// label becoming the local part ("a:1" -> "ns:a:1").
Graph prefixed(const Graph& g, const std::string& ns);

}  // namespace bcast
