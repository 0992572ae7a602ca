#include "bcast/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace bcast {

VertexLabel VertexLabel::parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos || colon == 0)
        throw FormatError("malformed vertex label '" + std::string(text) + "' (expected namespace:local)");
    return {std::string(text.substr(0, colon)), std::string(text.substr(colon + 1))};
}

int Graph::add_vertex(const VertexLabel& label) {
    if (label.ns.empty() || label.ns.find(':') != std::string::npos)
        throw GraphError("invalid namespace in label '" + label.str() + "'");
    auto key = label.str();
    if (index_.contains(key)) throw GraphError("duplicate vertex " + key);
    int id = static_cast<int>(labels_.size());
    labels_.push_back(label);
    index_.emplace(std::move(key), id);
    adj_.emplace_back();
    return id;
}

bool Graph::add_edge(const VertexLabel& a, const VertexLabel& b) {
    return add_edge(index_of(a), index_of(b));
}

bool Graph::add_edge(int a, int b) {
    auto n = static_cast<int>(labels_.size());
    if (a < 0 || b < 0 || a >= n || b >= n) throw GraphError("edge endpoint out of range");
    if (a == b) return false;
    auto& na = adj_[static_cast<std::size_t>(a)];
    auto it = std::lower_bound(na.begin(), na.end(), b);
    if (it != na.end() && *it == b) return false;
    na.insert(it, b);
    auto& nb = adj_[static_cast<std::size_t>(b)];
    nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
    ++edge_count_;
    return true;
}

bool Graph::contains(const VertexLabel& label) const { return index_.contains(label.str()); }

std::optional<int> Graph::find(const VertexLabel& label) const {
    auto it = index_.find(label.str());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int Graph::index_of(const VertexLabel& label) const {
    auto it = index_.find(label.str());
    if (it == index_.end()) throw GraphError("no vertex " + label.str());
    return it->second;
}

bool Graph::has_edge(int a, int b) const {
    const auto& na = neighbors(a);
    return std::binary_search(na.begin(), na.end(), b);
}

bool Graph::has_edge(const VertexLabel& a, const VertexLabel& b) const {
    auto ia = find(a), ib = find(b);
    return ia && ib && has_edge(*ia, *ib);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int v = 0; v < static_cast<int>(adj_.size()); ++v)
        for (int u : adj_[static_cast<std::size_t>(v)])
            if (v < u) out.emplace_back(v, u);
    return out;
}

void Graph::record_provenance(const VertexLabel& survivor, const VertexLabel& absorbed) {
    provenance_[survivor].push_back(absorbed);
}

void Graph::validate() const {
    std::size_t half_edges = 0;
    for (int v = 0; v < static_cast<int>(adj_.size()); ++v) {
        const auto& nv = adj_[static_cast<std::size_t>(v)];
        if (!std::is_sorted(nv.begin(), nv.end()) || std::adjacent_find(nv.begin(), nv.end()) != nv.end())
            throw GraphError("adjacency of " + label(v).str() + " is not a set");
        for (int u : nv) {
            if (u == v) throw GraphError("self-loop at " + label(v).str());
            if (u < 0 || u >= static_cast<int>(adj_.size()))
                throw GraphError("dangling endpoint next to " + label(v).str());
            if (!has_edge(u, v))
                throw GraphError("asymmetric edge " + label(v).str() + " -> " + label(u).str());
        }
        half_edges += nv.size();
    }
    if (half_edges != 2 * edge_count_) throw GraphError("edge count out of sync");
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    std::set<std::string> spaces;
    for (const auto& l : g1.labels()) spaces.insert(l.ns);
    for (const auto& l : g2.labels())
        if (spaces.contains(l.ns)) throw GraphError("namespace collision at label " + l.str());

    Graph out = g1;
    int offset = static_cast<int>(g1.vertex_count());
    for (const auto& l : g2.labels()) out.add_vertex(l);
    for (auto [a, b] : g2.edges()) out.add_edge(a + offset, b + offset);
    for (const auto& [survivor, absorbed] : g2.provenance())
        for (const auto& l : absorbed) out.record_provenance(survivor, l);
    return out;
}

Graph merge_vertices(const Graph& g, const VertexLabel& a, const VertexLabel& b) {
    if (a == b) throw GraphError("cannot merge " + a.str() + " with itself");
    int ia = g.index_of(a);
    int ib = g.index_of(b);

    Graph out;
    std::vector<int> remap(g.vertex_count(), -1);
    for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
        if (v == ib) continue;
        remap[static_cast<std::size_t>(v)] = out.add_vertex(g.label(v));
    }
    remap[static_cast<std::size_t>(ib)] = remap[static_cast<std::size_t>(ia)];
    for (auto [u, v] : g.edges()) out.add_edge(remap[static_cast<std::size_t>(u)], remap[static_cast<std::size_t>(v)]);

    for (const auto& [survivor, absorbed] : g.provenance()) {
        const VertexLabel& target = survivor == b ? a : survivor;
        for (const auto& l : absorbed) out.record_provenance(target, l);
    }
    out.record_provenance(a, b);
    return out;
}

std::vector<int> bfs_distances(const Graph& g, int v) {
    std::vector<int> dist(g.vertex_count(), kUnreachable);
    std::deque<int> queue{v};
    dist[static_cast<std::size_t>(v)] = 0;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : g.neighbors(x)) {
            if (dist[static_cast<std::size_t>(y)] != kUnreachable) continue;
            dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
            queue.push_back(y);
        }
    }
    return dist;
}

int distance(const Graph& g, const VertexLabel& u, const VertexLabel& v) {
    int iv = g.index_of(v);
    return bfs_distances(g, g.index_of(u))[static_cast<std::size_t>(iv)];
}

int eccentricity(const Graph& g, const VertexLabel& v) {
    auto dist = bfs_distances(g, g.index_of(v));
    if (std::find(dist.begin(), dist.end(), kUnreachable) != dist.end())
        throw GraphError("eccentricity undefined: graph is disconnected");
    return *std::max_element(dist.begin(), dist.end());
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    auto dist = bfs_distances(g, 0);
    return std::find(dist.begin(), dist.end(), kUnreachable) == dist.end();
}

bool is_tree(const Graph& g) {
    return g.vertex_count() > 0 && g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    Graph out;
    std::vector<int> remap(g.vertex_count(), -1);
    for (int v : vertices) remap[static_cast<std::size_t>(v)] = out.add_vertex(g.label(v));
    for (auto [u, v] : g.edges()) {
        int a = remap[static_cast<std::size_t>(u)], b = remap[static_cast<std::size_t>(v)];
        if (a >= 0 && b >= 0) out.add_edge(a, b);
    }
    return out;
}

Graph prefixed(const Graph& g, const std::string& ns) {
    Graph out;
    for (const auto& l : g.labels()) out.add_vertex({ns, l.str()});
    for (auto [a, b] : g.edges()) out.add_edge(a, b);
    return out;
}

}  // namespace bcast
