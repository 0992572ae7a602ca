#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bcast/graph.hpp"

namespace bcast {

// Role name -> vertex. Roles used across the toolkit: "originator", "root",
// "star_center", "path_end", "clause:i", "leaf:i", "r1".."r6", ...
using Marks = std::map<std::string, VertexLabel>;

// The on-disk graph document:
//   { "vertices": ["ns:local", ...],
//     "edges": [["ns:a", "ns:b"], ...],          each edge once
//     "marks": { "role": "ns:local", ... },
//     "edge_dimensions": [d, ...] }               optional, parallel to edges
struct GraphDocument {
    Graph graph;
    Marks marks;
    std::vector<int> edge_dimensions;
};

std::string to_json(const GraphDocument& doc, int indent = 1);
GraphDocument graph_document_from_json(const std::string& text);

GraphDocument load_graph_document(const std::string& path);
void save_graph_document(const GraphDocument& doc, const std::string& path);

// Graphviz export. Vertices and edges are exact; marks only become fill colors.
void write_dot(std::ostream& out, const Graph& g, const Marks& marks = {});

// Reads a whole file; throws FormatError when it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace bcast
