#include "bcast/graph_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace bcast {

using nlohmann::json;

std::string to_json(const GraphDocument& doc, int indent) {
    const Graph& g = doc.graph;
    json j;
    j["vertices"] = json::array();
    for (const auto& l : g.labels()) j["vertices"].push_back(l.str());
    j["edges"] = json::array();
    for (auto [a, b] : g.edges()) j["edges"].push_back({g.label(a).str(), g.label(b).str()});
    j["marks"] = json::object();
    for (const auto& [role, label] : doc.marks) j["marks"][role] = label.str();
    if (!doc.edge_dimensions.empty()) j["edge_dimensions"] = doc.edge_dimensions;
    return j.dump(indent);
}

GraphDocument graph_document_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("graph document: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw FormatError("graph document: expected an object with 'vertices' and 'edges'");

    GraphDocument doc;
    try {
        for (const auto& v : j.at("vertices")) doc.graph.add_vertex(VertexLabel::parse(v.get<std::string>()));
        std::size_t index = 0;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw FormatError("graph document: edge #" + std::to_string(index) + " is not a 2-element array");
            auto a = VertexLabel::parse(e[0].get<std::string>());
            auto b = VertexLabel::parse(e[1].get<std::string>());
            if (a == b) throw FormatError("graph document: edge #" + std::to_string(index) + " is a self-loop");
            if (!doc.graph.add_edge(a, b))
                throw FormatError("graph document: edge #" + std::to_string(index) + " is listed twice");
            ++index;
        }
        if (j.contains("marks"))
            for (const auto& [role, label] : j.at("marks").items()) {
                auto l = VertexLabel::parse(label.get<std::string>());
                if (!doc.graph.contains(l)) throw FormatError("graph document: mark '" + role + "' names unknown vertex " + l.str());
                doc.marks.emplace(role, l);
            }
        if (j.contains("edge_dimensions")) {
            doc.edge_dimensions = j.at("edge_dimensions").get<std::vector<int>>();
            if (doc.edge_dimensions.size() != doc.graph.edge_count())
                throw FormatError("graph document: edge_dimensions length differs from edges");
        }
    } catch (const json::exception& e) {
        throw FormatError(std::string("graph document: ") + e.what());
    } catch (const GraphError& e) {
        throw FormatError(std::string("graph document: ") + e.what());
    }
    return doc;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path);
    out << content;
    if (!content.empty() && content.back() != '\n') out << '\n';
}

GraphDocument load_graph_document(const std::string& path) {
    try {
        return graph_document_from_json(read_file(path));
    } catch (const FormatError& e) {
        throw FormatError(path + ": " + e.what());
    }
}

void save_graph_document(const GraphDocument& doc, const std::string& path) { write_file(path, to_json(doc)); }

namespace {

const char* color_for(const std::string& role) {
    if (role == "originator") return "gray";
    if (role == "root" || role.starts_with("r")) return "lightblue";
    if (role == "star_center") return "orange";
    if (role.starts_with("path")) return "palegreen";
    if (role.starts_with("clause")) return "pink";
    return "khaki";
}

}  // namespace

void write_dot(std::ostream& out, const Graph& g, const Marks& marks) {
    std::map<VertexLabel, std::string> fill;
    for (const auto& [role, label] : marks)
        if (!fill.contains(label)) fill[label] = color_for(role);

    out << "graph G {\n";
    for (const auto& l : g.labels()) {
        out << "  \"" << l.str() << "\"";
        if (auto it = fill.find(l); it != fill.end()) out << " [style=filled, fillcolor=" << it->second << "]";
        out << ";\n";
    }
    for (auto [a, b] : g.edges()) out << "  \"" << g.label(a).str() << "\" -- \"" << g.label(b).str() << "\";\n";
    out << "}\n";
}

}  // namespace bcast
