#pragma once

#include <cstdint>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "graph.hpp"

namespace naeflow {

using json = nlohmann::json;

/// Parsed graph file: plain or vertex-weighted.
struct GraphFile {
    Graph graph;
    std::optional<std::vector<std::int64_t>> weights;

    VertexWeightedGraph weighted() const
    {
        if (!weights)
            throw precondition_error("graph carries no vertex weights");
        return VertexWeightedGraph(graph, *weights);
    }
};

inline json graph_to_json(const Graph& g, const std::vector<std::int64_t>* weights = nullptr)
{
    json j;
    j["n"] = g.order();
    json es = json::array();
    for (const Edge& e : g.edges())
        es.push_back({e.u, e.v});
    j["edges"] = std::move(es);
    if (weights)
        j["weights"] = *weights;
    if (!g.names().empty())
        j["names"] = g.names();
    return j;
}

inline json graph_to_json(const VertexWeightedGraph& wg) { return graph_to_json(wg.graph, &wg.weights); }

inline GraphFile graph_from_json(const json& j)
{
    try {
        if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
            throw format_error("graph JSON needs \"n\" and \"edges\"");
        const int n = j.at("n").get<int>();
        std::vector<std::pair<int, int>> es;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw format_error("edge entries must be [u, v] pairs");
            es.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        std::vector<std::string> names;
        if (j.contains("names"))
            names = j.at("names").get<std::vector<std::string>>();
        GraphFile out{Graph(n, es, std::move(names)), std::nullopt};
        if (j.contains("weights")) {
            auto w = j.at("weights").get<std::vector<std::int64_t>>();
            if (static_cast<int>(w.size()) != n)
                throw format_error("weights length differs from n");
            out.weights = std::move(w);
        }
        return out;
    } catch (const json::exception& e) {
        throw format_error(std::string("graph JSON: ") + e.what());
    } catch (const precondition_error& e) {
        throw format_error(std::string("graph JSON: ") + e.what());
    }
}

/// "n m" header, m lines "u v", optional trailing "w w0 ... w(n-1)".
inline std::string graph_to_edge_list(const Graph& g, const std::vector<std::int64_t>* weights = nullptr)
{
    std::ostringstream os;
    os << g.order() << ' ' << g.size() << '\n';
    for (const Edge& e : g.edges())
        os << e.u << ' ' << e.v << '\n';
    if (weights) {
        os << 'w';
        for (auto w : *weights)
            os << ' ' << w;
        os << '\n';
    }
    return os.str();
}

inline GraphFile graph_from_edge_list(const std::string& text)
{
    std::istringstream is(text);
    long long n = -1, m = -1;
    if (!(is >> n >> m) || n < 0 || m < 0)
        throw format_error("edge list: bad \"n m\" header");
    std::vector<std::pair<int, int>> es;
    es.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long a, b;
        if (!(is >> a >> b))
            throw format_error("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        es.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    GraphFile out;
    try {
        out.graph = Graph(static_cast<int>(n), es);
    } catch (const precondition_error& e) {
        throw format_error(std::string("edge list: ") + e.what());
    }
    std::string tag;
    if (is >> tag) {
        if (tag != "w")
            throw format_error("edge list: unexpected token after edges: " + tag);
        std::vector<std::int64_t> w(static_cast<std::size_t>(n));
        for (auto& x : w)
            if (!(is >> x))
                throw format_error("edge list: weight line too short");
        out.weights = std::move(w);
        if (is >> tag)
            throw format_error("edge list: trailing data");
    }
    return out;
}

inline std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw format_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw format_error("cannot write " + path);
    out << text;
}

inline json parse_json_text(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw format_error(std::string("JSON parse error: ") + e.what());
    }
}

/// Loads a graph from JSON or edge-list text; the format is sniffed from the
/// first non-blank character.
inline GraphFile load_graph(const std::string& path)
{
    std::string text = read_text_file(path);
    auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && text[pos] == '{')
        return graph_from_json(parse_json_text(text));
    return graph_from_edge_list(text);
}

/// Optional decorations for DOT export.
struct DotStyle {
    std::vector<char> vertex_in_a;                ///< filled when non-empty
    std::vector<std::string> edge_colors;         ///< per edge id, empty entries ignored
    std::vector<std::string> vertex_labels;       ///< overrides names
    std::vector<std::string> edge_labels;         ///< per edge id, empty entries ignored
};

inline std::string graph_to_dot(const Graph& g, const DotStyle& style = {})
{
    std::ostringstream os;
    os << "graph G {\n  node [shape=circle];\n";
    for (int v = 0; v < g.order(); ++v) {
        os << "  " << v;
        std::string label;
        if (static_cast<int>(style.vertex_labels.size()) == g.order())
            label = style.vertex_labels[static_cast<std::size_t>(v)];
        else if (!g.names().empty())
            label = g.names()[static_cast<std::size_t>(v)];
        bool attrs = !label.empty() || !style.vertex_in_a.empty();
        if (attrs) {
            os << " [";
            if (!label.empty())
                os << "label=\"" << label << "\"";
            if (!style.vertex_in_a.empty()) {
                if (!label.empty())
                    os << ", ";
                os << "style=filled, fillcolor="
                   << (style.vertex_in_a.at(static_cast<std::size_t>(v)) ? "\"#f4a259\"" : "\"#dfe7ee\"");
            }
            os << ']';
        }
        os << ";\n";
    }
    for (int id = 0; id < g.size(); ++id) {
        const Edge& e = g.edge(id);
        os << "  " << e.u << " -- " << e.v;
        std::vector<std::string> attrs;
        if (static_cast<int>(style.edge_colors.size()) == g.size() &&
            !style.edge_colors[static_cast<std::size_t>(id)].empty())
            attrs.push_back("color=" + style.edge_colors[static_cast<std::size_t>(id)] + ", penwidth=2");
        if (static_cast<int>(style.edge_labels.size()) == g.size() &&
            !style.edge_labels[static_cast<std::size_t>(id)].empty())
            attrs.push_back("label=\"" + style.edge_labels[static_cast<std::size_t>(id)] + "\"");
        for (std::size_t i = 0; i < attrs.size(); ++i)
            os << (i == 0 ? " [" : ", ") << attrs[i];
        if (!attrs.empty())
            os << ']';
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace naeflow
