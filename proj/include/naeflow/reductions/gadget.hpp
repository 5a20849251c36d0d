#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "../graph.hpp"
#include "../graph_io.hpp"

namespace naeflow {

/// Where a gadget vertex came from: its role in the construction and the
/// source object (variable, clause, element) it belongs to.
struct Provenance {
    std::string role;
    std::string source;
    int index = 0;

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct GadgetInstance {
    Graph graph;
    std::optional<std::vector<std::int64_t>> weights;
    std::vector<Provenance> provenance; // one per vertex
    json params = json::object();

    VertexWeightedGraph weighted() const
    {
        if (!weights)
            throw precondition_error("gadget carries no vertex weights");
        return VertexWeightedGraph(graph, *weights);
    }
};

inline json gadget_to_json(const GadgetInstance& gi)
{
    json j = graph_to_json(gi.graph, gi.weights ? &*gi.weights : nullptr);
    json prov = json::array();
    for (std::size_t v = 0; v < gi.provenance.size(); ++v)
        prov.push_back({{"vertex", v}, {"role", gi.provenance[v].role}, {"source", gi.provenance[v].source},
                        {"index", gi.provenance[v].index}});
    j["provenance"] = std::move(prov);
    j["params"] = gi.params;
    return j;
}

inline GadgetInstance gadget_from_json(const json& j)
{
    auto gf = graph_from_json(j);
    GadgetInstance gi{std::move(gf.graph), std::move(gf.weights), {}, json::object()};
    try {
        if (j.contains("provenance")) {
            gi.provenance.resize(static_cast<std::size_t>(gi.graph.order()));
            std::vector<char> seen(gi.provenance.size(), 0);
            for (const auto& p : j.at("provenance")) {
                int v = p.at("vertex").get<int>();
                if (v < 0 || v >= gi.graph.order() || seen[static_cast<std::size_t>(v)])
                    throw format_error("bad or repeated provenance vertex " + std::to_string(v));
                seen[static_cast<std::size_t>(v)] = 1;
                gi.provenance[static_cast<std::size_t>(v)] = {p.at("role").get<std::string>(),
                                                              p.at("source").get<std::string>(), p.value("index", 0)};
            }
            for (char s : seen)
                if (!s)
                    throw format_error("provenance is not total");
        }
        if (j.contains("params"))
            gi.params = j.at("params");
    } catch (const json::exception& e) {
        throw format_error(std::string("gadget JSON: ") + e.what());
    }
    return gi;
}

namespace detail {

// Accumulates vertices with provenance and edges; Graph's constructor rejects
// repeated edges, which catches wiring mistakes.
class gadget_builder {
public:
    int add(std::string role, std::string source, int index = 0)
    {
        prov_.push_back({std::move(role), std::move(source), index});
        return static_cast<int>(prov_.size()) - 1;
    }
    void edge(int a, int b) { edges_.emplace_back(a, b); }
    int order() const { return static_cast<int>(prov_.size()); }

    GadgetInstance finish(json params, std::optional<std::vector<std::int64_t>> weights = std::nullopt)
    {
        GadgetInstance gi{Graph(order(), edges_), std::move(weights), std::move(prov_), std::move(params)};
        return gi;
    }

private:
    std::vector<Provenance> prov_;
    std::vector<std::pair<int, int>> edges_;
};

} // namespace detail

} // namespace naeflow
