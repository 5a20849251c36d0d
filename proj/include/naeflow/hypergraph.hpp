#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "graph.hpp"
#include "search.hpp"

namespace naeflow {

struct Hypergraph {
    int num_vertices = 0;
    std::vector<std::vector<int>> edges;

    Hypergraph() = default;
    Hypergraph(int n, std::vector<std::vector<int>> es) : num_vertices(n), edges(std::move(es))
    {
        for (const auto& e : edges) {
            if (e.empty())
                throw precondition_error("empty hyperedge");
            for (int v : e)
                if (v < 0 || v >= n)
                    throw precondition_error("hyperedge member out of range");
        }
    }
};

/// One hyperedge N(v) per vertex v, in vertex order.
inline Hypergraph neighborhood_hypergraph(const Graph& g)
{
    std::vector<std::vector<int>> es;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 0)
            throw precondition_error("vertex " + std::to_string(v) + " is isolated");
        es.emplace_back(g.neighbors(v).begin(), g.neighbors(v).end());
    }
    return Hypergraph(g.order(), std::move(es));
}

/// The Fano plane on Z7 with lines {i, i+1, i+3}.
inline Hypergraph fano_plane()
{
    std::vector<std::vector<int>> es;
    for (int i = 0; i < 7; ++i)
        es.push_back({i, (i + 1) % 7, (i + 3) % 7});
    return Hypergraph(7, std::move(es));
}

/// Proper 2-coloring (colors 1 and 2, no monochromatic hyperedge) by plain
/// backtracking over vertices in id order, color 1 first. A hyperedge is
/// checked as soon as its last member is colored.
inline std::optional<std::vector<int>> two_color_hypergraph(const Hypergraph& h, const SearchControl& ctl = {})
{
    const int n = h.num_vertices;
    // hyperedges grouped by their largest member
    std::vector<std::vector<int>> closing(static_cast<std::size_t>(n));
    for (int e = 0; e < static_cast<int>(h.edges.size()); ++e) {
        const auto& es = h.edges[static_cast<std::size_t>(e)];
        int last = *std::max_element(es.begin(), es.end());
        closing[static_cast<std::size_t>(last)].push_back(e);
    }
    detail::search_budget budget(ctl);
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    auto closes_ok = [&](int v) {
        for (int e : closing[static_cast<std::size_t>(v)]) {
            const auto& es = h.edges[static_cast<std::size_t>(e)];
            bool mono = true;
            for (int u : es)
                if (color[static_cast<std::size_t>(u)] != color[static_cast<std::size_t>(es.front())])
                    mono = false;
            if (mono)
                return false;
        }
        return true;
    };
    int v = 0;
    while (v >= 0 && v < n) {
        auto& c = color[static_cast<std::size_t>(v)];
        if (c == 2) {
            c = 0;
            --v;
            continue;
        }
        ++c;
        budget.node();
        if (closes_ok(v))
            ++v;
    }
    if (v < 0)
        return std::nullopt;
    return color;
}

inline bool verify_two_coloring(const Hypergraph& h, const std::vector<int>& color)
{
    if (static_cast<int>(color.size()) != h.num_vertices)
        throw precondition_error("coloring length mismatch");
    for (const auto& e : h.edges) {
        bool mono = true;
        for (int u : e)
            if (color[static_cast<std::size_t>(u)] != color[static_cast<std::size_t>(e.front())])
                mono = false;
        if (mono)
            return false;
    }
    for (int c : color)
        if (c != 1 && c != 2)
            return false;
    return true;
}

} // namespace naeflow
