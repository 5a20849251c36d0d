#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace naeflow {

enum class EdgeColor : std::uint8_t { red, blue };

inline EdgeColor flip(EdgeColor c) { return c == EdgeColor::red ? EdgeColor::blue : EdgeColor::red; }
inline const char* to_string(EdgeColor c) { return c == EdgeColor::red ? "red" : "blue"; }

/// Color per edge id.
using TwoEdgeColoring = std::vector<EdgeColor>;

inline bool verify_nae_edge(const Graph& g, const TwoEdgeColoring& c)
{
    if (static_cast<int>(c.size()) != g.size())
        throw precondition_error("coloring covers " + std::to_string(c.size()) + " of " + std::to_string(g.size()) +
                                 " edges");
    for (int v = 0; v < g.order(); ++v) {
        bool red = false, blue = false;
        for (int id : g.incident_edges(v))
            (c[static_cast<std::size_t>(id)] == EdgeColor::red ? red : blue) = true;
        if (!red || !blue)
            return false;
    }
    return true;
}

inline constexpr int default_brute_force_edges = 24;

/// Exhaustive search over colorings in edge-id order (red first). A vertex is
/// checked when its highest-id incident edge gets colored.
inline std::optional<TwoEdgeColoring> brute_force_nae_edge(const Graph& g, int max_edges = default_brute_force_edges)
{
    if (g.size() > max_edges)
        throw precondition_error(std::to_string(g.size()) + " edges exceed the brute-force bound " +
                                 std::to_string(max_edges));
    const int m = g.size();
    std::vector<std::vector<int>> closes(static_cast<std::size_t>(m));
    for (int v = 0; v < g.order(); ++v) {
        auto inc = g.incident_edges(v);
        if (inc.empty())
            return std::nullopt;
        closes[static_cast<std::size_t>(*std::max_element(inc.begin(), inc.end()))].push_back(v);
    }
    TwoEdgeColoring c(static_cast<std::size_t>(m), EdgeColor::red);
    std::vector<int> state(static_cast<std::size_t>(m), 0); // 0 untried, 1 red, 2 blue
    auto ok_at = [&](int e) {
        for (int v : closes[static_cast<std::size_t>(e)]) {
            bool red = false, blue = false;
            for (int id : g.incident_edges(v))
                (c[static_cast<std::size_t>(id)] == EdgeColor::red ? red : blue) = true;
            if (!red || !blue)
                return false;
        }
        return true;
    };
    int e = 0;
    while (e >= 0 && e < m) {
        auto& s = state[static_cast<std::size_t>(e)];
        if (s == 2) {
            s = 0;
            --e;
            continue;
        }
        ++s;
        c[static_cast<std::size_t>(e)] = s == 1 ? EdgeColor::red : EdgeColor::blue;
        if (ok_at(e))
            ++e;
    }
    if (e < 0)
        return std::nullopt;
    return c;
}

namespace detail {

struct edge_subgraph_t {
    Graph graph;
    std::vector<int> vmap; // local vertex -> parent vertex
    std::vector<int> emap; // local edge -> parent edge
};

inline edge_subgraph_t edge_subgraph(const Graph& g, const std::vector<int>& ids)
{
    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    edge_subgraph_t s;
    for (int id : ids)
        for (int w : {g.edge(id).u, g.edge(id).v})
            if (local[static_cast<std::size_t>(w)] < 0) {
                local[static_cast<std::size_t>(w)] = 0;
                s.vmap.push_back(w);
            }
    std::sort(s.vmap.begin(), s.vmap.end());
    for (std::size_t i = 0; i < s.vmap.size(); ++i)
        local[static_cast<std::size_t>(s.vmap[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> es;
    for (int id : ids)
        es.emplace_back(local[static_cast<std::size_t>(g.edge(id).u)], local[static_cast<std::size_t>(g.edge(id).v)]);
    s.graph = Graph(static_cast<int>(s.vmap.size()), es);
    s.emap.assign(static_cast<std::size_t>(s.graph.size()), -1);
    for (int id : ids) {
        int le = *s.graph.edge_id(local[static_cast<std::size_t>(g.edge(id).u)], local[static_cast<std::size_t>(g.edge(id).v)]);
        s.emap[static_cast<std::size_t>(le)] = id;
    }
    return s;
}

inline bool all_degree_two(const Graph& g)
{
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2)
            return false;
    return true;
}

// Edge ids around a cycle graph, starting at b toward its smaller neighbor.
inline std::vector<int> cycle_edges_from(const Graph& g, int b)
{
    std::vector<int> out;
    int prev = -1, cur = b;
    do {
        int next = -1, via = -1;
        auto nb = g.neighbors(cur);
        auto inc = g.incident_edges(cur);
        for (std::size_t i = 0; i < nb.size(); ++i)
            if (nb[i] != prev) {
                next = nb[i];
                via = inc[i];
                break;
            }
        // on the first step both neighbors qualify; the smaller one wins
        out.push_back(via);
        prev = cur;
        cur = next;
    } while (cur != b);
    return out;
}

// Alternate colors around the cycle from b, starting with `first`. On an odd
// cycle both edges at b end up with `first` (coloring "with respect to b").
inline void color_cycle_from(const Graph& g, int b, EdgeColor first, TwoEdgeColoring& out)
{
    EdgeColor c = first;
    for (int id : cycle_edges_from(g, b)) {
        out[static_cast<std::size_t>(id)] = c;
        c = flip(c);
    }
}

} // namespace detail

/// Data of the Euler-tour construction used when some degree is at least 4.
struct EulerColoringTrace {
    int start = -1;                ///< tour start, a vertex of degree >= 4
    std::vector<int> tour;         ///< original edge id per tour step, -1 for auxiliary edges
    std::vector<int> tour_vertices; ///< vertex entered after each step
};

namespace detail {

inline void nae_color_connected(const Graph& h, TwoEdgeColoring& out, EulerColoringTrace* trace);

inline void euler_case(const Graph& h, TwoEdgeColoring& out, EulerColoringTrace* trace)
{
    const int n = h.order();
    std::vector<int> odd;
    for (int v = 0; v < n; ++v)
        if (h.degree(v) % 2)
            odd.push_back(v);
    auto es = h.edge_pairs();
    int t = n;
    for (std::size_t i = 0; i + 1 < odd.size(); i += 2) {
        es.emplace_back(odd[i], t);
        es.emplace_back(odd[i + 1], t);
        ++t;
    }
    Graph aug(t, es);
    int start = -1;
    for (int v = 0; v < n && start < 0; ++v)
        if (h.degree(v) >= 4)
            start = v;
    auto tour = euler_tour(aug, start);
    EdgeColor c = EdgeColor::red;
    int at = start;
    if (trace) {
        trace->start = start;
        trace->tour.clear();
        trace->tour_vertices.clear();
    }
    for (int id : tour) {
        const Edge& e = aug.edge(id);
        at = e.other(at);
        int orig = (e.u < n && e.v < n) ? *h.edge_id(e.u, e.v) : -1;
        if (orig >= 0)
            out[static_cast<std::size_t>(orig)] = c;
        if (trace) {
            trace->tour.push_back(orig);
            trace->tour_vertices.push_back(at);
        }
        c = flip(c);
    }
}

inline void cubic_case(const Graph& h, TwoEdgeColoring& out)
{
    int v0 = -1;
    for (int v = 0; v < h.order() && v0 < 0; ++v)
        if (h.degree(v) == 3)
            v0 = v;
    // path v0 x1 ... xi u through degree-2 vertices, ending at u != v0
    std::vector<int> path_edges, interior;
    int u = -1;
    {
        auto nb = h.neighbors(v0);
        auto inc = h.incident_edges(v0);
        for (std::size_t k = 0; k < nb.size() && u < 0; ++k) {
            path_edges.assign(1, inc[k]);
            interior.clear();
            int prev = v0, cur = nb[k];
            while (h.degree(cur) == 2) {
                interior.push_back(cur);
                auto cn = h.neighbors(cur);
                auto ci = h.incident_edges(cur);
                int j = cn[0] == prev ? 1 : 0;
                path_edges.push_back(ci[static_cast<std::size_t>(j)]);
                prev = cur;
                cur = cn[static_cast<std::size_t>(j)];
            }
            // a walk that comes back to v0 is a pendant cycle; try the next neighbor
            if (cur != v0)
                u = cur;
        }
    }
    if (u < 0)
        throw construction_error("no path between two degree-3 vertices");

    EdgeColor c = EdgeColor::red;
    for (int id : path_edges) {
        out[static_cast<std::size_t>(id)] = c;
        c = flip(c);
    }
    const EdgeColor at_v = out[static_cast<std::size_t>(path_edges.front())];
    const EdgeColor at_u = out[static_cast<std::size_t>(path_edges.back())];

    std::vector<char> drop(static_cast<std::size_t>(h.size()), 0);
    for (int id : path_edges)
        drop[static_cast<std::size_t>(id)] = 1;
    std::vector<int> rest;
    for (int id = 0; id < h.size(); ++id)
        if (!drop[static_cast<std::size_t>(id)])
            rest.push_back(id);
    auto hs = edge_subgraph(h, rest);
    for (const auto& comp : connected_components(hs.graph)) {
        std::vector<int> ids;
        for (int id = 0; id < hs.graph.size(); ++id) {
            const Edge& e = hs.graph.edge(id);
            if (std::binary_search(comp.begin(), comp.end(), e.u))
                ids.push_back(id);
        }
        auto ks = edge_subgraph(hs.graph, ids);
        const Graph& k = ks.graph;
        TwoEdgeColoring local(static_cast<std::size_t>(k.size()), EdgeColor::red);
        if (all_degree_two(k) && k.size() % 2 == 1) {
            // odd cycle: color it with respect to v0 (or u) against the path edge there
            int lv = -1, lu = -1;
            for (int i = 0; i < k.order(); ++i) {
                int parent = hs.vmap[static_cast<std::size_t>(ks.vmap[static_cast<std::size_t>(i)])];
                if (parent == v0)
                    lv = i;
                if (parent == u)
                    lu = i;
            }
            if (lv >= 0)
                color_cycle_from(k, lv, flip(at_v), local);
            else if (lu >= 0)
                color_cycle_from(k, lu, flip(at_u), local);
            else
                throw construction_error("odd-cycle component detached from the removed path");
        } else {
            nae_color_connected(k, local, nullptr);
        }
        for (int id = 0; id < k.size(); ++id)
            out[static_cast<std::size_t>(hs.emap[static_cast<std::size_t>(ks.emap[static_cast<std::size_t>(id)])])] =
                local[static_cast<std::size_t>(id)];
    }
}

// h connected, min degree >= 2, not an odd cycle
inline void nae_color_connected(const Graph& h, TwoEdgeColoring& out, EulerColoringTrace* trace)
{
    auto prof = degree_profile(h);
    if (prof.max_degree == 2) {
        if (h.size() % 2)
            throw construction_error("odd cycle reached the constructive coloring");
        color_cycle_from(h, 0, EdgeColor::red, out);
    } else if (prof.max_degree >= 4) {
        euler_case(h, out, trace);
    } else {
        cubic_case(h, out);
    }
}

} // namespace detail

/// Constructive NAE edge coloring of a connected graph with minimum degree at
/// least 2: none for odd cycles, alternation on even cycles, an alternating
/// Euler tour (odd vertices paired through auxiliary vertices) when some
/// degree is >= 4, and path peeling with odd-cycle repair when the maximum
/// degree is 3.
inline std::optional<TwoEdgeColoring> nae_edge_coloring(const Graph& g, EulerColoringTrace* trace = nullptr)
{
    if (g.order() == 0 || !is_connected(g))
        throw precondition_error("graph must be connected");
    if (degree_profile(g).min_degree < 2)
        throw precondition_error("minimum degree must be at least 2");
    if (detail::all_degree_two(g) && g.size() % 2 == 1)
        return std::nullopt;
    TwoEdgeColoring out(static_cast<std::size_t>(g.size()), EdgeColor::red);
    detail::nae_color_connected(g, out, trace);
    if (!verify_nae_edge(g, out))
        throw construction_error("constructed edge coloring is not NAE");
    return out;
}

} // namespace naeflow
