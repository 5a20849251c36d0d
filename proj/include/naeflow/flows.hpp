#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <vector>

#include "decomposition.hpp"
#include "graph.hpp"
#include "search.hpp"
#include "sum_csp.hpp"

namespace naeflow {

/// Label per edge id (edge flows) or per vertex (vertex flows).
using EdgeLabeling = std::vector<std::int64_t>;
using VertexLabeling = std::vector<std::int64_t>;

namespace detail {

inline bool in_flow_range(std::int64_t x, int k) { return x != 0 && std::llabs(x) <= k - 1; }

inline void require_k(int k)
{
    if (k < 2)
        throw precondition_error("k must be at least 2");
}

// +1..+(k-1), then -1..-(k-1)
inline std::vector<std::int64_t> flow_values(int k)
{
    std::vector<std::int64_t> vals;
    for (int s : {1, -1})
        for (int x = 1; x < k; ++x)
            vals.push_back(s * x);
    return vals;
}

} // namespace detail

inline bool verify_zero_sum(const Graph& g, const EdgeLabeling& lab, int k)
{
    detail::require_k(k);
    if (static_cast<int>(lab.size()) != g.size())
        throw precondition_error("labeling covers " + std::to_string(lab.size()) + " of " +
                                 std::to_string(g.size()) + " edges");
    for (auto x : lab)
        if (!detail::in_flow_range(x, k))
            return false;
    for (int v = 0; v < g.order(); ++v) {
        std::int64_t s = 0;
        for (int id : g.incident_edges(v))
            s += lab[static_cast<std::size_t>(id)];
        if (s != 0)
            return false;
    }
    return true;
}

inline bool verify_vertex_zero_sum(const Graph& g, const VertexLabeling& lab, int k)
{
    detail::require_k(k);
    if (static_cast<int>(lab.size()) != g.order())
        throw precondition_error("labeling covers " + std::to_string(lab.size()) + " of " +
                                 std::to_string(g.order()) + " vertices");
    for (auto x : lab)
        if (!detail::in_flow_range(x, k))
            return false;
    for (int v = 0; v < g.order(); ++v) {
        std::int64_t s = 0;
        for (int u : g.neighbors(v))
            s += lab[static_cast<std::size_t>(u)];
        if (s != 0)
            return false;
    }
    return true;
}

/// Exact zero-sum k-flow search. One variable per edge, one sum constraint per
/// vertex; generalized arc consistency on a degree-3 vertex with k = 3 leaves
/// exactly the patterns (2,-1,-1) and (-2,1,1), so the +-2 edges are forced
/// into a matching on degree-3 vertices during search. Branches on the lowest
/// undecided edge id, positive labels first.
inline std::optional<EdgeLabeling> solve_zero_sum(const Graph& g, int k, const SearchControl& ctl = {})
{
    detail::require_k(k);
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1)
            return std::nullopt;
    SumCsp csp;
    for (int id = 0; id < g.size(); ++id)
        csp.add_variable(detail::flow_values(k));
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 0)
            continue;
        std::vector<int> vars(g.incident_edges(v).begin(), g.incident_edges(v).end());
        csp.add_constraint(vars, std::vector<std::int64_t>(vars.size(), 1), 0);
    }
    return csp.solve(SumCsp::Branching::lowest_index, ctl);
}

/// Exact zero-sum vertex k-flow search (kernel of the adjacency matrix).
inline std::optional<VertexLabeling> solve_vertex_zero_sum(const Graph& g, int k, const SearchControl& ctl = {})
{
    detail::require_k(k);
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1)
            return std::nullopt;
    SumCsp csp;
    for (int v = 0; v < g.order(); ++v)
        csp.add_variable(detail::flow_values(k));
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 0)
            continue;
        std::vector<int> vars(g.neighbors(v).begin(), g.neighbors(v).end());
        csp.add_constraint(vars, std::vector<std::int64_t>(vars.size(), 1), 0);
    }
    return csp.solve(SumCsp::Branching::lowest_index, ctl);
}

namespace detail {

inline void require_cubic(const Graph& g)
{
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 3)
            throw precondition_error("graph is not 3-regular (vertex " + std::to_string(v) + " has degree " +
                                     std::to_string(g.degree(v)) + ")");
}

} // namespace detail

/// 1-in-Degree decomposition of a cubic graph -> vertex 3-flow (A -> 2, B -> -1).
inline VertexLabeling decomposition_to_vertex_flow(const Graph& g, const Decomposition& d)
{
    detail::require_cubic(g);
    if (!verify_one_in_degree(g, d))
        throw precondition_error("not a 1-in-Degree decomposition");
    auto in = d.indicator(g.order());
    VertexLabeling lab(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        lab[static_cast<std::size_t>(v)] = in[static_cast<std::size_t>(v)] ? 2 : -1;
    return lab;
}

/// Vertex 3-flow of a cubic graph -> 1-in-Degree decomposition. Every
/// neighborhood carries {2,-1,-1} or {-2,1,1}, so A = {v : |label(v)| = 2}.
inline Decomposition vertex_flow_to_decomposition(const Graph& g, const VertexLabeling& lab)
{
    detail::require_cubic(g);
    if (!verify_vertex_zero_sum(g, lab, 3))
        throw precondition_error("not a zero-sum vertex 3-flow");
    Decomposition d;
    for (int v = 0; v < g.order(); ++v)
        if (std::llabs(lab[static_cast<std::size_t>(v)]) == 2)
            d.a.push_back(v);
    if (!verify_one_in_degree(g, d))
        throw construction_error("vertex flow did not map to a 1-in-Degree decomposition");
    return d;
}

} // namespace naeflow
