#pragma once

#include <optional>

#include "cycles.hpp"
#include "decomposition.hpp"
#include "graph.hpp"
#include "rational_lp.hpp"

namespace naeflow {

/// Rows sum_{u in N(v)} f(u) >= 1 and -sum_{u in N(v)} f(u) >= -1, f in [0,1].
inline LinearSystem build_one_in_degree_system(const Graph& g)
{
    const int n = g.order();
    LinearSystem sys(n);
    for (int v = 0; v < n; ++v) {
        std::vector<Rational> row(static_cast<std::size_t>(n), 0);
        for (int u : g.neighbors(v))
            row[static_cast<std::size_t>(u)] = 1;
        sys.add_row(row, 1);
    }
    for (int v = 0; v < n; ++v) {
        std::vector<Rational> row(static_cast<std::size_t>(n), 0);
        for (int u : g.neighbors(v))
            row[static_cast<std::size_t>(u)] = -1;
        sys.add_row(row, -1);
    }
    return sys;
}

/// Rows sum_{u in N(v)} f(u) >= 1 and -sum_{u in N(v)} f(u) >= 1 - d(v).
inline LinearSystem build_nae_system(const Graph& g)
{
    const int n = g.order();
    LinearSystem sys(n);
    for (int v = 0; v < n; ++v) {
        std::vector<Rational> row(static_cast<std::size_t>(n), 0);
        for (int u : g.neighbors(v))
            row[static_cast<std::size_t>(u)] = 1;
        sys.add_row(row, 1);
    }
    for (int v = 0; v < n; ++v) {
        std::vector<Rational> row(static_cast<std::size_t>(n), 0);
        for (int u : g.neighbors(v))
            row[static_cast<std::size_t>(u)] = -1;
        sys.add_row(row, 1 - g.degree(v));
    }
    return sys;
}

struct PolyDecision {
    std::optional<Decomposition> decomposition;
    FeasibilityResult lp;
};

namespace detail {

inline void require_tu_class(const Graph& g, std::uint64_t cycle_cap)
{
    if (!is_bipartite(g))
        throw precondition_error("graph is not bipartite");
    auto rep = has_cycle_2_mod_4(g, cycle_cap);
    if (rep.has_bad_cycle)
        throw precondition_error("graph has a cycle of length " + std::to_string(rep.witness->size()) +
                                 " (2 mod 4); LP feasibility does not decide it");
    if (!rep.exhausted)
        throw precondition_error("cycle enumeration cap reached; cannot certify the cycle class");
}

inline PolyDecision decide_via_lp(const LinearSystem& sys)
{
    PolyDecision out;
    out.lp = feasible(sys);
    if (!out.lp.feasible)
        return out;
    if (!is_integral(*out.lp.point))
        throw construction_error("basic point of a totally unimodular system is fractional");
    Decomposition d;
    for (std::size_t v = 0; v < out.lp.point->size(); ++v)
        if ((*out.lp.point)[v] == 1)
            d.a.push_back(static_cast<int>(v));
    out.decomposition = std::move(d);
    return out;
}

} // namespace detail

/// Polynomial decision for bipartite graphs without cycles of length 2 mod 4:
/// the adjacency matrix is totally unimodular there, so a basic point of the
/// LP relaxation is integral. Other graphs are refused.
inline PolyDecision decide_one_in_degree_poly_full(const Graph& g, std::uint64_t cycle_cap = default_cycle_cap)
{
    detail::require_tu_class(g, cycle_cap);
    return detail::decide_via_lp(build_one_in_degree_system(g));
}

inline PolyDecision decide_nae_poly_full(const Graph& g, std::uint64_t cycle_cap = default_cycle_cap)
{
    detail::require_tu_class(g, cycle_cap);
    return detail::decide_via_lp(build_nae_system(g));
}

inline std::optional<Decomposition> decide_one_in_degree_poly(const Graph& g,
                                                              std::uint64_t cycle_cap = default_cycle_cap)
{
    return decide_one_in_degree_poly_full(g, cycle_cap).decomposition;
}

inline std::optional<Decomposition> decide_nae_poly(const Graph& g, std::uint64_t cycle_cap = default_cycle_cap)
{
    return decide_nae_poly_full(g, cycle_cap).decomposition;
}

} // namespace naeflow
