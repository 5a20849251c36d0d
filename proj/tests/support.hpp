#pragma once

// Brute-force oracles and small generators shared by the tests and the
// acceptance runner. Everything here is deliberately naive.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "naeflow/formula.hpp"
#include "naeflow/graph.hpp"

namespace oracle {

using naeflow::Graph;

/// Every labeled graph on n vertices (n <= 7).
inline void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn)
{
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<std::pair<int, int>> es;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1)
                es.push_back(pairs[i]);
        fn(Graph(n, es));
    }
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                es.emplace_back(u, v);
    return Graph(n, es);
}

/// Cubic monotone formula on n variables and n clauses (configuration model;
/// repeated clauses allowed, repeated variables within a clause rejected).
inline naeflow::PositiveFormula random_cubic_formula(int n, std::mt19937_64& rng)
{
    std::vector<int> slots;
    for (int x = 0; x < n; ++x)
        for (int i = 0; i < 3; ++i)
            slots.push_back(x);
    for (;;) {
        std::shuffle(slots.begin(), slots.end(), rng);
        std::vector<std::vector<int>> cls;
        bool ok = true;
        for (int c = 0; c < n && ok; ++c) {
            std::vector<int> cl(slots.begin() + 3 * c, slots.begin() + 3 * c + 3);
            ok = cl[0] != cl[1] && cl[0] != cl[2] && cl[1] != cl[2];
            cls.push_back(cl);
        }
        if (ok)
            return naeflow::PositiveFormula(n, cls);
    }
}

inline std::vector<int> a_counts(const Graph& g, std::uint64_t mask)
{
    std::vector<int> c(static_cast<std::size_t>(g.order()), 0);
    for (int v = 0; v < g.order(); ++v)
        for (int u : g.neighbors(v))
            if (mask >> u & 1)
                ++c[static_cast<std::size_t>(v)];
    return c;
}

inline bool bipartite(const Graph& g)
{
    const int n = g.order();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (const auto& e : g.edges())
            if ((mask >> e.u & 1) == (mask >> e.v & 1)) {
                ok = false;
                break;
            }
        if (ok)
            return true;
    }
    return false;
}

inline std::optional<std::uint64_t> one_in_degree(const Graph& g)
{
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask) {
        auto c = a_counts(g, mask);
        if (std::all_of(c.begin(), c.end(), [](int x) { return x == 1; }))
            return mask;
    }
    return std::nullopt;
}

inline std::optional<std::uint64_t> nae(const Graph& g)
{
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask) {
        auto c = a_counts(g, mask);
        bool ok = true;
        for (int v = 0; v < g.order() && ok; ++v)
            ok = c[static_cast<std::size_t>(v)] >= 1 && c[static_cast<std::size_t>(v)] <= g.degree(v) - 1;
        if (ok)
            return mask;
    }
    return std::nullopt;
}

inline bool one_in_degree_weighted(const Graph& g, const std::vector<std::int64_t>& w)
{
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask) {
        bool ok = true;
        for (int v = 0; v < g.order() && ok; ++v) {
            std::int64_t s = 0;
            for (int u : g.neighbors(v))
                if (mask >> u & 1)
                    s += w[static_cast<std::size_t>(u)];
            ok = s == 1;
        }
        if (ok)
            return true;
    }
    return false;
}

// odometer over labels {+-1..+-(k-1)} per slot
inline bool labels_exist(int slots, int k, const std::function<bool(const std::vector<std::int64_t>&)>& ok)
{
    std::vector<std::int64_t> vals;
    for (int x = 1; x < k; ++x) {
        vals.push_back(x);
        vals.push_back(-x);
    }
    std::vector<std::size_t> idx(static_cast<std::size_t>(slots), 0);
    std::vector<std::int64_t> lab(static_cast<std::size_t>(slots));
    for (;;) {
        for (std::size_t i = 0; i < idx.size(); ++i)
            lab[i] = vals[idx[i]];
        if (ok(lab))
            return true;
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == vals.size())
            idx[i++] = 0;
        if (i == idx.size())
            return false;
    }
}

inline bool zero_sum_flow(const Graph& g, int k)
{
    return labels_exist(g.size(), k, [&](const std::vector<std::int64_t>& lab) {
        for (int v = 0; v < g.order(); ++v) {
            std::int64_t s = 0;
            for (int id : g.incident_edges(v))
                s += lab[static_cast<std::size_t>(id)];
            if (s != 0)
                return false;
        }
        return true;
    });
}

inline bool vertex_zero_sum_flow(const Graph& g, int k)
{
    return labels_exist(g.order(), k, [&](const std::vector<std::int64_t>& lab) {
        for (int v = 0; v < g.order(); ++v) {
            std::int64_t s = 0;
            for (int u : g.neighbors(v))
                s += lab[static_cast<std::size_t>(u)];
            if (s != 0)
                return false;
        }
        return true;
    });
}

// Same questions by backtracking over the labels in slot order, checking each
// vertex once its last slot is set. Reaches C_16 where the odometer cannot.
inline bool labels_exist_bt(int slots, int k, const std::vector<std::vector<int>>& sums)
{
    std::vector<int> last(sums.size(), -1);
    std::vector<std::vector<int>> due(static_cast<std::size_t>(slots));
    for (std::size_t v = 0; v < sums.size(); ++v) {
        if (sums[v].empty())
            continue;
        last[v] = *std::max_element(sums[v].begin(), sums[v].end());
        due[static_cast<std::size_t>(last[v])].push_back(static_cast<int>(v));
    }
    std::vector<std::int64_t> lab(static_cast<std::size_t>(slots), 0);
    std::function<bool(int)> rec = [&](int i) {
        if (i == slots)
            return true;
        for (int x = 1; x < k; ++x)
            for (std::int64_t val : {std::int64_t{x}, std::int64_t{-x}}) {
                lab[static_cast<std::size_t>(i)] = val;
                bool ok = true;
                for (int v : due[static_cast<std::size_t>(i)]) {
                    std::int64_t s = 0;
                    for (int j : sums[static_cast<std::size_t>(v)])
                        s += lab[static_cast<std::size_t>(j)];
                    ok = ok && s == 0;
                }
                if (ok && rec(i + 1))
                    return true;
            }
        return false;
    };
    return rec(0);
}

inline bool zero_sum_flow_bt(const Graph& g, int k)
{
    std::vector<std::vector<int>> sums(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        for (int id : g.incident_edges(v))
            sums[static_cast<std::size_t>(v)].push_back(id);
    return labels_exist_bt(g.size(), k, sums);
}

inline bool vertex_zero_sum_flow_bt(const Graph& g, int k)
{
    std::vector<std::vector<int>> sums(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        for (int u : g.neighbors(v))
            sums[static_cast<std::size_t>(v)].push_back(u);
    return labels_exist_bt(g.order(), k, sums);
}

inline bool nae_edge_coloring(const Graph& g)
{
    const int m = g.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        bool ok = true;
        for (int v = 0; v < g.order() && ok; ++v) {
            bool red = false, blue = false;
            for (int id : g.incident_edges(v))
                (mask >> id & 1 ? red : blue) = true;
            ok = red && blue;
        }
        if (ok)
            return true;
    }
    return false;
}

inline bool perfect_matching(const Graph& g)
{
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    std::function<bool()> rec = [&]() {
        int v = 0;
        while (v < g.order() && used[static_cast<std::size_t>(v)])
            ++v;
        if (v == g.order())
            return true;
        used[static_cast<std::size_t>(v)] = 1;
        for (int u : g.neighbors(v))
            if (!used[static_cast<std::size_t>(u)]) {
                used[static_cast<std::size_t>(u)] = 1;
                if (rec())
                    return true;
                used[static_cast<std::size_t>(u)] = 0;
            }
        used[static_cast<std::size_t>(v)] = 0;
        return false;
    };
    return rec();
}

/// Some vertex subset S with |S| = 2 mod 4 whose induced subgraph is Hamiltonian.
inline bool cycle_2_mod_4(const Graph& g)
{
    const int n = g.order();
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (const auto& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)] |= 1u << e.v;
        adj[static_cast<std::size_t>(e.v)] |= 1u << e.u;
    }
    // reach[S][v]: Hamiltonian path in S from min(S) to v
    const std::uint32_t full = 1u << n;
    std::vector<std::uint32_t> reach(full, 0);
    for (int s = 0; s < n; ++s)
        reach[1u << s] = 1u << s;
    for (std::uint32_t S = 1; S < full; ++S) {
        if (!reach[S])
            continue;
        const int lo = __builtin_ctz(S);
        for (int v = 0; v < n; ++v) {
            if (!(reach[S] >> v & 1))
                continue;
            std::uint32_t ext = adj[static_cast<std::size_t>(v)] & ~S & ~((1u << lo) - 1);
            for (int w = 0; w < n; ++w)
                if (ext >> w & 1)
                    reach[S | 1u << w] |= 1u << w;
        }
        const int size = __builtin_popcount(S);
        if (size >= 3 && size % 4 == 2 && (reach[S] & adj[static_cast<std::size_t>(lo)]))
            return true;
    }
    return false;
}

inline int min_edge_deletion(const Graph& g)
{
    int best = g.size();
    const int n = g.order();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << std::max(0, n - 1)); ++mask) {
        int c = 0;
        for (const auto& e : g.edges())
            if ((mask >> e.u & 1) == (mask >> e.v & 1))
                ++c;
        best = std::min(best, c);
    }
    return best;
}

} // namespace oracle
