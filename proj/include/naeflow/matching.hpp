#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <vector>

#include "graph.hpp"

namespace naeflow {

/// Edge ids, pairwise vertex-disjoint, ascending.
using Matching = std::vector<int>;

inline bool is_matching(const Graph& g, const Matching& m)
{
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    for (int id : m) {
        if (id < 0 || id >= g.size())
            return false;
        const Edge& e = g.edge(id);
        if (used[static_cast<std::size_t>(e.u)] || used[static_cast<std::size_t>(e.v)])
            return false;
        used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 1;
    }
    return true;
}

inline bool is_perfect_matching(const Graph& g, const Matching& m)
{
    return is_matching(g, m) && 2 * static_cast<int>(m.size()) == g.order();
}

/// Maximum cardinality matching by Edmonds' blossom algorithm (BFS from each
/// free vertex in id order, contracting odd cycles via base pointers).
inline Matching maximum_matching(const Graph& g)
{
    const int n = g.order();
    std::vector<int> match(static_cast<std::size_t>(n), -1), parent(static_cast<std::size_t>(n)),
        base(static_cast<std::size_t>(n));
    std::vector<char> used(static_cast<std::size_t>(n)), blossom(static_cast<std::size_t>(n));
    auto at = [](std::vector<int>& v, int i) -> int& { return v[static_cast<std::size_t>(i)]; };

    auto lca = [&](int a, int b) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (;;) {
            a = at(base, a);
            seen[static_cast<std::size_t>(a)] = 1;
            if (at(match, a) == -1)
                break;
            a = at(parent, at(match, a));
        }
        for (;;) {
            b = at(base, b);
            if (seen[static_cast<std::size_t>(b)])
                return b;
            b = at(parent, at(match, b));
        }
    };
    auto mark_path = [&](int v, int b, int child) {
        while (at(base, v) != b) {
            blossom[static_cast<std::size_t>(at(base, v))] = blossom[static_cast<std::size_t>(at(base, at(match, v)))] = 1;
            at(parent, v) = child;
            child = at(match, v);
            v = at(parent, at(match, v));
        }
    };
    auto find_path = [&](int root) -> int {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        for (int i = 0; i < n; ++i)
            at(base, i) = i;
        used[static_cast<std::size_t>(root)] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g.neighbors(v)) {
                if (at(base, v) == at(base, to) || at(match, v) == to)
                    continue;
                if (to == root || (at(match, to) != -1 && at(parent, at(match, to)) != -1)) {
                    int cur = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n; ++i)
                        if (blossom[static_cast<std::size_t>(at(base, i))]) {
                            at(base, i) = cur;
                            if (!used[static_cast<std::size_t>(i)]) {
                                used[static_cast<std::size_t>(i)] = 1;
                                q.push(i);
                            }
                        }
                } else if (at(parent, to) == -1) {
                    at(parent, to) = v;
                    if (at(match, to) == -1)
                        return to;
                    used[static_cast<std::size_t>(at(match, to))] = 1;
                    q.push(at(match, to));
                }
            }
        }
        return -1;
    };

    for (int v = 0; v < n; ++v) {
        if (at(match, v) != -1)
            continue;
        int u = find_path(v);
        while (u != -1) {
            int pv = at(parent, u), ppv = at(match, pv);
            at(match, u) = pv;
            at(match, pv) = u;
            u = ppv;
        }
    }
    Matching m;
    for (int v = 0; v < n; ++v)
        if (at(match, v) > v)
            m.push_back(*g.edge_id(v, at(match, v)));
    std::sort(m.begin(), m.end());
    return m;
}

/// 1-in-Degree edge coloring: the edges colored 1 form a perfect matching.
inline std::optional<Matching> one_in_degree_edge(const Graph& g)
{
    if (g.order() % 2 != 0)
        return std::nullopt;
    Matching m = maximum_matching(g);
    if (!is_perfect_matching(g, m))
        return std::nullopt;
    return m;
}

} // namespace naeflow
