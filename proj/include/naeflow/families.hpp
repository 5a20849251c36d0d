#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace naeflow::families {

inline Graph cycle(int n)
{
    if (n < 3)
        throw precondition_error("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        es.emplace_back(i, (i + 1) % n);
    return Graph(n, es);
}

inline Graph path(int n)
{
    if (n < 1)
        throw precondition_error("path needs at least one vertex");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i)
        es.emplace_back(i, i + 1);
    return Graph(n, es);
}

inline Graph complete(int n)
{
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            es.emplace_back(i, j);
    return Graph(n, es);
}

/// K_{a,b} with sides {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(int a, int b)
{
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            es.emplace_back(i, a + j);
    return Graph(a + b, es);
}

inline Graph star(int leaves) { return complete_bipartite(1, leaves); }

/// d-dimensional hypercube; vertices are bit strings.
inline Graph hypercube(int d)
{
    const int n = 1 << d;
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < d; ++b)
            if (!(v & (1 << b)))
                es.emplace_back(v, v | (1 << b));
    return Graph(n, es);
}

/// Incidence graph of the Fano plane: points 0..6, lines 7..13, line i = {i, i+1, i+3}.
inline Graph heawood()
{
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 7; ++i)
        for (int s : {0, 1, 3})
            es.emplace_back((i + s) % 7, 7 + i);
    return Graph(14, es);
}

inline Graph petersen()
{
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);
        es.emplace_back(i, i + 5);
        es.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, es);
}

/// Two vertices joined by internally disjoint paths of the given lengths.
inline Graph theta(const std::vector<int>& lengths)
{
    std::vector<std::pair<int, int>> es;
    int n = 2;
    for (int len : lengths) {
        if (len < 1)
            throw precondition_error("theta path length must be positive");
        int prev = 0;
        for (int s = 1; s < len; ++s) {
            es.emplace_back(prev, n);
            prev = n++;
        }
        es.emplace_back(prev, 1);
    }
    return Graph(n, es);
}

/// Disjoint union; vertices of b are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b)
{
    auto es = a.edge_pairs();
    for (auto [u, v] : b.edge_pairs())
        es.emplace_back(u + a.order(), v + a.order());
    return Graph(a.order() + b.order(), es);
}

/// Random r-regular bipartite graph with m vertices per side, built as a union
/// of r random perfect matchings and rejected until simple.
template <class Rng>
Graph random_regular_bipartite(int m, int r, Rng& rng)
{
    if (r > m)
        throw precondition_error("degree exceeds side size");
    std::vector<int> perm(static_cast<std::size_t>(m));
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<std::vector<char>> used(static_cast<std::size_t>(m), std::vector<char>(static_cast<std::size_t>(m), 0));
        std::vector<std::pair<int, int>> es;
        bool ok = true;
        for (int t = 0; t < r && ok; ++t) {
            // a few reshuffles per layer before restarting from scratch
            bool placed = false;
            for (int tries = 0; tries < 50 && !placed; ++tries) {
                for (int i = 0; i < m; ++i)
                    perm[static_cast<std::size_t>(i)] = i;
                std::shuffle(perm.begin(), perm.end(), rng);
                placed = true;
                for (int i = 0; i < m; ++i)
                    if (used[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]) {
                        placed = false;
                        break;
                    }
            }
            if (!placed) {
                ok = false;
                break;
            }
            for (int i = 0; i < m; ++i) {
                int j = perm[static_cast<std::size_t>(i)];
                used[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
                es.emplace_back(i, m + j);
            }
        }
        if (ok)
            return Graph(2 * m, es);
    }
    throw search_limit_exceeded("could not sample a simple regular bipartite graph");
}

} // namespace naeflow::families
