#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "../decomposition.hpp"
#include "gadget.hpp"

namespace naeflow {

struct ThreePartitionGadget {
    GadgetInstance instance;
    std::vector<std::int64_t> a;
    std::int64_t k = 0;
    int n = 0;
    std::vector<std::vector<int>> x;   // x[i][j], i < n, j < 3n
    std::vector<std::array<int, 2>> y; // y^1_i, y^2_i
    std::vector<std::array<int, 5>> z; // z^1_j .. z^5_j
};

inline void check_three_partition_input(const std::vector<std::int64_t>& a, std::int64_t k)
{
    if (a.empty() || a.size() % 3 != 0)
        throw precondition_error("number of elements must be a positive multiple of 3");
    const auto n = static_cast<std::int64_t>(a.size() / 3);
    if (std::accumulate(a.begin(), a.end(), std::int64_t{0}) != n * k)
        throw precondition_error("elements do not sum to n*k");
    for (std::size_t j = 0; j < a.size(); ++j)
        if (!(4 * a[j] > k && 2 * a[j] < k))
            throw precondition_error("element " + std::to_string(j) + " = " + std::to_string(a[j]) +
                                     " violates k/4 < a < k/2");
}

/// Vertex-weighted bipartite gadget whose weighted 1-in-Degree decompositions
/// are the 3-partitions: x_{i,j} in A means element j goes to part i.
inline ThreePartitionGadget gen_three_partition_graph(const std::vector<std::int64_t>& a, std::int64_t k)
{
    check_three_partition_input(a, k);
    ThreePartitionGadget out;
    out.a = a;
    out.k = k;
    out.n = static_cast<int>(a.size() / 3);
    const int n = out.n, m = 3 * n;
    detail::gadget_builder b;
    std::vector<std::int64_t> w;
    auto add = [&](const char* role, std::string src, int idx, std::int64_t weight) {
        w.push_back(weight);
        return b.add(role, std::move(src), idx);
    };
    out.x.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(m)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            out.x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                add("x", "part" + std::to_string(i), j, a[static_cast<std::size_t>(j)]);
    for (int i = 0; i < n; ++i) {
        const std::string src = "part" + std::to_string(i);
        out.y.push_back({add("y1", src, i, 1), add("y2", src, i, 1 - k)});
    }
    for (int j = 0; j < m; ++j) {
        const std::string src = "a" + std::to_string(j);
        const std::int64_t aj = a[static_cast<std::size_t>(j)];
        out.z.push_back({add("z1", src, j, 1), add("z2", src, j, 1 - aj), add("z3", src, j, 1),
                         add("z4", src, j, 1), add("z5", src, j, aj)});
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            const int xv = out.x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            b.edge(out.y[static_cast<std::size_t>(i)][0], xv);
            b.edge(out.z[static_cast<std::size_t>(j)][0], xv);
        }
    for (int i = 0; i < n; ++i)
        b.edge(out.y[static_cast<std::size_t>(i)][0], out.y[static_cast<std::size_t>(i)][1]);
    for (const auto& zz : out.z) {
        b.edge(zz[0], zz[1]);
        b.edge(zz[1], zz[2]);
        b.edge(zz[1], zz[3]);
        b.edge(zz[2], zz[4]);
        b.edge(zz[3], zz[4]);
    }
    json params = {{"reduction", "three-partition"}, {"a", a}, {"k", k}, {"n", n}};
    out.instance = b.finish(std::move(params), std::move(w));
    return out;
}

/// Part i = {j : x_{i,j} in A}, as element indices.
inline std::vector<std::vector<int>> partition_from_coloring(const ThreePartitionGadget& gt, const Decomposition& d)
{
    if (!verify_one_in_degree_weighted(gt.instance.weighted(), d))
        throw precondition_error("not a weighted 1-in-Degree decomposition of the gadget");
    std::vector<std::vector<int>> parts(static_cast<std::size_t>(gt.n));
    for (int i = 0; i < gt.n; ++i)
        for (int j = 0; j < 3 * gt.n; ++j)
            if (d.contains(gt.x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]))
                parts[static_cast<std::size_t>(i)].push_back(j);
    for (const auto& p : parts) {
        std::int64_t s = 0;
        for (int j : p)
            s += gt.a[static_cast<std::size_t>(j)];
        if (p.size() != 3 || s != gt.k)
            throw construction_error("decomposition does not read back as a 3-partition");
    }
    return parts;
}

inline Decomposition coloring_from_partition(const ThreePartitionGadget& gt, const std::vector<std::vector<int>>& parts)
{
    const int m = 3 * gt.n;
    if (static_cast<int>(parts.size()) != gt.n)
        throw precondition_error("expected " + std::to_string(gt.n) + " parts");
    std::vector<int> owner(static_cast<std::size_t>(m), -1);
    for (int i = 0; i < gt.n; ++i) {
        const auto& p = parts[static_cast<std::size_t>(i)];
        std::int64_t s = 0;
        for (int j : p) {
            if (j < 0 || j >= m || owner[static_cast<std::size_t>(j)] >= 0)
                throw precondition_error("parts do not form a partition of the elements");
            owner[static_cast<std::size_t>(j)] = i;
            s += gt.a[static_cast<std::size_t>(j)];
        }
        if (s != gt.k)
            throw precondition_error("part " + std::to_string(i) + " sums to " + std::to_string(s));
    }
    if (std::find(owner.begin(), owner.end(), -1) != owner.end())
        throw precondition_error("parts do not cover every element");
    std::vector<int> a;
    for (int j = 0; j < m; ++j)
        a.push_back(gt.x[static_cast<std::size_t>(owner[static_cast<std::size_t>(j)])][static_cast<std::size_t>(j)]);
    for (const auto& yy : gt.y) {
        a.push_back(yy[0]);
        a.push_back(yy[1]);
    }
    for (const auto& zz : gt.z) {
        a.push_back(zz[1]);
        a.push_back(zz[2]);
        a.push_back(zz[4]);
    }
    Decomposition d(std::move(a));
    if (!verify_one_in_degree_weighted(gt.instance.weighted(), d))
        throw construction_error("partition witness is not a weighted 1-in-Degree decomposition");
    return d;
}

/// Exhaustive 3-partition search: returns parts as element indices.
inline std::optional<std::vector<std::vector<int>>> brute_force_three_partition(const std::vector<std::int64_t>& a,
                                                                                std::int64_t k)
{
    const int m = static_cast<int>(a.size());
    if (m % 3 != 0)
        return std::nullopt;
    std::vector<int> owner(static_cast<std::size_t>(m), -1);
    std::vector<std::vector<int>> parts;
    // fill parts one at a time, each starting at the lowest unplaced element
    auto rec = [&](auto&& self) -> bool {
        auto first = std::find(owner.begin(), owner.end(), -1);
        if (first == owner.end())
            return true;
        const int i0 = static_cast<int>(first - owner.begin());
        const int p = static_cast<int>(parts.size());
        for (int i1 = i0 + 1; i1 < m; ++i1) {
            if (owner[static_cast<std::size_t>(i1)] >= 0)
                continue;
            for (int i2 = i1 + 1; i2 < m; ++i2) {
                if (owner[static_cast<std::size_t>(i2)] >= 0)
                    continue;
                if (a[static_cast<std::size_t>(i0)] + a[static_cast<std::size_t>(i1)] + a[static_cast<std::size_t>(i2)] != k)
                    continue;
                for (int i : {i0, i1, i2})
                    owner[static_cast<std::size_t>(i)] = p;
                parts.push_back({i0, i1, i2});
                if (self(self))
                    return true;
                parts.pop_back();
                for (int i : {i0, i1, i2})
                    owner[static_cast<std::size_t>(i)] = -1;
            }
        }
        return false;
    };
    if (!rec(rec))
        return std::nullopt;
    return parts;
}

} // namespace naeflow
