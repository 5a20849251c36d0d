#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "exact_cover.hpp"
#include "graph.hpp"
#include "search.hpp"
#include "sum_csp.hpp"

namespace naeflow {

/// Vertex set A; the other part B is its complement.
struct Decomposition {
    std::vector<int> a; ///< ascending

    Decomposition() = default;
    explicit Decomposition(std::vector<int> verts) : a(std::move(verts))
    {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }

    static Decomposition from_indicator(const std::vector<char>& in_a)
    {
        Decomposition d;
        for (std::size_t v = 0; v < in_a.size(); ++v)
            if (in_a[v])
                d.a.push_back(static_cast<int>(v));
        return d;
    }

    std::vector<char> indicator(int n) const
    {
        std::vector<char> in(static_cast<std::size_t>(n), 0);
        for (int v : a) {
            if (v < 0 || v >= n)
                throw precondition_error("decomposition names vertex " + std::to_string(v) + " outside the graph");
            in[static_cast<std::size_t>(v)] = 1;
        }
        return in;
    }

    bool contains(int v) const { return std::binary_search(a.begin(), a.end(), v); }

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// |N(v) ∩ A| for every vertex.
inline std::vector<int> a_neighbor_counts(const Graph& g, const Decomposition& d)
{
    auto in = d.indicator(g.order());
    std::vector<int> cnt(static_cast<std::size_t>(g.order()), 0);
    for (int v = 0; v < g.order(); ++v)
        for (int u : g.neighbors(v))
            cnt[static_cast<std::size_t>(v)] += in[static_cast<std::size_t>(u)];
    return cnt;
}

inline bool verify_one_in_degree(const Graph& g, const Decomposition& d)
{
    auto cnt = a_neighbor_counts(g, d);
    return std::all_of(cnt.begin(), cnt.end(), [](int c) { return c == 1; });
}

inline bool verify_nae(const Graph& g, const Decomposition& d)
{
    auto cnt = a_neighbor_counts(g, d);
    for (int v = 0; v < g.order(); ++v) {
        int c = cnt[static_cast<std::size_t>(v)];
        if (c == 0 || c == g.degree(v))
            return false;
    }
    return true;
}

inline bool verify_one_in_degree_weighted(const VertexWeightedGraph& wg, const Decomposition& d)
{
    auto in = d.indicator(wg.graph.order());
    for (int v = 0; v < wg.graph.order(); ++v) {
        std::int64_t s = 0;
        for (int u : wg.graph.neighbors(v))
            if (in[static_cast<std::size_t>(u)])
                s += wg.weights[static_cast<std::size_t>(u)];
        if (s != 1)
            return false;
    }
    return true;
}

/// Exact 1-in-Degree (total perfect dominating set) search. Choosing u into A
/// covers N(u) exactly once, so the items split into classes joined by shared
/// neighbors (the two sides of a bipartite component are separate classes) and
/// each class is its own exact-cover instance.
inline std::optional<Decomposition> solve_one_in_degree(const Graph& g, const SearchControl& ctl = {})
{
    const int n = g.order();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v)
            v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        return v;
    };
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) == 0)
            return std::nullopt;
        const auto& nb = g.neighbors(u);
        for (std::size_t i = 1; i < nb.size(); ++i)
            parent[static_cast<std::size_t>(root(nb[i]))] = root(nb[0]);
    }
    std::vector<std::vector<int>> items(static_cast<std::size_t>(n)), options(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        items[static_cast<std::size_t>(root(v))].push_back(v);
    for (int u = 0; u < n; ++u)
        options[static_cast<std::size_t>(root(g.neighbors(u).front()))].push_back(u);

    std::vector<int> a;
    std::vector<int> local(static_cast<std::size_t>(n), -1);
    for (int r = 0; r < n; ++r) {
        const auto& cls = items[static_cast<std::size_t>(r)];
        if (cls.empty())
            continue;
        for (std::size_t i = 0; i < cls.size(); ++i)
            local[static_cast<std::size_t>(cls[i])] = static_cast<int>(i);
        ExactCover ec(static_cast<int>(cls.size()));
        const auto& opts = options[static_cast<std::size_t>(r)];
        for (int u : opts) {
            std::vector<int> its;
            for (int w : g.neighbors(u))
                its.push_back(local[static_cast<std::size_t>(w)]);
            ec.add_option(its);
        }
        auto sol = ec.solve(ctl);
        if (!sol)
            return std::nullopt;
        for (int opt : *sol)
            a.push_back(opts[static_cast<std::size_t>(opt)]);
    }
    return Decomposition(std::move(a));
}

namespace detail {

// Backtracking for "every listed set sees both sides". Used by solve_nae with
// the neighborhoods as sets.
class nae_search {
public:
    nae_search(int n, std::vector<std::vector<int>> sets, const SearchControl& ctl)
        : n_(n), sets_(std::move(sets)), budget_(ctl)
    {
        side_.assign(static_cast<std::size_t>(n), -1);
        member_of_.resize(static_cast<std::size_t>(n));
        for (int s = 0; s < static_cast<int>(sets_.size()); ++s)
            for (int v : sets_[static_cast<std::size_t>(s)])
                member_of_[static_cast<std::size_t>(v)].push_back(s);
        cnt_.assign(sets_.size(), {0, 0});
    }

    std::optional<std::vector<char>> run(int first_var)
    {
        for (const auto& s : sets_)
            if (s.size() < 2)
                return std::nullopt;
        // complementing a solution gives another, so the first vertex is fixed in A
        if (first_var >= 0) {
            if (!assign(first_var, 1) || !propagate())
                return std::nullopt;
        }
        if (!search())
            return std::nullopt;
        std::vector<char> out(static_cast<std::size_t>(n_), 0);
        for (int v = 0; v < n_; ++v)
            out[static_cast<std::size_t>(v)] = side_[static_cast<std::size_t>(v)] == 1;
        return out;
    }

private:
    bool assign(int v, int side)
    {
        side_[static_cast<std::size_t>(v)] = side;
        trail_.push_back(v);
        bool ok = true;
        for (int s : member_of_[static_cast<std::size_t>(v)]) {
            auto& c = cnt_[static_cast<std::size_t>(s)];
            ++c[static_cast<std::size_t>(side)];
            const int size = static_cast<int>(sets_[static_cast<std::size_t>(s)].size());
            if (c[static_cast<std::size_t>(side)] == size)
                ok = false;
            else if (c[static_cast<std::size_t>(side)] == size - 1 && c[static_cast<std::size_t>(1 - side)] == 0)
                pending_.push_back(s);
        }
        return ok;
    }

    void unassign_to(std::size_t mark)
    {
        while (trail_.size() > mark) {
            int v = trail_.back();
            trail_.pop_back();
            int side = side_[static_cast<std::size_t>(v)];
            for (int s : member_of_[static_cast<std::size_t>(v)])
                --cnt_[static_cast<std::size_t>(s)][static_cast<std::size_t>(side)];
            side_[static_cast<std::size_t>(v)] = -1;
        }
    }

    // a set with all but one member on one side forces the last member across
    bool propagate()
    {
        while (!pending_.empty()) {
            int s = pending_.back();
            pending_.pop_back();
            const auto& c = cnt_[static_cast<std::size_t>(s)];
            const int size = static_cast<int>(sets_[static_cast<std::size_t>(s)].size());
            int mono = -1;
            if (c[0] == size - 1 && c[1] == 0)
                mono = 0;
            else if (c[1] == size - 1 && c[0] == 0)
                mono = 1;
            if (mono < 0)
                continue;
            for (int v : sets_[static_cast<std::size_t>(s)])
                if (side_[static_cast<std::size_t>(v)] < 0) {
                    budget_.propagation();
                    if (!assign(v, 1 - mono)) {
                        pending_.clear();
                        return false;
                    }
                    break;
                }
        }
        return true;
    }

    // branch inside the unsatisfied set closest to monochromatic
    bool search()
    {
        int best = -1, best_free = 0;
        for (int s = 0; s < static_cast<int>(sets_.size()); ++s) {
            const auto& c = cnt_[static_cast<std::size_t>(s)];
            if (c[0] > 0 && c[1] > 0)
                continue;
            const int free = static_cast<int>(sets_[static_cast<std::size_t>(s)].size()) - c[0] - c[1];
            if (best < 0 || free < best_free) {
                best = s;
                best_free = free;
            }
        }
        if (best < 0) {
            // every set is bichromatic; leftover vertices are unconstrained
            for (int v = 0; v < n_; ++v)
                if (side_[static_cast<std::size_t>(v)] < 0)
                    assign(v, 0);
            return true;
        }
        budget_.node();
        int pick = -1;
        for (int v : sets_[static_cast<std::size_t>(best)])
            if (side_[static_cast<std::size_t>(v)] < 0 && (pick < 0 || v < pick))
                pick = v;
        const auto& c = cnt_[static_cast<std::size_t>(best)];
        // try the side the set still lacks first
        const int first = c[1] == 0 ? 1 : 0;
        for (int side : {first, 1 - first}) {
            const std::size_t mark = trail_.size();
            pending_.clear();
            if (assign(pick, side) && propagate() && search())
                return true;
            pending_.clear();
            unassign_to(mark);
        }
        return false;
    }

    int n_;
    std::vector<std::vector<int>> sets_;
    detail::search_budget budget_;
    std::vector<int> side_;
    std::vector<std::vector<int>> member_of_;
    std::vector<std::array<int, 2>> cnt_;
    std::vector<int> trail_;
    std::vector<int> pending_;
};

} // namespace detail

/// Exact NAE decomposition search (partition into two total dominating sets).
inline std::optional<Decomposition> solve_nae(const Graph& g, const SearchControl& ctl = {})
{
    std::vector<std::vector<int>> sets;
    for (int v = 0; v < g.order(); ++v)
        sets.emplace_back(g.neighbors(v).begin(), g.neighbors(v).end());
    int first = -1;
    for (int v = 0; v < g.order() && first < 0; ++v)
        if (g.degree(v) > 0)
            first = v;
    detail::nae_search s(g.order(), std::move(sets), ctl);
    auto in = s.run(first);
    if (!in)
        return std::nullopt;
    return Decomposition::from_indicator(*in);
}

/// f: V -> {0,1} with sum over N(v) of f(u) w(u) equal to 1 at every vertex.
inline std::optional<Decomposition> solve_one_in_degree_weighted(const VertexWeightedGraph& wg,
                                                                 const SearchControl& ctl = {})
{
    const Graph& g = wg.graph;
    SumCsp csp;
    for (int v = 0; v < g.order(); ++v)
        csp.add_variable({1, 0});
    for (int v = 0; v < g.order(); ++v) {
        std::vector<int> vars(g.neighbors(v).begin(), g.neighbors(v).end());
        std::vector<std::int64_t> coefs;
        for (int u : vars)
            coefs.push_back(wg.weights[static_cast<std::size_t>(u)]);
        csp.add_constraint(std::move(vars), std::move(coefs), 1);
    }
    auto sol = csp.solve(SumCsp::Branching::smallest_domain, ctl);
    if (!sol)
        return std::nullopt;
    Decomposition d;
    for (int v = 0; v < g.order(); ++v)
        if ((*sol)[static_cast<std::size_t>(v)] == 1)
            d.a.push_back(v);
    return d;
}

} // namespace naeflow
