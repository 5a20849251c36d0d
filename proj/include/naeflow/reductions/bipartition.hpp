#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <string>
#include <vector>

#include "../formula.hpp"
#include "gadget.hpp"

namespace naeflow {

struct BipartitionGadget {
    GadgetInstance instance;
    PositiveFormula source;
    std::vector<int> r;                 // r_x per variable
    std::vector<std::vector<int>> c;    // c[clause][p]: vertex for the p-th variable of the clause
};

/// One vertex r_x per variable; per clause a triangle on c_x, c_y, c_z, each
/// joined to its variable's r vertex.
inline BipartitionGadget gen_bipartition_instance(const PositiveFormula& f)
{
    for (int c = 0; c < f.num_clauses(); ++c)
        if (f.clause(c).size() != 3)
            throw precondition_error("clause " + std::to_string(c) + " does not have 3 variables");
    BipartitionGadget out;
    out.source = f;
    detail::gadget_builder b;
    for (int x = 0; x < f.num_vars(); ++x)
        out.r.push_back(b.add("r", "x" + std::to_string(x)));
    for (int c = 0; c < f.num_clauses(); ++c) {
        auto& cs = out.c.emplace_back();
        for (int x : f.clause(c))
            cs.push_back(b.add("c", "c" + std::to_string(c) + "/x" + std::to_string(x), x));
        for (std::size_t p = 0; p < 3; ++p) {
            b.edge(cs[p], out.r[static_cast<std::size_t>(f.clause(c)[p])]);
            b.edge(cs[p], cs[(p + 1) % 3]);
        }
    }
    json params = {{"reduction", "bipartition"}, {"formula", formula_to_json(f)}};
    out.instance = b.finish(std::move(params));
    return out;
}

struct EdgeDeletionResult {
    int count = 0;
    std::vector<int> edges; ///< ids of the deleted (uncut) edges, ascending
    std::vector<int> side;  ///< 0/1 per vertex; deleted edges are those inside a side
};

namespace detail {

// Exact min uncut edges on one connected component (vertex list in BFS order).
class max_cut_bnb {
public:
    max_cut_bnb(const Graph& g, std::vector<int> order) : g_(g), order_(std::move(order))
    {
        pos_.assign(static_cast<std::size_t>(g.order()), -1);
        for (std::size_t i = 0; i < order_.size(); ++i)
            pos_[static_cast<std::size_t>(order_[i])] = static_cast<int>(i);
        cnt_.assign(static_cast<std::size_t>(g.order()), {0, 0});
        side_.assign(static_cast<std::size_t>(g.order()), -1);
    }

    // best[v] filled for the component's vertices
    int run(std::vector<int>& best)
    {
        greedy(best);
        best_cost_ = cost_of(best);
        best_ = &best;
        rec(0, 0);
        return best_cost_;
    }

private:
    int cost_of(const std::vector<int>& s) const
    {
        int c = 0;
        for (int v : order_)
            for (int w : g_.neighbors(v))
                if (v < w && s[static_cast<std::size_t>(v)] == s[static_cast<std::size_t>(w)])
                    ++c;
        return c;
    }

    // opposite of the majority of placed neighbors, then single flips while improving
    void greedy(std::vector<int>& s) const
    {
        for (int v : order_) {
            int c0 = 0, c1 = 0;
            for (int w : g_.neighbors(v)) {
                if (pos_[static_cast<std::size_t>(w)] >= pos_[static_cast<std::size_t>(v)])
                    continue;
                (s[static_cast<std::size_t>(w)] == 0 ? c0 : c1)++;
            }
            s[static_cast<std::size_t>(v)] = c0 > c1 ? 1 : 0;
        }
        for (bool improved = true; improved;) {
            improved = false;
            for (int v : order_) {
                int same = 0, other = 0;
                for (int w : g_.neighbors(v))
                    (s[static_cast<std::size_t>(w)] == s[static_cast<std::size_t>(v)] ? same : other)++;
                if (same > other) {
                    s[static_cast<std::size_t>(v)] ^= 1;
                    improved = true;
                }
            }
        }
    }

    int bound(std::size_t from) const
    {
        int lb = 0;
        for (std::size_t i = from; i < order_.size(); ++i) {
            const auto& c = cnt_[static_cast<std::size_t>(order_[i])];
            lb += std::min(c[0], c[1]);
        }
        return lb;
    }

    void place(int v, int s, int delta)
    {
        side_[static_cast<std::size_t>(v)] = delta > 0 ? s : -1;
        for (int w : g_.neighbors(v))
            cnt_[static_cast<std::size_t>(w)][static_cast<std::size_t>(s)] += delta;
    }

    void rec(std::size_t i, int cost)
    {
        if (cost + bound(i) >= best_cost_)
            return;
        if (i == order_.size()) {
            best_cost_ = cost;
            for (int v : order_)
                (*best_)[static_cast<std::size_t>(v)] = side_[static_cast<std::size_t>(v)];
            return;
        }
        const int v = order_[i];
        const auto c = cnt_[static_cast<std::size_t>(v)];
        // the first vertex is fixed to side 0; otherwise try the cheaper side first
        const int first = c[1] < c[0] ? 1 : 0;
        for (int s : {first, 1 - first}) {
            if (i == 0 && s == 1)
                break;
            place(v, s, 1);
            rec(i + 1, cost + c[static_cast<std::size_t>(s)]);
            place(v, s, -1);
        }
    }

    const Graph& g_;
    std::vector<int> order_, pos_, side_;
    std::vector<std::array<int, 2>> cnt_;
    int best_cost_ = 0;
    std::vector<int>* best_ = nullptr;
};

} // namespace detail

/// Minimum number of edges whose removal leaves a bipartite graph
/// (|E| minus the maximum cut), by branch and bound per connected component.
inline EdgeDeletionResult min_edge_deletion_bipartition(const Graph& g)
{
    EdgeDeletionResult res;
    res.side.assign(static_cast<std::size_t>(g.order()), 0);
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (int s = 0; s < g.order(); ++s) {
        if (seen[static_cast<std::size_t>(s)])
            continue;
        std::vector<int> order{s};
        seen[static_cast<std::size_t>(s)] = 1;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (int w : g.neighbors(order[i]))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    order.push_back(w);
                }
        detail::max_cut_bnb bnb(g, order);
        res.count += bnb.run(res.side);
    }
    for (int id = 0; id < g.size(); ++id)
        if (res.side[static_cast<std::size_t>(g.edge(id).u)] == res.side[static_cast<std::size_t>(g.edge(id).v)])
            res.edges.push_back(id);
    if (static_cast<int>(res.edges.size()) != res.count)
        throw construction_error("edge deletion count disagrees with the returned sides");
    return res;
}

/// NAE assignment -> sides of the gadget with exactly one uncut edge per triangle:
/// r_x on side [Gamma(x)], c_x on the opposite side.
inline std::vector<int> sides_from_nae_assignment(const BipartitionGadget& gb, const Assignment& a)
{
    if (!eval(gb.source, a, SatMode::nae))
        throw precondition_error("assignment is not NAE-satisfying");
    std::vector<int> side(static_cast<std::size_t>(gb.instance.graph.order()));
    for (std::size_t x = 0; x < gb.r.size(); ++x)
        side[static_cast<std::size_t>(gb.r[x])] = a[x] ? 1 : 0;
    for (int c = 0; c < gb.source.num_clauses(); ++c)
        for (std::size_t p = 0; p < 3; ++p)
            side[static_cast<std::size_t>(gb.c[static_cast<std::size_t>(c)][p])] =
                a[static_cast<std::size_t>(gb.source.clause(c)[p])] ? 0 : 1;
    return side;
}

} // namespace naeflow
