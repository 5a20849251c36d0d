#pragma once

#include <string>
#include <vector>

#include "../decomposition.hpp"
#include "../formula.hpp"
#include "gadget.hpp"
#include "zero_sum.hpp"

namespace naeflow {

/// r(r-2) disjoint copies of a cubic formula plus (r-3)s groups of r clauses
/// over fresh variables eps_1..eps_{r-1}, alpha_1..alpha_{r-1}:
/// (eps_i or alpha_1 or ... or alpha_{r-1}) for each i, and
/// (alpha_1 or eps_1 or ... or eps_{r-1}). Every copied clause is then
/// filled up to r variables with the group variables that still lack
/// occurrences. Clause sizes come out r and the group variables occur r
/// times; the copied variables keep their 3 occurrences.
inline PositiveFormula pad_clauses(const PositiveFormula& f, int r)
{
    if (r < 3)
        throw precondition_error("r must be at least 3");
    auto v = validate_cubic(f);
    if (!v)
        throw precondition_error("formula is not cubic: " + join_diagnostics(v));
    const int V = f.num_vars(), s = f.num_clauses();
    const int copies = r * (r - 2);
    std::vector<std::vector<int>> clauses;
    for (int t = 0; t < copies; ++t)
        for (const auto& cl : f.clauses()) {
            auto& out = clauses.emplace_back();
            for (int x : cl)
                out.push_back(t * V + x);
        }
    const int copied = static_cast<int>(clauses.size());
    const int groups = (r - 3) * s;
    const int base = copies * V;
    auto eps = [&](int g, int i) { return base + g * 2 * (r - 1) + (i - 1); };
    auto alpha = [&](int g, int k) { return base + g * 2 * (r - 1) + (r - 1) + (k - 1); };

    // deficit slots, consecutive per variable
    std::vector<int> slots;
    for (int g = 0; g < groups; ++g) {
        for (int i = 1; i <= r - 1; ++i)
            for (int k = 0; k < r - 2; ++k)
                slots.push_back(eps(g, i));
        for (int k = 2; k <= r - 1; ++k)
            slots.push_back(alpha(g, k));
    }
    for (std::size_t t = 0; t < slots.size(); ++t)
        clauses[t % static_cast<std::size_t>(copied)].push_back(slots[t]);

    for (int g = 0; g < groups; ++g) {
        for (int i = 1; i <= r - 1; ++i) {
            auto& cl = clauses.emplace_back();
            cl.push_back(eps(g, i));
            for (int k = 1; k <= r - 1; ++k)
                cl.push_back(alpha(g, k));
        }
        auto& cl = clauses.emplace_back();
        cl.push_back(alpha(g, 1));
        for (int k = 1; k <= r - 1; ++k)
            cl.push_back(eps(g, k));
    }
    PositiveFormula out(base + groups * 2 * (r - 1), std::move(clauses));
    for (const auto& cl : out.clauses())
        if (static_cast<int>(cl.size()) != r)
            throw construction_error("padded clause size differs from r");
    auto occ = out.occurrences();
    for (int x = base; x < out.num_vars(); ++x)
        if (occ[static_cast<std::size_t>(x)] != r)
            throw construction_error("group variable occurrence count differs from r");
    return out;
}

/// pad_clauses, required to be an r-uniform r-regular formula. That holds for
/// r = 3 only: for r >= 4 the copied variables occur 3 times and this throws
/// construction_error naming them.
inline PositiveFormula pad_formula(const PositiveFormula& f, int r)
{
    auto out = pad_clauses(f, r);
    auto occ = out.occurrences();
    int short_vars = 0;
    for (int o : occ)
        short_vars += o != r;
    if (short_vars)
        throw construction_error(std::to_string(short_vars) + " padded variables occur fewer than r = " +
                                 std::to_string(r) + " times (copied variables keep 3 occurrences)");
    return out;
}

/// Index maps of the r-regular bipartite gadget. Per variable x and level k:
/// xs[x][k][j], alpha[x][k][j][i], beta[x][k][j][i], delta[x][k][j],
/// eps[x][k][j]; zeta[x][j]; clause vertices c[c][k].
struct RegularBipartiteGadget {
    GadgetInstance instance;
    PositiveFormula source;
    int r = 0;
    std::vector<std::vector<std::vector<int>>> xs, delta, eps;
    std::vector<std::vector<std::vector<std::vector<int>>>> alpha, beta;
    std::vector<std::vector<int>> zeta;
    std::vector<std::vector<int>> c;
    std::vector<std::vector<int>> slot_of; // slot_of[c][p]: j-slot used by the p-th variable of clause c
};

/// r-regular bipartite graph whose 1-in-Degree decompositions encode 1-in-r
/// assignments of fp. Clause c is joined at level k to x^k_j where j is the
/// position of c among the clauses containing x.
inline RegularBipartiteGadget gen_regular_bipartite(const PositiveFormula& fp, int r)
{
    if (r < 3)
        throw precondition_error("r must be at least 3");
    for (int c = 0; c < fp.num_clauses(); ++c)
        if (static_cast<int>(fp.clause(c).size()) != r)
            throw precondition_error("clause " + std::to_string(c) + " does not have r variables");
    auto occ = fp.occurrences();
    for (int x = 0; x < fp.num_vars(); ++x)
        if (occ[static_cast<std::size_t>(x)] != r)
            throw precondition_error("variable " + std::to_string(x) + " does not occur r times");

    const int X = fp.num_vars(), C = fp.num_clauses();
    const auto R = static_cast<std::size_t>(r);
    RegularBipartiteGadget out;
    out.source = fp;
    out.r = r;
    detail::gadget_builder b;
    auto sz = static_cast<std::size_t>(X);
    out.xs.assign(sz, std::vector<std::vector<int>>(R, std::vector<int>(R)));
    out.delta = out.xs;
    out.eps = out.xs;
    out.alpha.assign(sz, std::vector<std::vector<std::vector<int>>>(
                             R, std::vector<std::vector<int>>(R, std::vector<int>(R - 2))));
    out.beta.assign(sz, std::vector<std::vector<std::vector<int>>>(
                            R, std::vector<std::vector<int>>(R, std::vector<int>(R - 1))));
    out.zeta.assign(sz, std::vector<int>(R));

    for (std::size_t x = 0; x < sz; ++x) {
        const std::string src = "x" + std::to_string(x);
        auto idx = [&](std::size_t k, std::size_t j, std::size_t i = 0) {
            return static_cast<int>((k * R + j) * R + i);
        };
        for (std::size_t k = 0; k < R; ++k)
            for (std::size_t j = 0; j < R; ++j)
                out.xs[x][k][j] = b.add("x", src, idx(k, j));
        for (std::size_t k = 0; k < R; ++k)
            for (std::size_t j = 0; j < R; ++j)
                for (std::size_t i = 0; i + 2 < R; ++i)
                    out.alpha[x][k][j][i] = b.add("alpha", src, idx(k, j, i));
        for (std::size_t k = 0; k < R; ++k)
            for (std::size_t j = 0; j < R; ++j)
                for (std::size_t i = 0; i + 1 < R; ++i)
                    out.beta[x][k][j][i] = b.add("beta", src, idx(k, j, i));
        for (std::size_t k = 0; k < R; ++k)
            for (std::size_t j = 0; j < R; ++j)
                out.delta[x][k][j] = b.add("delta", src, idx(k, j));
        for (std::size_t k = 0; k < R; ++k)
            for (std::size_t j = 0; j < R; ++j)
                out.eps[x][k][j] = b.add("eps", src, idx(k, j));
        for (std::size_t j = 0; j < R; ++j)
            out.zeta[x][j] = b.add("zeta", src, static_cast<int>(j));

        for (std::size_t k = 0; k < R; ++k)
            for (std::size_t j = 0; j < R; ++j) {
                for (int a : out.alpha[x][k][j]) {
                    b.edge(out.xs[x][k][j], a);
                    for (int bt : out.beta[x][k][j])
                        b.edge(a, bt);
                }
                for (int bt : out.beta[x][k][j]) {
                    b.edge(bt, out.delta[x][k][j]);
                    b.edge(out.eps[x][k][j], bt);
                }
                b.edge(out.delta[x][k][j], out.xs[x][k][(j + 1) % R]);
                b.edge(out.eps[x][k][j], out.zeta[x][j]);
            }
    }

    out.c.assign(static_cast<std::size_t>(C), std::vector<int>(R));
    for (int c = 0; c < C; ++c)
        for (std::size_t k = 0; k < R; ++k)
            out.c[static_cast<std::size_t>(c)][k] = b.add("c", "c" + std::to_string(c), static_cast<int>(k));

    auto clauses_of = fp.clauses_of();
    out.slot_of.assign(static_cast<std::size_t>(C), {});
    for (int c = 0; c < C; ++c)
        for (int x : fp.clause(c)) {
            const auto& cs = clauses_of[static_cast<std::size_t>(x)];
            auto j = static_cast<std::size_t>(std::find(cs.begin(), cs.end(), c) - cs.begin());
            if (j >= R)
                throw construction_error("clause hookup found no free slot");
            out.slot_of[static_cast<std::size_t>(c)].push_back(static_cast<int>(j));
            for (std::size_t k = 0; k < R; ++k)
                b.edge(out.c[static_cast<std::size_t>(c)][k], out.xs[static_cast<std::size_t>(x)][k][j]);
        }

    json params = {{"reduction", "regular-bipartite"}, {"r", r}, {"formula", formula_to_json(fp)}};
    out.instance = b.finish(std::move(params));
    const Graph& g = out.instance.graph;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != r)
            throw construction_error("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    if (!is_bipartite(g))
        throw construction_error("gadget graph is not bipartite");
    return out;
}

/// Forward witness: x^k_j and zeta follow Gamma(x), beta_0 is its negation,
/// alpha and the other betas are false; eps, c are false and delta true below
/// level r-1, and the reverse at level r-1.
inline Decomposition decomposition_from_assignment(const RegularBipartiteGadget& gr, const Assignment& a)
{
    if (!eval(gr.source, a, SatMode::one_in_k))
        throw precondition_error("assignment does not satisfy the formula in the 1-in-r sense");
    const Graph& g = gr.instance.graph;
    const auto R = static_cast<std::size_t>(gr.r);
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    auto put = [&](int v, bool t) { in[static_cast<std::size_t>(v)] = t ? 1 : 0; };
    for (std::size_t x = 0; x < gr.xs.size(); ++x) {
        const bool t = a[x];
        for (std::size_t k = 0; k < R; ++k) {
            const bool top = k == R - 1;
            for (std::size_t j = 0; j < R; ++j) {
                put(gr.xs[x][k][j], t);
                for (int v : gr.alpha[x][k][j])
                    put(v, false);
                for (std::size_t i = 0; i + 1 < R; ++i)
                    put(gr.beta[x][k][j][i], i == 0 ? !t : false);
                put(gr.eps[x][k][j], top);
                put(gr.delta[x][k][j], !top);
            }
        }
        for (int z : gr.zeta[x])
            put(z, t);
    }
    for (const auto& cs : gr.c)
        for (std::size_t k = 0; k < R; ++k)
            put(cs[k], k == R - 1);
    auto d = Decomposition::from_indicator(in);
    if (!verify_one_in_degree(g, d))
        throw construction_error("forward witness is not a 1-in-Degree decomposition");
    return d;
}

/// Backward witness: Gamma(x) = [x^1_0 in A].
inline Assignment assignment_from_decomposition(const RegularBipartiteGadget& gr, const Decomposition& d)
{
    const Graph& g = gr.instance.graph;
    if (!verify_one_in_degree(g, d))
        throw precondition_error("not a 1-in-Degree decomposition of the gadget");
    Assignment a(gr.xs.size());
    for (std::size_t x = 0; x < gr.xs.size(); ++x)
        a[x] = d.contains(gr.xs[x][1][0]);
    if (!eval(gr.source, a, SatMode::one_in_k))
        throw construction_error("assignment read from the decomposition does not satisfy the formula");
    return a;
}

/// Membership of x^k_j in A is constant over j for every (x, k).
inline bool slots_uniform(const RegularBipartiteGadget& gr, const Decomposition& d)
{
    for (const auto& per_k : gr.xs)
        for (const auto& row : per_k)
            for (int v : row)
                if (d.contains(v) != d.contains(row.front()))
                    return false;
    return true;
}

} // namespace naeflow
