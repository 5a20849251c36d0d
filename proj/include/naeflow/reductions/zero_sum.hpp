#pragma once

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <string>
#include <vector>

#include "../flows.hpp"
#include "../formula.hpp"
#include "../planarity.hpp"
#include "gadget.hpp"

namespace naeflow {

inline std::string join_diagnostics(const Validation& v)
{
    std::string s;
    for (const auto& d : v.diagnostics)
        s += (s.empty() ? "" : "; ") + d;
    return s;
}

/// Adds clause-clause edges greedily over pairs (i, j), i < j, keeping each one
/// that preserves planarity, then keeps a BFS spanning tree of the clause
/// subgraph. `require_cubic` can be switched off for small structural toys.
inline TreeLikeInstance make_tree_like(const PositiveFormula& f, bool require_cubic = true)
{
    if (require_cubic) {
        auto v = validate_cubic_planar(f);
        if (!v)
            throw precondition_error("formula is not cubic planar: " + join_diagnostics(v));
    } else if (!is_planar(incidence_graph(f).graph)) {
        throw precondition_error("incidence graph is not planar");
    }
    const int V = f.num_vars(), C = f.num_clauses();
    if (C == 0)
        throw precondition_error("formula has no clauses");
    auto es = incidence_graph(f).graph.edge_pairs();
    std::vector<std::vector<int>> cadj(static_cast<std::size_t>(C));
    for (int i = 0; i < C; ++i)
        for (int j = i + 1; j < C; ++j) {
            es.emplace_back(V + i, V + j);
            if (is_planar(Graph(V + C, es))) {
                cadj[static_cast<std::size_t>(i)].push_back(j);
                cadj[static_cast<std::size_t>(j)].push_back(i);
            } else {
                es.pop_back();
            }
        }
    TreeLikeInstance t{f, {}};
    std::vector<char> seen(static_cast<std::size_t>(C), 0);
    std::deque<int> q{0};
    seen[0] = 1;
    while (!q.empty()) {
        int c = q.front();
        q.pop_front();
        for (int d : cadj[static_cast<std::size_t>(c)])
            if (!seen[static_cast<std::size_t>(d)]) {
                seen[static_cast<std::size_t>(d)] = 1;
                t.clause_tree_edges.emplace_back(std::min(c, d), std::max(c, d));
                q.push_back(d);
            }
    }
    if (static_cast<int>(t.clause_tree_edges.size()) != C - 1)
        throw construction_error("maximal planar clause augmentation left the clause subgraph disconnected (" +
                                 std::to_string(t.clause_tree_edges.size() + 1) + " of " + std::to_string(C) +
                                 " clauses reached from clause 0)");
    return t;
}

/// Copy of I(u): u adjacent to a and b, and {a, b, c, d} minus the edge ab.
/// t is the single outside neighbor of u.
struct IGadgetRef {
    int u = -1, a = -1, b = -1, c = -1, d = -1;
    int t = -1;
};

struct ZeroSumGadget {
    struct VariablePart {
        std::vector<int> cycle;                      // v1 w1 v2 w2 ... (empty for a single occurrence)
        std::vector<int> igadgets;
        std::vector<std::pair<int, int>> external;   // (own port, clause port), one per occurrence
    };
    struct Important {
        int w = -1, z = -1, f = -1;
        int variable = -1;
        int i_plus = -1, i_minus = -1;               // the two I copies hanging off f
    };
    struct ClausePart {
        std::vector<int> cycle;                      // v1 w1 ... v_{gamma+4} w_{gamma+4}
        std::vector<int> igadgets;
        int b = -1;
        int anchor = -1;                             // w_{gamma+4}
        std::vector<Important> important;
        std::vector<std::pair<int, int>> tree_links; // (own port, other clause port)
    };

    GadgetInstance instance;
    TreeLikeInstance source;
    std::vector<IGadgetRef> igadgets;
    std::vector<VariablePart> variables;
    std::vector<ClausePart> clauses;
};

namespace detail {

inline int add_igadget(gadget_builder& b, std::vector<IGadgetRef>& all, const std::string& source, int index)
{
    IGadgetRef r;
    r.u = b.add("I.u", source, index);
    r.a = b.add("I.a", source, index);
    r.b = b.add("I.b", source, index);
    r.c = b.add("I.c", source, index);
    r.d = b.add("I.d", source, index);
    b.edge(r.u, r.a);
    b.edge(r.u, r.b);
    b.edge(r.a, r.c);
    b.edge(r.a, r.d);
    b.edge(r.b, r.c);
    b.edge(r.b, r.d);
    b.edge(r.c, r.d);
    all.push_back(r);
    return static_cast<int>(all.size()) - 1;
}

} // namespace detail

/// Planar (3,4)-semiregular graph whose zero-sum 3-flows encode 1-in-3
/// assignments of the tree-like instance. Gadget ports are attached in the
/// rotation order of a planar embedding of the combined graph. Variables with
/// d >= 2 occurrences use a cycle of length 2d, a single occurrence uses a
/// bare I(u) whose u is the port.
inline ZeroSumGadget gen_zero_sum_instance(const TreeLikeInstance& t)
{
    auto val = validate_tree_like(t);
    if (!val)
        throw precondition_error("not a tree-like instance: " + join_diagnostics(val));
    const PositiveFormula& f = t.formula;
    const int V = f.num_vars(), C = f.num_clauses();
    for (int c = 0; c < C; ++c)
        if (f.clause(c).size() != 3)
            throw precondition_error("clause " + std::to_string(c) + " does not have 3 variables");
    auto occ = f.occurrences();
    for (int x = 0; x < V; ++x)
        if (occ[static_cast<std::size_t>(x)] == 0)
            throw precondition_error("variable " + std::to_string(x) + " does not occur");

    const Graph h = t.combined_graph();
    auto pr = planarity(h, true);
    if (!pr.planar || !pr.embedding)
        throw precondition_error("combined graph is not planar");
    // rotation at each vertex, started at its smallest edge id
    RotationSystem rot = *pr.embedding;
    for (auto& r : rot)
        std::rotate(r.begin(), std::min_element(r.begin(), r.end()), r.end());
    // port slot of H-edge e at endpoint x
    std::map<std::pair<int, int>, int> slot;
    for (int x = 0; x < h.order(); ++x)
        for (std::size_t i = 0; i < rot[static_cast<std::size_t>(x)].size(); ++i)
            slot[{x, rot[static_cast<std::size_t>(x)][i]}] = static_cast<int>(i);

    ZeroSumGadget out;
    out.source = t;
    detail::gadget_builder b;
    auto gamma = t.gamma();

    // port vertex of each H-vertex, per rotation slot
    std::vector<std::vector<int>> ports(static_cast<std::size_t>(h.order()));

    for (int x = 0; x < V; ++x) {
        const std::string src = "x" + std::to_string(x);
        auto& vp = out.variables.emplace_back();
        const int d = h.degree(x);
        if (d == 1) {
            int ig = detail::add_igadget(b, out.igadgets, src, 1);
            vp.igadgets.push_back(ig);
            ports[static_cast<std::size_t>(x)].push_back(out.igadgets[static_cast<std::size_t>(ig)].u);
            continue;
        }
        for (int i = 1; i <= d; ++i) {
            vp.cycle.push_back(b.add("v", src, i));
            vp.cycle.push_back(b.add("w", src, i));
        }
        for (int i = 0; i < 2 * d; ++i)
            b.edge(vp.cycle[static_cast<std::size_t>(i)], vp.cycle[static_cast<std::size_t>((i + 1) % (2 * d))]);
        for (int i = 1; i <= d; ++i) {
            int ig = detail::add_igadget(b, out.igadgets, src, i);
            vp.igadgets.push_back(ig);
            auto& r = out.igadgets[static_cast<std::size_t>(ig)];
            r.t = vp.cycle[static_cast<std::size_t>(2 * (i - 1))];
            b.edge(r.u, r.t);
        }
        for (int i = 0; i < d; ++i)
            ports[static_cast<std::size_t>(x)].push_back(vp.cycle[static_cast<std::size_t>(2 * i + 1)]);
    }

    for (int c = 0; c < C; ++c) {
        const std::string src = "c" + std::to_string(c);
        auto& cp = out.clauses.emplace_back();
        const int L = gamma[static_cast<std::size_t>(c)] + 4;
        const int hv = V + c;
        if (h.degree(hv) != L - 1)
            throw construction_error("clause vertex degree differs from gamma + 3");
        for (int i = 1; i <= L; ++i) {
            cp.cycle.push_back(b.add("v", src, i));
            cp.cycle.push_back(b.add("w", src, i));
        }
        for (int i = 1; i <= L; ++i) {
            int ig = detail::add_igadget(b, out.igadgets, src, i);
            cp.igadgets.push_back(ig);
            auto& r = out.igadgets[static_cast<std::size_t>(ig)];
            r.t = cp.cycle[static_cast<std::size_t>(2 * (i - 1))];
            b.edge(r.u, r.t);
        }
        cp.b = b.add("b", src);
        cp.anchor = cp.cycle.back();
        b.edge(cp.anchor, cp.b);
        for (int i = 0; i + 1 < L; ++i)
            ports[static_cast<std::size_t>(hv)].push_back(cp.cycle[static_cast<std::size_t>(2 * i + 1)]);
    }

    // H-edges become port-port edges
    for (int e = 0; e < h.size(); ++e) {
        const Edge& he = h.edge(e);
        int pu = ports[static_cast<std::size_t>(he.u)][static_cast<std::size_t>(slot.at({he.u, e}))];
        int pv = ports[static_cast<std::size_t>(he.v)][static_cast<std::size_t>(slot.at({he.v, e}))];
        b.edge(pu, pv);
        if (he.u < V) {
            out.variables[static_cast<std::size_t>(he.u)].external.emplace_back(pu, pv);
            // the occurrence port pv of clause he.v - V is important
            auto& cp = out.clauses[static_cast<std::size_t>(he.v - V)];
            ZeroSumGadget::Important imp;
            imp.w = pv;
            imp.variable = he.u;
            cp.important.push_back(imp);
        } else {
            out.clauses[static_cast<std::size_t>(he.u - V)].tree_links.emplace_back(pu, pv);
            out.clauses[static_cast<std::size_t>(he.v - V)].tree_links.emplace_back(pv, pu);
        }
    }

    // clause cycles, minus the edge w_j v_{j+1} of each important w_j
    for (int c = 0; c < C; ++c) {
        auto& cp = out.clauses[static_cast<std::size_t>(c)];
        std::sort(cp.important.begin(), cp.important.end(),
                  [](const auto& p, const auto& q) { return p.w < q.w; });
        std::vector<char> cut(cp.cycle.size(), 0);
        for (auto& imp : cp.important) {
            auto it = std::find(cp.cycle.begin(), cp.cycle.end(), imp.w);
            auto pos = static_cast<std::size_t>(it - cp.cycle.begin());
            cut[pos] = 1;
            imp.z = cp.cycle[pos + 1];
        }
        const std::size_t len = cp.cycle.size();
        for (std::size_t i = 0; i < len; ++i)
            if (!cut[i])
                b.edge(cp.cycle[i], cp.cycle[(i + 1) % len]);
        for (const auto& imp : cp.important)
            b.edge(imp.w, cp.b);
    }

    // f_v with its two I copies
    for (int c = 0; c < C; ++c) {
        const std::string src = "c" + std::to_string(c);
        auto& cp = out.clauses[static_cast<std::size_t>(c)];
        int k = 0;
        for (auto& imp : cp.important) {
            ++k;
            imp.f = b.add("f", src, k);
            imp.i_plus = detail::add_igadget(b, out.igadgets, src + "/f" + std::to_string(k), 1);
            imp.i_minus = detail::add_igadget(b, out.igadgets, src + "/f" + std::to_string(k), 2);
            for (int ig : {imp.i_plus, imp.i_minus}) {
                auto& r = out.igadgets[static_cast<std::size_t>(ig)];
                r.t = imp.f;
                b.edge(r.u, r.t);
            }
            b.edge(imp.f, imp.w);
            b.edge(imp.f, imp.z);
        }
    }

    json params = {{"reduction", "zero-sum"}, {"k", 3}, {"gamma", gamma}, {"formula", formula_to_json(f)},
                   {"clause_tree_edges", t.clause_tree_edges}};
    out.instance = b.finish(std::move(params));
    // variables with one occurrence: u's outside neighbor is the clause port
    for (int x = 0; x < V; ++x) {
        auto& vp = out.variables[static_cast<std::size_t>(x)];
        if (vp.cycle.empty())
            out.igadgets[static_cast<std::size_t>(vp.igadgets[0])].t = vp.external[0].second;
    }
    if (!is_planar(out.instance.graph))
        throw construction_error("rotation-ordered port assignment produced a non-planar graph");
    return out;
}

/// Structural checks: planar, all degrees in {3,4}, one degree-4 vertex per
/// clause, every I copy has 5 vertices with u having one outside neighbor.
inline Validation validate_zero_sum_gadget(const ZeroSumGadget& gz)
{
    Validation v;
    const Graph& g = gz.instance.graph;
    if (!is_planar(g))
        v.fail("gadget graph is not planar");
    int deg4 = 0;
    for (int x = 0; x < g.order(); ++x) {
        if (g.degree(x) == 4)
            ++deg4;
        else if (g.degree(x) != 3)
            v.fail("vertex " + std::to_string(x) + " has degree " + std::to_string(g.degree(x)));
    }
    if (deg4 != gz.source.formula.num_clauses())
        v.fail(std::to_string(deg4) + " vertices of degree 4 for " +
               std::to_string(gz.source.formula.num_clauses()) + " clauses");
    for (const auto& r : gz.igadgets) {
        const std::vector<int> inside{r.u, r.a, r.b, r.c, r.d};
        int outside = 0;
        for (int w : g.neighbors(r.u))
            if (std::find(inside.begin(), inside.end(), w) == inside.end())
                ++outside;
        if (outside != 1 || !g.adjacent(r.u, r.t))
            v.fail("I copy at u=" + std::to_string(r.u) + " has " + std::to_string(outside) + " outside neighbors");
        for (int w : {r.a, r.b, r.c, r.d})
            for (int y : g.neighbors(w))
                if (std::find(inside.begin(), inside.end(), y) == inside.end())
                    v.fail("I copy at u=" + std::to_string(r.u) + " leaks through an inner vertex");
    }
    return v;
}

namespace detail {

class edge_labeler {
public:
    edge_labeler(const Graph& g) : g_(g), lab_(static_cast<std::size_t>(g.size()), 0) {}

    void set(int a, int b, std::int64_t x)
    {
        auto id = g_.edge_id(a, b);
        if (!id)
            throw construction_error("labeling a missing edge " + std::to_string(a) + "-" + std::to_string(b));
        auto& slot = lab_[static_cast<std::size_t>(*id)];
        if (slot != 0 && slot != x)
            throw construction_error("conflicting labels on edge " + std::to_string(a) + "-" + std::to_string(b));
        slot = x;
    }

    // ut = 2s, ac = 2s, bd = 2s, the rest -s
    void igadget(const IGadgetRef& r, std::int64_t s)
    {
        set(r.u, r.t, 2 * s);
        set(r.u, r.a, -s);
        set(r.u, r.b, -s);
        set(r.a, r.c, 2 * s);
        set(r.a, r.d, -s);
        set(r.b, r.c, -s);
        set(r.b, r.d, 2 * s);
        set(r.c, r.d, -s);
    }

    EdgeLabeling finish()
    {
        for (std::size_t i = 0; i < lab_.size(); ++i)
            if (lab_[i] == 0)
                throw construction_error("edge " + std::to_string(i) + " left unlabeled");
        return std::move(lab_);
    }

private:
    const Graph& g_;
    EdgeLabeling lab_;
};

inline std::int64_t label_of(const Graph& g, const EdgeLabeling& lab, int a, int b)
{
    return lab[static_cast<std::size_t>(*g.edge_id(a, b))];
}

} // namespace detail

/// Explicit zero-sum 3-flow from a 1-in-3 assignment. Clause anchors
/// w_{gamma+4} b_c get -2; a true variable gadget has one +2 edge at each of
/// its vertices, a false one has one -2 edge at each.
inline EdgeLabeling witness_flow_from_assignment(const ZeroSumGadget& gz, const Assignment& a)
{
    const auto& f = gz.source.formula;
    if (!eval(f, a, SatMode::one_in_k))
        throw precondition_error("assignment does not satisfy the formula in the 1-in-3 sense");
    const Graph& g = gz.instance.graph;
    detail::edge_labeler lab(g);
    for (int x = 0; x < f.num_vars(); ++x) {
        const auto& vp = gz.variables[static_cast<std::size_t>(x)];
        const std::int64_t s = a[static_cast<std::size_t>(x)] ? 1 : -1;
        for (int ig : vp.igadgets)
            lab.igadget(gz.igadgets[static_cast<std::size_t>(ig)], s);
        for (std::size_t i = 0; i < vp.cycle.size(); ++i)
            lab.set(vp.cycle[i], vp.cycle[(i + 1) % vp.cycle.size()], -s);
        for (auto [p, q] : vp.external)
            lab.set(p, q, 2 * s);
    }
    for (const auto& cp : gz.clauses) {
        for (int ig : cp.igadgets)
            lab.igadget(gz.igadgets[static_cast<std::size_t>(ig)], -1);
        const std::size_t len = cp.cycle.size();
        for (std::size_t i = 0; i < len; ++i) {
            int p = cp.cycle[i], q = cp.cycle[(i + 1) % len];
            if (g.adjacent(p, q))
                lab.set(p, q, 1);
        }
        lab.set(cp.anchor, cp.b, -2);
        for (auto [p, q] : cp.tree_links)
            lab.set(p, q, -2);
        for (const auto& imp : cp.important) {
            const std::int64_t l = a[static_cast<std::size_t>(imp.variable)] ? 2 : -2;
            lab.set(imp.w, cp.b, -l);
            lab.set(imp.f, imp.w, -1);
            lab.set(imp.f, imp.z, 1);
            lab.igadget(gz.igadgets[static_cast<std::size_t>(imp.i_plus)], 1);
            lab.igadget(gz.igadgets[static_cast<std::size_t>(imp.i_minus)], -1);
        }
    }
    auto out = lab.finish();
    if (!verify_zero_sum(g, out, 3))
        throw construction_error("explicit labeling is not a zero-sum 3-flow");
    return out;
}

/// Reads the assignment off a zero-sum 3-flow: normalize the sign so clause
/// anchors carry -2, then x is true iff its gadget's outside edges carry +2.
inline Assignment assignment_from_flow(const ZeroSumGadget& gz, const EdgeLabeling& lab)
{
    const Graph& g = gz.instance.graph;
    if (static_cast<int>(lab.size()) != g.size() || !verify_zero_sum(g, lab, 3))
        throw precondition_error("labeling is not a zero-sum 3-flow on the gadget");
    const auto& f = gz.source.formula;
    const auto& c0 = gz.clauses.front();
    const std::int64_t anchor = detail::label_of(g, lab, c0.anchor, c0.b);
    if (std::llabs(anchor) != 2)
        throw construction_error("clause anchor edge carries " + std::to_string(anchor));
    const std::int64_t sign = anchor == -2 ? 1 : -1;
    Assignment a(static_cast<std::size_t>(f.num_vars()));
    for (int x = 0; x < f.num_vars(); ++x) {
        auto [p, q] = gz.variables[static_cast<std::size_t>(x)].external.front();
        a[static_cast<std::size_t>(x)] = sign * detail::label_of(g, lab, p, q) == 2;
    }
    if (!eval(f, a, SatMode::one_in_k))
        throw construction_error("assignment read from the flow does not satisfy the formula");
    return a;
}

/// Local label patterns forced by the zero-sum rule: at degree-3 vertices
/// {2,-1,-1} or {-2,1,1}; the +-2 edges among degree-3 vertices form a
/// matching; adjacent degree-3 vertices share the pattern; every I copy's
/// outside edge carries +-2; anchors agree in sign.
inline Validation validate_flow_lemmas(const ZeroSumGadget& gz, const EdgeLabeling& lab)
{
    Validation v;
    const Graph& g = gz.instance.graph;
    // +1 for {2,-1,-1}, -1 for {-2,1,1}, 0 for degree 4
    std::vector<int> type(static_cast<std::size_t>(g.order()), 0);
    for (int x = 0; x < g.order(); ++x) {
        std::vector<std::int64_t> ls;
        for (int id : g.incident_edges(x))
            ls.push_back(lab[static_cast<std::size_t>(id)]);
        std::sort(ls.begin(), ls.end());
        if (g.degree(x) == 3) {
            if (ls == std::vector<std::int64_t>{-1, -1, 2})
                type[static_cast<std::size_t>(x)] = 1;
            else if (ls == std::vector<std::int64_t>{-2, 1, 1})
                type[static_cast<std::size_t>(x)] = -1;
            else
                v.fail("degree-3 vertex " + std::to_string(x) + " has an illegal label pattern");
        } else if (g.degree(x) == 4) {
            const bool ok = ls == std::vector<std::int64_t>{-2, -1, 1, 2} ||
                            ls == std::vector<std::int64_t>{-2, -2, 2, 2} ||
                            ls == std::vector<std::int64_t>{-1, -1, 1, 1};
            if (!ok)
                v.fail("degree-4 vertex " + std::to_string(x) + " has an illegal label pattern");
        }
    }
    std::vector<int> big(static_cast<std::size_t>(g.order()), 0);
    for (const Edge& e : g.edges()) {
        if (g.degree(e.u) != 3 || g.degree(e.v) != 3)
            continue;
        const auto l = lab[static_cast<std::size_t>(*g.edge_id(e.u, e.v))];
        if (std::llabs(l) == 2) {
            ++big[static_cast<std::size_t>(e.u)];
            ++big[static_cast<std::size_t>(e.v)];
        }
        if (type[static_cast<std::size_t>(e.u)] != type[static_cast<std::size_t>(e.v)])
            v.fail("adjacent degree-3 vertices " + std::to_string(e.u) + "," + std::to_string(e.v) +
                   " carry different patterns");
    }
    for (int x = 0; x < g.order(); ++x)
        if (big[static_cast<std::size_t>(x)] > 1)
            v.fail("+-2 edges among degree-3 vertices are not a matching at " + std::to_string(x));
    for (const auto& r : gz.igadgets)
        if (std::llabs(detail::label_of(g, lab, r.u, r.t)) != 2)
            v.fail("I copy at u=" + std::to_string(r.u) + " has an outside label of absolute value 1");
    std::int64_t anchor = 0;
    for (const auto& cp : gz.clauses) {
        auto l = detail::label_of(g, lab, cp.anchor, cp.b);
        if (anchor == 0)
            anchor = l;
        if (std::llabs(l) != 2 || l != anchor)
            v.fail("clause anchors do not share one label of absolute value 2");
    }
    return v;
}

} // namespace naeflow
