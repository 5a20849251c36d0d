#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>

#include "naeflow/cycles.hpp"
#include "naeflow/families.hpp"
#include "naeflow/reductions.hpp"
#include "support.hpp"

using namespace naeflow;

namespace {

PositiveFormula k4_formula() { return PositiveFormula(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }
PositiveFormula triple_xyz() { return PositiveFormula(3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}); }
PositiveFormula single_clause() { return PositiveFormula(3, {{0, 1, 2}}); }

PositiveFormula fano_formula()
{
    std::vector<std::vector<int>> cls;
    for (int i = 0; i < 7; ++i)
        cls.push_back({i, (i + 1) % 7, (i + 3) % 7});
    return PositiveFormula(7, cls);
}

// cubic planar formulas with a 1-in-3 model, found by seeded search
std::vector<PositiveFormula> satisfiable_cubic_planar(int n, int want, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<PositiveFormula> out;
    for (int tries = 0; tries < 20000 && static_cast<int>(out.size()) < want; ++tries) {
        auto f = oracle::random_cubic_formula(n, rng);
        if (validate_cubic_planar(f) && solve_one_in_k(f))
            out.push_back(f);
    }
    return out;
}

void expect_provenance_total(const GadgetInstance& gi)
{
    ASSERT_EQ(static_cast<int>(gi.provenance.size()), gi.graph.order());
    for (const auto& p : gi.provenance) {
        EXPECT_FALSE(p.role.empty());
        EXPECT_FALSE(p.source.empty());
    }
}

std::vector<int> degree4_vertices(const Graph& g)
{
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 4)
            out.push_back(v);
    return out;
}

} // namespace

// ---- tree-like instances ----

TEST(TreeLike, Examples)
{
    auto t = make_tree_like(k4_formula());
    EXPECT_EQ(t.clause_tree_edges.size(), 3u);
    EXPECT_TRUE(validate_tree_like(t));
    auto one = make_tree_like(single_clause(), false);
    EXPECT_TRUE(one.clause_tree_edges.empty());
    EXPECT_THROW(make_tree_like(triple_xyz()), precondition_error);
    EXPECT_THROW(make_tree_like(single_clause()), precondition_error);
}

TEST(TreeLike, RandomCubicPlanarFormulas)
{
    std::mt19937_64 rng(4);
    int built = 0;
    for (int tries = 0; tries < 400; ++tries) {
        auto f = oracle::random_cubic_formula(3 + tries % 8, rng);
        if (!validate_cubic_planar(f))
            continue;
        auto t = make_tree_like(f);
        EXPECT_TRUE(validate_tree_like(t));
        EXPECT_EQ(static_cast<int>(t.clause_tree_edges.size()), f.num_clauses() - 1);
        ++built;
    }
    EXPECT_GT(built, 30);
}

// ---- zero-sum gadget ----

TEST(ZeroSumGadget, SingleClauseStructure)
{
    auto gz = gen_zero_sum_instance(make_tree_like(single_clause(), false));
    const Graph& g = gz.instance.graph;
    expect_provenance_total(gz.instance);
    EXPECT_TRUE(is_planar(g));
    auto prof = degree_profile(g);
    EXPECT_EQ(prof.min_degree, 3);
    EXPECT_EQ(prof.max_degree, 4);
    // b_c, the three important vertices and the three f_v have degree 4
    const auto& cp = gz.clauses[0];
    std::vector<int> expected{cp.b};
    for (const auto& imp : cp.important) {
        expected.push_back(imp.w);
        expected.push_back(imp.f);
    }
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(degree4_vertices(g), expected);
    // 8 cycle + 4 I copies + b + 3 f + 6 I copies at f + 3 single-occurrence variables
    EXPECT_EQ(g.order(), 8 + 4 * 5 + 1 + 3 + 6 * 5 + 3 * 5);
    auto v = validate_zero_sum_gadget(gz);
    ASSERT_EQ(v.diagnostics.size(), 1u);
    EXPECT_NE(v.diagnostics[0].find("7 vertices of degree 4 for 1 clauses"), std::string::npos);
}

TEST(ZeroSumGadget, K4FormulaStructure)
{
    auto gz = gen_zero_sum_instance(make_tree_like(k4_formula()));
    const Graph& g = gz.instance.graph;
    expect_provenance_total(gz.instance);
    EXPECT_TRUE(is_planar(g));
    auto prof = degree_profile(g);
    EXPECT_EQ(prof.semiregular, 3);
    EXPECT_EQ(degree4_vertices(g).size(), 7u * 4);
    for (const auto& r : gz.igadgets) {
        std::vector<int> inside{r.u, r.a, r.b, r.c, r.d};
        int outside = 0;
        for (int w : g.neighbors(r.u))
            outside += std::find(inside.begin(), inside.end(), w) == inside.end();
        EXPECT_EQ(outside, 1);
        for (int x : inside)
            EXPECT_EQ(g.degree(x), 3);
    }
    auto v = validate_zero_sum_gadget(gz);
    EXPECT_EQ(v.diagnostics.size(), 1u);
    // the K4 formula has no 1-in-3 model
    EXPECT_THROW(witness_flow_from_assignment(gz, {true, false, false, false}), precondition_error);
}

TEST(ZeroSumGadget, ForwardWitnessOnSingleClause)
{
    auto gz = gen_zero_sum_instance(make_tree_like(single_clause(), false));
    for (int t = 0; t < 3; ++t) {
        Assignment a(3, false);
        a[static_cast<std::size_t>(t)] = true;
        auto lab = witness_flow_from_assignment(gz, a);
        EXPECT_TRUE(verify_zero_sum(gz.instance.graph, lab, 3));
        EXPECT_TRUE(validate_flow_lemmas(gz, lab)) << join_diagnostics(validate_flow_lemmas(gz, lab));
        EXPECT_EQ(assignment_from_flow(gz, lab), a);
        // the negated flow reads back the same assignment
        for (auto& x : lab)
            x = -x;
        EXPECT_EQ(assignment_from_flow(gz, lab), a);
    }
    EXPECT_THROW(witness_flow_from_assignment(gz, {true, true, false}), precondition_error);
    EdgeLabeling junk(static_cast<std::size_t>(gz.instance.graph.size()), 1);
    EXPECT_THROW(assignment_from_flow(gz, junk), precondition_error);
}

TEST(ZeroSumGadget, SolverFlowOnSingleClauseDecodes)
{
    auto gz = gen_zero_sum_instance(make_tree_like(single_clause(), false));
    SearchControl ctl;
    ctl.max_seconds = 60;
    auto lab = solve_zero_sum(gz.instance.graph, 3, ctl);
    ASSERT_TRUE(lab);
    EXPECT_TRUE(validate_flow_lemmas(gz, *lab));
    auto a = assignment_from_flow(gz, *lab);
    EXPECT_TRUE(eval(gz.source.formula, a, SatMode::one_in_k));
}

TEST(ZeroSumGadget, ForwardWitnessOnSatisfiableCubicFormulas)
{
    auto fs = satisfiable_cubic_planar(6, 4, 99);
    ASSERT_FALSE(fs.empty());
    for (const auto& f : fs) {
        auto gz = gen_zero_sum_instance(make_tree_like(f));
        EXPECT_TRUE(is_planar(gz.instance.graph));
        EXPECT_EQ(degree_profile(gz.instance.graph).semiregular, 3);
        auto a = *solve_one_in_k(f);
        auto lab = witness_flow_from_assignment(gz, a);
        EXPECT_TRUE(verify_zero_sum(gz.instance.graph, lab, 3));
        EXPECT_TRUE(validate_flow_lemmas(gz, lab));
        EXPECT_EQ(assignment_from_flow(gz, lab), a);
    }
}

TEST(ZeroSumGadget, JsonRoundTrip)
{
    auto gz = gen_zero_sum_instance(make_tree_like(single_clause(), false));
    auto back = gadget_from_json(gadget_to_json(gz.instance));
    EXPECT_EQ(back.graph, gz.instance.graph);
    EXPECT_EQ(back.provenance, gz.instance.provenance);
    EXPECT_EQ(back.params.at("reduction"), "zero-sum");
    auto j = gadget_to_json(gz.instance);
    j["provenance"].erase(0);
    EXPECT_THROW(gadget_from_json(j), format_error);
}

// ---- padding and the regular bipartite gadget ----

TEST(Padding, ThreeCopiesForR3)
{
    auto fp = pad_formula(k4_formula(), 3);
    EXPECT_EQ(fp.num_vars(), 12);
    EXPECT_EQ(fp.num_clauses(), 12);
    for (const auto& cl : fp.clauses())
        EXPECT_EQ(cl.size(), 3u);
    EXPECT_THROW(pad_formula(k4_formula(), 2), precondition_error);
    EXPECT_THROW(pad_formula(single_clause(), 3), precondition_error);
}

TEST(Padding, LiteralCountsForR4)
{
    const int r = 4, s = 4, V = 4;
    auto fp = pad_clauses(k4_formula(), r);
    const int groups = (r - 3) * s;
    EXPECT_EQ(fp.num_clauses(), r * (r - 2) * s + groups * r);
    EXPECT_EQ(fp.num_vars(), r * (r - 2) * V + groups * 2 * (r - 1));
    for (const auto& cl : fp.clauses())
        EXPECT_EQ(static_cast<int>(cl.size()), r);
    auto occ = fp.occurrences();
    const int copied = r * (r - 2) * V;
    for (int x = 0; x < fp.num_vars(); ++x)
        EXPECT_EQ(occ[static_cast<std::size_t>(x)], x < copied ? 3 : r) << x;
    EXPECT_THROW(pad_formula(k4_formula(), r), construction_error);
}

TEST(Padding, GroupClausesForceTheirVariables)
{
    // the r clauses of one group alone: alpha_1 true, everything else false
    for (int r = 3; r <= 6; ++r) {
        std::vector<std::vector<int>> cls;
        auto eps = [](int i) { return i - 1; };
        auto alpha = [r](int k) { return r - 1 + k - 1; };
        for (int i = 1; i <= r - 1; ++i) {
            std::vector<int> cl{eps(i)};
            for (int k = 1; k <= r - 1; ++k)
                cl.push_back(alpha(k));
            cls.push_back(cl);
        }
        std::vector<int> last{alpha(1)};
        for (int k = 1; k <= r - 1; ++k)
            last.push_back(eps(k));
        cls.push_back(last);
        PositiveFormula g(2 * (r - 1), cls);
        int models = 0;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.num_vars()); ++m) {
            Assignment a(static_cast<std::size_t>(g.num_vars()));
            for (int x = 0; x < g.num_vars(); ++x)
                a[static_cast<std::size_t>(x)] = m >> x & 1;
            if (!eval(g, a, SatMode::one_in_k))
                continue;
            ++models;
            for (int x = 0; x < g.num_vars(); ++x)
                EXPECT_EQ(a[static_cast<std::size_t>(x)], x == alpha(1));
        }
        EXPECT_EQ(models, 1) << r;
    }
}

TEST(RegularBipartite, VertexCountsForThreeCopiesOfK4Formula)
{
    auto gr = gen_regular_bipartite(pad_formula(k4_formula(), 3), 3);
    const Graph& g = gr.instance.graph;
    EXPECT_EQ(g.order(), 12 * 57 + 12 * 3);
    EXPECT_EQ(degree_profile(g).regular, 3);
    EXPECT_TRUE(is_bipartite(g));
    expect_provenance_total(gr.instance);
    std::map<std::string, int> roles;
    for (const auto& p : gr.instance.provenance)
        ++roles[p.role];
    EXPECT_EQ(roles["x"], 12 * 9);
    EXPECT_EQ(roles["alpha"], 12 * 9);
    EXPECT_EQ(roles["beta"], 12 * 18);
    EXPECT_EQ(roles["delta"], 12 * 9);
    EXPECT_EQ(roles["eps"], 12 * 9);
    EXPECT_EQ(roles["zeta"], 12 * 3);
    EXPECT_EQ(roles["c"], 12 * 3);
}

TEST(RegularBipartite, OneVariableFragmentDegrees)
{
    for (int r = 3; r <= 5; ++r) {
        std::vector<std::vector<int>> cls(static_cast<std::size_t>(r));
        for (int c = 0; c < r; ++c)
            for (int x = 0; x < r; ++x)
                cls[static_cast<std::size_t>(c)].push_back(x);
        // r identical clauses over r variables
        auto gr = gen_regular_bipartite(PositiveFormula(r, cls), r);
        EXPECT_EQ(degree_profile(gr.instance.graph).regular, r);
        EXPECT_TRUE(is_bipartite(gr.instance.graph));
        const int per_var = r * r * (1 + (r - 2) + (r - 1) + 1 + 1) + r;
        EXPECT_EQ(gr.instance.graph.order(), r * per_var + r * r);
    }
}

TEST(RegularBipartite, SoundnessOnSmallCubicFormulas)
{
    for (const auto& f : {triple_xyz(), k4_formula()}) {
        auto fp = pad_formula(f, 3);
        auto gr = gen_regular_bipartite(fp, 3);
        auto d = solve_one_in_degree(gr.instance.graph);
        ASSERT_EQ(d.has_value(), solve_one_in_k(f).has_value());
        ASSERT_EQ(solve_one_in_k(fp).has_value(), solve_one_in_k(f).has_value());
        if (!d)
            continue;
        EXPECT_TRUE(slots_uniform(gr, *d));
        auto a = assignment_from_decomposition(gr, *d);
        EXPECT_TRUE(eval(fp, a, SatMode::one_in_k));
        auto fwd = decomposition_from_assignment(gr, a);
        EXPECT_TRUE(verify_one_in_degree(gr.instance.graph, fwd));
        EXPECT_EQ(assignment_from_decomposition(gr, fwd), a);
    }
}

TEST(RegularBipartite, WitnessMapsOnEveryModel)
{
    auto fp = pad_formula(triple_xyz(), 3);
    auto gr = gen_regular_bipartite(fp, 3);
    int models = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << fp.num_vars()); ++m) {
        Assignment a(static_cast<std::size_t>(fp.num_vars()));
        for (int x = 0; x < fp.num_vars(); ++x)
            a[static_cast<std::size_t>(x)] = m >> x & 1;
        if (!eval(fp, a, SatMode::one_in_k))
            continue;
        ++models;
        auto d = decomposition_from_assignment(gr, a);
        EXPECT_TRUE(slots_uniform(gr, d));
        EXPECT_EQ(assignment_from_decomposition(gr, d), a);
    }
    EXPECT_EQ(models, 27);
    EXPECT_THROW(decomposition_from_assignment(gr, Assignment(static_cast<std::size_t>(fp.num_vars()), true)),
                 precondition_error);
}

// ---- three-partition gadget ----

TEST(ThreePartition, Examples)
{
    auto gt = gen_three_partition_graph({1, 1, 1}, 3);
    const Graph& g = gt.instance.graph;
    EXPECT_EQ(g.order(), 20);
    EXPECT_TRUE(is_bipartite(g));
    EXPECT_FALSE(has_cycle_2_mod_4(g).has_bad_cycle);
    expect_provenance_total(gt.instance);
    EXPECT_THROW(gen_three_partition_graph({1, 1, 2}, 4), precondition_error);
    EXPECT_THROW(gen_three_partition_graph({2, 2, 2}, 7), precondition_error);
    EXPECT_THROW(gen_three_partition_graph({2, 2}, 4), precondition_error);

    auto d = coloring_from_partition(gt, {{0, 1, 2}});
    EXPECT_EQ(partition_from_coloring(gt, d), (std::vector<std::vector<int>>{{0, 1, 2}}));
}

TEST(ThreePartition, WitnessErrors)
{
    std::vector<std::int64_t> a{5, 5, 6, 5, 5, 6};
    auto gt = gen_three_partition_graph(a, 16);
    EXPECT_THROW(coloring_from_partition(gt, {{0, 1, 3}, {2, 4, 5}}), precondition_error);
    EXPECT_THROW(coloring_from_partition(gt, {{0, 1, 2}, {0, 4, 5}}), precondition_error);
    EXPECT_THROW(coloring_from_partition(gt, {{0, 1, 2}}), precondition_error);
    auto d = coloring_from_partition(gt, {{0, 1, 2}, {3, 4, 5}});
    EXPECT_EQ(partition_from_coloring(gt, d), (std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}}));
}

TEST(ThreePartition, AllSingleTripleInstances)
{
    int instances = 0;
    for (int a1 = 1; a1 <= 6; ++a1)
        for (int a2 = 1; a2 <= 6; ++a2)
            for (int a3 = 1; a3 <= 6; ++a3) {
                std::vector<std::int64_t> a{a1, a2, a3};
                const std::int64_t k = a1 + a2 + a3;
                try {
                    check_three_partition_input(a, k);
                } catch (const precondition_error&) {
                    continue;
                }
                ++instances;
                auto gt = gen_three_partition_graph(a, k);
                auto d = solve_one_in_degree_weighted(gt.instance.weighted());
                ASSERT_EQ(d.has_value(), brute_force_three_partition(a, k).has_value());
                ASSERT_EQ(d.has_value(), oracle::one_in_degree_weighted(gt.instance.graph, *gt.instance.weights));
                auto parts = partition_from_coloring(gt, *d);
                EXPECT_EQ(coloring_from_partition(gt, parts), *d);
            }
    EXPECT_GT(instances, 20);
}

TEST(ThreePartition, TwoTripleInstancesBothWays)
{
    std::mt19937_64 rng(17);
    int yes = 0, no = 0;
    for (int trial = 0; trial < 3000 && (yes < 15 || no < 15); ++trial) {
        std::vector<std::int64_t> a(6);
        for (auto& x : a)
            x = 4 + static_cast<std::int64_t>(rng() % 5);
        const std::int64_t total = std::accumulate(a.begin(), a.end(), std::int64_t{0});
        if (total % 2)
            continue;
        const std::int64_t k = total / 2;
        try {
            check_three_partition_input(a, k);
        } catch (const precondition_error&) {
            continue;
        }
        auto gt = gen_three_partition_graph(a, k);
        auto d = solve_one_in_degree_weighted(gt.instance.weighted());
        auto bf = brute_force_three_partition(a, k);
        ASSERT_EQ(d.has_value(), bf.has_value());
        if (d) {
            ++yes;
            auto parts = partition_from_coloring(gt, *d);
            EXPECT_TRUE(verify_one_in_degree_weighted(gt.instance.weighted(), coloring_from_partition(gt, parts)));
        } else {
            ++no;
        }
    }
    EXPECT_GE(yes, 5);
    EXPECT_GE(no, 5);
}

// ---- bipartition gadget ----

TEST(Bipartition, Examples)
{
    auto gb = gen_bipartition_instance(single_clause());
    EXPECT_EQ(gb.instance.graph.order(), 6);
    EXPECT_EQ(gb.instance.graph.size(), 6);
    expect_provenance_total(gb.instance);
    EXPECT_EQ(min_edge_deletion_bipartition(families::cycle(5)).count, 1);
    EXPECT_EQ(min_edge_deletion_bipartition(families::complete(4)).count, 2);
    EXPECT_EQ(degree_profile(gen_bipartition_instance(k4_formula()).instance.graph).regular, 3);
    EXPECT_THROW(gen_bipartition_instance(PositiveFormula(2, {{0, 1}})), precondition_error);
}

TEST(Bipartition, DeletionIsExact)
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = oracle::random_graph(2 + trial % 13, 0.4, rng);
        auto res = min_edge_deletion_bipartition(g);
        ASSERT_EQ(res.count, oracle::min_edge_deletion(g)) << trial;
        EXPECT_EQ(static_cast<int>(res.edges.size()), res.count);
        EXPECT_TRUE(is_bipartite(remove_edges(g, res.edges)));
    }
}

TEST(Bipartition, NaeSatisfiableExactlyWhenDeletionEqualsClauses)
{
    std::vector<PositiveFormula> fs{triple_xyz(), k4_formula(), fano_formula()};
    std::mt19937_64 rng(2);
    for (int i = 0; i < 6; ++i)
        fs.push_back(oracle::random_cubic_formula(5 + i, rng));
    int unsat = 0;
    for (const auto& f : fs) {
        auto gb = gen_bipartition_instance(f);
        auto res = min_edge_deletion_bipartition(gb.instance.graph);
        const bool nae = solve_nae(f).has_value();
        EXPECT_GE(res.count, f.num_clauses());
        EXPECT_EQ(res.count == f.num_clauses(), nae);
        unsat += !nae;
        if (nae) {
            auto side = sides_from_nae_assignment(gb, *solve_nae(f));
            int inside = 0;
            for (const auto& e : gb.instance.graph.edges())
                inside += side[static_cast<std::size_t>(e.u)] == side[static_cast<std::size_t>(e.v)];
            EXPECT_EQ(inside, f.num_clauses());
        }
    }
    EXPECT_GE(unsat, 1);
}
