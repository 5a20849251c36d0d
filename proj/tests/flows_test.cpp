#include <gtest/gtest.h>

#include <random>

#include "naeflow/enumerate.hpp"
#include "naeflow/families.hpp"
#include "naeflow/flows.hpp"
#include "support.hpp"

using namespace naeflow;
namespace fam = naeflow::families;

namespace {

// sign of the +-2 edge at each degree-3 vertex, 0 elsewhere
std::vector<int> two_sign(const Graph& g, const EdgeLabeling& lab)
{
    std::vector<int> s(static_cast<std::size_t>(g.order()), 0);
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) != 3)
            continue;
        for (int id : g.incident_edges(v))
            if (std::llabs(lab[static_cast<std::size_t>(id)]) == 2)
                s[static_cast<std::size_t>(v)] = lab[static_cast<std::size_t>(id)] > 0 ? 1 : -1;
    }
    return s;
}

void check_structure_lemmas(const Graph& g, const EdgeLabeling& lab)
{
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) != 3)
            continue;
        int twos = 0;
        for (int id : g.incident_edges(v))
            twos += std::llabs(lab[static_cast<std::size_t>(id)]) == 2;
        EXPECT_EQ(twos, 1) << "vertex " << v;
    }
    auto s = two_sign(g, lab);
    for (const auto& e : g.edges())
        if (g.degree(e.u) == 3 && g.degree(e.v) == 3) {
            EXPECT_EQ(s[static_cast<std::size_t>(e.u)], s[static_cast<std::size_t>(e.v)]);
        }
}

} // namespace

TEST(ZeroSum, VerifyExamples)
{
    auto c4 = fam::cycle(4);
    // edges of C4 in canonical order: 01, 03, 12, 23
    EXPECT_TRUE(verify_zero_sum(c4, {1, -1, -1, 1}, 2));
    EXPECT_FALSE(verify_zero_sum(c4, {1, 1, -1, -1}, 2));
    EXPECT_FALSE(verify_zero_sum(c4, {2, -2, -2, 2}, 2));
    EXPECT_TRUE(verify_zero_sum(c4, {2, -2, -2, 2}, 3));
    EXPECT_FALSE(verify_zero_sum(c4, {0, 0, 0, 0}, 3));
    EXPECT_THROW(verify_zero_sum(c4, {1, -1}, 2), precondition_error);
    EXPECT_THROW(verify_zero_sum(c4, {1, -1, -1, 1}, 1), precondition_error);

    EXPECT_FALSE(oracle::zero_sum_flow(fam::cycle(3), 3));
    EXPECT_FALSE(solve_zero_sum(fam::cycle(3), 3));

    // K4 edges: 01 02 03 12 13 23; matching {01, 23} = 2, rest -1
    EXPECT_TRUE(verify_zero_sum(fam::complete(4), {2, -1, -1, -1, -1, 2}, 3));
}

TEST(ZeroSum, SolveExamples)
{
    EXPECT_FALSE(solve_zero_sum(fam::cycle(5), 3));
    auto c6 = solve_zero_sum(fam::cycle(6), 2);
    ASSERT_TRUE(c6);
    EXPECT_TRUE(verify_zero_sum(fam::cycle(6), *c6, 2));
    for (auto x : *c6)
        EXPECT_EQ(std::llabs(x), 1);
    auto k4 = solve_zero_sum(fam::complete(4), 3);
    ASSERT_TRUE(k4);
    EXPECT_TRUE(verify_zero_sum(fam::complete(4), *k4, 3));
    EXPECT_FALSE(solve_zero_sum(fam::path(3), 5));
}

TEST(ZeroSum, AgreesWithLabelEnumeration)
{
    std::mt19937_64 rng(31);
    int yes = 0, no = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + trial % 5;
        auto g = oracle::random_graph(n, 0.55, rng);
        if (g.size() > 9)
            continue;
        for (int k = 2; k <= 3; ++k) {
            auto lab = solve_zero_sum(g, k);
            ASSERT_EQ(lab.has_value(), oracle::zero_sum_flow(g, k)) << trial << " k=" << k;
            if (lab) {
                ++yes;
                EXPECT_TRUE(verify_zero_sum(g, *lab, k));
            } else {
                ++no;
            }
        }
    }
    EXPECT_GT(yes, 20);
    EXPECT_GT(no, 20);
}

TEST(ZeroSum, BacktrackingOraclesAgreeWithOdometer)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = oracle::random_graph(3 + trial % 5, 0.5, rng);
        if (g.size() > 9)
            continue;
        for (int k = 2; k <= 3; ++k) {
            ASSERT_EQ(oracle::zero_sum_flow_bt(g, k), oracle::zero_sum_flow(g, k)) << trial;
            ASSERT_EQ(oracle::vertex_zero_sum_flow_bt(g, k), oracle::vertex_zero_sum_flow(g, k)) << trial;
        }
    }
}

TEST(ZeroSum, MonotoneInK)
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = oracle::random_graph(4 + trial % 6, 0.5, rng);
        for (int k = 2; k <= 4; ++k) {
            auto lab = solve_zero_sum(g, k);
            if (!lab)
                continue;
            for (int k2 = k; k2 <= 6; ++k2)
                EXPECT_TRUE(verify_zero_sum(g, *lab, k2));
            EXPECT_TRUE(solve_zero_sum(g, k + 1));
        }
    }
}

TEST(ZeroSum, ThreeFlowStructureOnSubcubicMixtures)
{
    // connected graphs with all degrees in {3,4}
    int checked = 0;
    for (int n = 5; n <= 9; ++n) {
        EnumerateOptions opt;
        opt.n = n;
        opt.connected = true;
        opt.min_degree = 3;
        opt.max_degree = 4;
        enumerate_graphs(opt, [&](const Graph& g) {
            auto lab = solve_zero_sum(g, 3);
            if (!lab)
                return;
            ++checked;
            ASSERT_TRUE(verify_zero_sum(g, *lab, 3));
            check_structure_lemmas(g, *lab);
        });
    }
    EXPECT_GT(checked, 100);
}

TEST(VertexZeroSum, VerifyExamples)
{
    // C4 in cycle order 0-1-2-3
    EXPECT_TRUE(verify_vertex_zero_sum(fam::cycle(4), {1, 1, -1, -1}, 2));
    EXPECT_FALSE(verify_vertex_zero_sum(fam::cycle(4), {1, -1, 1, -1}, 2));
    EXPECT_FALSE(oracle::vertex_zero_sum_flow(fam::cycle(3), 4));
    EXPECT_TRUE(verify_vertex_zero_sum(fam::complete_bipartite(3, 3), {2, -1, -1, 2, -1, -1}, 3));
    EXPECT_THROW(verify_vertex_zero_sum(fam::cycle(4), {1, 1}, 2), precondition_error);
}

TEST(VertexZeroSum, SolveExamples)
{
    auto c4 = solve_vertex_zero_sum(fam::cycle(4), 2);
    ASSERT_TRUE(c4);
    EXPECT_EQ((*c4)[0], -(*c4)[2]);
    EXPECT_EQ((*c4)[1], -(*c4)[3]);
    EXPECT_FALSE(solve_vertex_zero_sum(fam::cycle(3), 3));
    EXPECT_FALSE(solve_vertex_zero_sum(fam::cycle(6), 3));
    EXPECT_FALSE(oracle::vertex_zero_sum_flow(fam::cycle(6), 3));
}

TEST(VertexZeroSum, AgreesWithLabelEnumeration)
{
    std::mt19937_64 rng(41);
    int yes = 0, no = 0;
    for (int trial = 0; trial < 300; ++trial) {
        auto g = oracle::random_graph(3 + trial % 6, 0.5, rng);
        for (int k = 2; k <= 3; ++k) {
            auto lab = solve_vertex_zero_sum(g, k);
            ASSERT_EQ(lab.has_value(), oracle::vertex_zero_sum_flow(g, k)) << trial;
            if (lab) {
                ++yes;
                EXPECT_TRUE(verify_vertex_zero_sum(g, *lab, k));
            } else {
                ++no;
            }
        }
    }
    EXPECT_GT(yes, 10);
    EXPECT_GT(no, 10);
}

TEST(Bridge, Examples)
{
    auto k33 = fam::complete_bipartite(3, 3);
    auto lab = decomposition_to_vertex_flow(k33, Decomposition({0, 3}));
    EXPECT_EQ(lab, (VertexLabeling{2, -1, -1, 2, -1, -1}));
    EXPECT_EQ(vertex_flow_to_decomposition(k33, lab), Decomposition({0, 3}));
    EXPECT_THROW(decomposition_to_vertex_flow(fam::complete(4), Decomposition({0})), precondition_error);
    EXPECT_THROW(vertex_flow_to_decomposition(fam::cycle(4), {1, 1, -1, -1}), precondition_error);

    // counting A-neighbors gives 3|A| = n on a cubic graph, so the 3-cube has none
    auto cube = fam::hypercube(3);
    EXPECT_FALSE(solve_one_in_degree(cube));
    EXPECT_FALSE(oracle::one_in_degree(cube));
    EXPECT_FALSE(solve_vertex_zero_sum(cube, 3));

    auto d = solve_one_in_degree(k33);
    ASSERT_TRUE(d);
    EXPECT_TRUE(verify_vertex_zero_sum(k33, decomposition_to_vertex_flow(k33, *d), 3));
}

TEST(Bridge, RoundTripAndEquivalenceOnCubicGraphs)
{
    // all cubic graphs on up to 12 vertices, bipartite or not
    int graphs = 0, with_decomp = 0;
    for (int n = 4; n <= 12; n += 2) {
        EnumerateOptions opt;
        opt.n = n;
        opt.connected = true;
        opt.min_degree = 3;
        opt.max_degree = 3;
        enumerate_graphs(opt, [&](const Graph& g) {
            ++graphs;
            auto d = solve_one_in_degree(g);
            auto lab = solve_vertex_zero_sum(g, 3);
            ASSERT_EQ(d.has_value(), lab.has_value());
            if (!d)
                return;
            ++with_decomp;
            EXPECT_EQ(vertex_flow_to_decomposition(g, decomposition_to_vertex_flow(g, *d)), *d);
            auto back = vertex_flow_to_decomposition(g, *lab);
            EXPECT_TRUE(verify_one_in_degree(g, back));
        });
    }
    EXPECT_EQ(graphs, 1 + 2 + 5 + 19 + 85);
    EXPECT_GT(with_decomp, 0);
}
