#include <gtest/gtest.h>

#include <random>

#include "naeflow/decomposition.hpp"
#include "naeflow/families.hpp"
#include "naeflow/hypergraph.hpp"
#include "naeflow/reductions/three_partition.hpp"
#include "support.hpp"

using namespace naeflow;
namespace fam = naeflow::families;

TEST(Decomposition, VerifyExamples)
{
    auto c4 = fam::cycle(4);
    EXPECT_TRUE(verify_one_in_degree(c4, Decomposition({0, 1})));
    EXPECT_FALSE(verify_one_in_degree(c4, Decomposition({0, 2})));
    EXPECT_TRUE(verify_one_in_degree(fam::complete_bipartite(3, 3), Decomposition({0, 3})));
    EXPECT_TRUE(verify_nae(c4, Decomposition({0, 1})));
    EXPECT_FALSE(verify_nae(c4, Decomposition({0, 2})));
    Graph with_isolated(3, {{0, 1}});
    for (std::uint64_t mask = 0; mask < 8; ++mask) {
        std::vector<char> in{static_cast<char>(mask & 1), static_cast<char>(mask >> 1 & 1),
                             static_cast<char>(mask >> 2 & 1)};
        EXPECT_FALSE(verify_nae(with_isolated, Decomposition::from_indicator(in)));
    }
    EXPECT_THROW(verify_one_in_degree(c4, Decomposition({7})), precondition_error);
}

TEST(Decomposition, SolveExamples)
{
    auto c4 = fam::cycle(4);
    auto d = solve_one_in_degree(c4);
    ASSERT_TRUE(d);
    EXPECT_TRUE(verify_one_in_degree(c4, *d));
    EXPECT_FALSE(solve_one_in_degree(fam::cycle(6)));
    ASSERT_TRUE(solve_nae(c4));
    EXPECT_FALSE(solve_nae(fam::cycle(6)));
    auto c8 = solve_nae(fam::cycle(8));
    ASSERT_TRUE(c8);
    EXPECT_TRUE(verify_nae(fam::cycle(8), *c8));
}

TEST(Decomposition, CyclesFollowTheModFourRule)
{
    for (int n = 3; n <= 16; ++n) {
        auto g = fam::cycle(n);
        auto d1 = solve_one_in_degree(g);
        auto dn = solve_nae(g);
        EXPECT_EQ(d1.has_value(), n % 4 == 0) << n;
        EXPECT_EQ(dn.has_value(), n % 4 == 0) << n;
        EXPECT_EQ(oracle::one_in_degree(g).has_value(), n % 4 == 0) << n;
        if (d1) {
            EXPECT_TRUE(verify_one_in_degree(g, *d1));
        }
        if (dn) {
            EXPECT_TRUE(verify_nae(g, *dn));
        }
    }
}

TEST(Decomposition, AgreesWithSubsetEnumeration)
{
    std::mt19937_64 rng(101);
    int yes1 = 0, yesn = 0;
    for (int trial = 0; trial < 600; ++trial) {
        const int n = 2 + trial % 11;
        auto g = oracle::random_graph(n, 0.2 + 0.1 * (trial % 5), rng);
        auto d1 = solve_one_in_degree(g);
        ASSERT_EQ(d1.has_value(), oracle::one_in_degree(g).has_value()) << trial;
        if (d1) {
            ++yes1;
            EXPECT_TRUE(verify_one_in_degree(g, *d1));
        }
        auto dn = solve_nae(g);
        ASSERT_EQ(dn.has_value(), oracle::nae(g).has_value()) << trial;
        if (dn) {
            ++yesn;
            EXPECT_TRUE(verify_nae(g, *dn));
        }
    }
    // both answers must actually occur for the comparison to mean anything
    EXPECT_GT(yes1, 10);
    EXPECT_GT(yesn, 10);
}

TEST(Decomposition, VerifiersAgreeWithCounting)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + trial % 9;
        auto g = oracle::random_graph(n, 0.4, rng);
        const std::uint64_t mask = rng() & ((std::uint64_t{1} << n) - 1);
        std::vector<char> in(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            in[static_cast<std::size_t>(v)] = static_cast<char>(mask >> v & 1);
        auto d = Decomposition::from_indicator(in);
        auto c = oracle::a_counts(g, mask);
        bool one = true, nae = true;
        for (int v = 0; v < n; ++v) {
            one = one && c[static_cast<std::size_t>(v)] == 1;
            nae = nae && c[static_cast<std::size_t>(v)] >= 1 && c[static_cast<std::size_t>(v)] < g.degree(v);
        }
        EXPECT_EQ(verify_one_in_degree(g, d), one);
        EXPECT_EQ(verify_nae(g, d), nae);
        EXPECT_EQ(d.indicator(n), in);
    }
}

TEST(Decomposition, NaeIsTwoColoringOfNeighborhoods)
{
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + trial % 9;
        auto g = oracle::random_graph(n, 0.45, rng);
        bool isolated = false;
        for (int v = 0; v < n; ++v)
            isolated = isolated || g.degree(v) == 0;
        if (isolated)
            continue;
        auto h = neighborhood_hypergraph(g);
        auto col = two_color_hypergraph(h);
        auto d = solve_nae(g);
        ASSERT_EQ(col.has_value(), d.has_value()) << trial;
        if (col) {
            EXPECT_TRUE(verify_two_coloring(h, *col));
            std::vector<char> in;
            for (int c : *col)
                in.push_back(c == 1);
            EXPECT_TRUE(verify_nae(g, Decomposition::from_indicator(in)));
        }
    }
}

TEST(Decomposition, RegularBipartiteGraphsHaveNaeDecompositions)
{
    // neighborhood hypergraphs here are r-uniform and r-regular with r >= 4
    std::mt19937_64 rng(1234);
    for (int r = 4; r <= 5; ++r)
        for (int m = r; m <= r + 6; ++m) {
            auto g = fam::random_regular_bipartite(m, r, rng);
            auto d = solve_nae(g);
            ASSERT_TRUE(d) << r << " " << m;
            EXPECT_TRUE(verify_nae(g, *d));
        }
}

TEST(Hypergraph, NeighborhoodExamples)
{
    auto c4 = neighborhood_hypergraph(fam::cycle(4));
    EXPECT_EQ(c4.edges.size(), 4u);
    for (const auto& e : c4.edges)
        EXPECT_EQ(e.size(), 2u);
    auto k4 = neighborhood_hypergraph(fam::complete(4));
    for (const auto& e : k4.edges)
        EXPECT_EQ(e.size(), 3u);
    auto k33 = neighborhood_hypergraph(fam::complete_bipartite(3, 3));
    ASSERT_EQ(k33.edges.size(), 6u);
    std::vector<int> deg(6, 0);
    for (const auto& e : k33.edges) {
        EXPECT_EQ(e.size(), 3u);
        for (int v : e)
            ++deg[static_cast<std::size_t>(v)];
    }
    EXPECT_EQ(deg, std::vector<int>(6, 3));
}

TEST(Hypergraph, HeawoodNeighborhoodsAreFanoPlanes)
{
    EXPECT_FALSE(solve_nae(fam::heawood()));
    EXPECT_FALSE(oracle::nae(fam::heawood()));
}

TEST(Hypergraph, FanoPlane)
{
    auto fano = fano_plane();
    EXPECT_FALSE(two_color_hypergraph(fano));
    for (std::size_t drop = 0; drop < fano.edges.size(); ++drop) {
        auto es = fano.edges;
        es.erase(es.begin() + static_cast<std::ptrdiff_t>(drop));
        Hypergraph h(7, es);
        auto col = two_color_hypergraph(h);
        ASSERT_TRUE(col) << drop;
        EXPECT_TRUE(verify_two_coloring(h, *col));
    }
    // every pair of points lies on exactly one line
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b) {
            int lines = 0;
            for (const auto& e : fano.edges)
                lines += std::count(e.begin(), e.end(), a) && std::count(e.begin(), e.end(), b);
            EXPECT_EQ(lines, 1);
        }
    auto single = two_color_hypergraph(Hypergraph(2, {{0, 1}}));
    EXPECT_EQ(single, (std::vector<int>{1, 2}));
}

TEST(Weighted, Examples)
{
    VertexWeightedGraph ones(Graph(2, {{0, 1}}), {1, 1});
    EXPECT_EQ(solve_one_in_degree_weighted(ones), Decomposition({0, 1}));
    VertexWeightedGraph lopsided(Graph(2, {{0, 1}}), {2, 1});
    EXPECT_FALSE(solve_one_in_degree_weighted(lopsided));
    EXPECT_THROW(VertexWeightedGraph(Graph(2, {{0, 1}}), {1}), precondition_error);

    auto gt = gen_three_partition_graph({1, 1, 1}, 3);
    ASSERT_EQ(gt.instance.graph.order(), 20);
    auto d = solve_one_in_degree_weighted(gt.instance.weighted());
    ASSERT_TRUE(d);
    EXPECT_TRUE(verify_one_in_degree_weighted(gt.instance.weighted(), *d));
    EXPECT_TRUE(oracle::one_in_degree_weighted(gt.instance.graph, gt.instance.weights.value()));
}

TEST(Weighted, AgreesWithSubsetEnumeration)
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> wdist(-1, 2);
    int yes = 0;
    for (int trial = 0; trial < 1500; ++trial) {
        const int n = 2 + trial % 10;
        auto g = oracle::random_graph(n, 0.35, rng);
        std::vector<std::int64_t> w(static_cast<std::size_t>(n));
        for (auto& x : w)
            x = wdist(rng);
        VertexWeightedGraph wg(g, w);
        auto d = solve_one_in_degree_weighted(wg);
        ASSERT_EQ(d.has_value(), oracle::one_in_degree_weighted(g, w)) << trial;
        if (d) {
            ++yes;
            EXPECT_TRUE(verify_one_in_degree_weighted(wg, *d));
        }
    }
    EXPECT_GT(yes, 10);
}

TEST(Weighted, UnitWeightsMatchTheUnweightedProblem)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = oracle::random_graph(3 + trial % 9, 0.3, rng);
        VertexWeightedGraph wg(g, std::vector<std::int64_t>(static_cast<std::size_t>(g.order()), 1));
        EXPECT_EQ(solve_one_in_degree_weighted(wg).has_value(), solve_one_in_degree(g).has_value());
    }
}

TEST(Search, NodeLimitIsReported)
{
    SearchControl ctl;
    ctl.max_nodes = 1;
    EXPECT_THROW(solve_nae(fam::heawood(), ctl), search_limit_exceeded);
    SolverStats stats;
    SearchControl counting;
    counting.stats = &stats;
    solve_one_in_degree(fam::hypercube(4), counting);
    EXPECT_GT(stats.nodes, 0u);
}
