#include <gtest/gtest.h>

#include <random>

#include "naeflow/edge_coloring.hpp"
#include "naeflow/enumerate.hpp"
#include "naeflow/families.hpp"
#include "naeflow/matching.hpp"
#include "support.hpp"

using namespace naeflow;
namespace fam = naeflow::families;

namespace {

bool is_odd_cycle(const Graph& g) { return degree_profile(g).regular == 2 && g.size() % 2 == 1; }

// every vertex sees an interior pass of the tour whose two edges are original
void check_tour_passes(const Graph& g, const EulerColoringTrace& tr)
{
    ASSERT_GE(tr.start, 0);
    EXPECT_GE(g.degree(tr.start), 4);
    ASSERT_EQ(tr.tour.size(), tr.tour_vertices.size());
    std::vector<char> good(static_cast<std::size_t>(g.order()), 0);
    for (std::size_t i = 0; i + 1 < tr.tour.size(); ++i)
        if (tr.tour[i] >= 0 && tr.tour[i + 1] >= 0)
            good[static_cast<std::size_t>(tr.tour_vertices[i])] = 1;
    for (int v = 0; v < g.order(); ++v)
        EXPECT_TRUE(good[static_cast<std::size_t>(v)]) << "vertex " << v;
    EXPECT_EQ(tr.tour_vertices.back(), tr.start);
}

} // namespace

TEST(EdgeColoring, VerifyExamples)
{
    auto c4 = fam::cycle(4);
    using enum EdgeColor;
    // canonical edges 01 03 12 23; around the cycle 01 12 23 30
    EXPECT_TRUE(verify_nae_edge(c4, {red, blue, blue, red}));
    EXPECT_FALSE(verify_nae_edge(c4, {red, red, red, red}));
    auto star = fam::star(3);
    for (int mask = 0; mask < 8; ++mask) {
        TwoEdgeColoring c;
        for (int i = 0; i < 3; ++i)
            c.push_back(mask >> i & 1 ? red : blue);
        EXPECT_FALSE(verify_nae_edge(star, c));
    }
    EXPECT_THROW(verify_nae_edge(c4, {red}), precondition_error);
}

TEST(EdgeColoring, ConstructiveExamples)
{
    EXPECT_FALSE(nae_edge_coloring(fam::cycle(5)));
    auto c4 = nae_edge_coloring(fam::cycle(4));
    ASSERT_TRUE(c4);
    EXPECT_TRUE(verify_nae_edge(fam::cycle(4), *c4));
    auto k4 = nae_edge_coloring(fam::complete(4));
    ASSERT_TRUE(k4);
    EXPECT_TRUE(verify_nae_edge(fam::complete(4), *k4));
    EXPECT_TRUE(oracle::nae_edge_coloring(fam::complete(4)));

    EXPECT_THROW(nae_edge_coloring(fam::star(3)), precondition_error);
    EXPECT_THROW(nae_edge_coloring(fam::disjoint_union(fam::cycle(4), fam::cycle(4))), precondition_error);
}

TEST(EdgeColoring, BruteForceExamples)
{
    EXPECT_FALSE(brute_force_nae_edge(fam::cycle(5)));
    auto c6 = brute_force_nae_edge(fam::cycle(6));
    ASSERT_TRUE(c6);
    EXPECT_TRUE(verify_nae_edge(fam::cycle(6), *c6));
    auto theta = fam::theta({1, 2, 2});
    EXPECT_EQ(theta.order(), 4);
    auto tc = brute_force_nae_edge(theta);
    ASSERT_TRUE(tc);
    EXPECT_TRUE(verify_nae_edge(theta, *tc));
    EXPECT_TRUE(oracle::nae_edge_coloring(theta));
    auto built = nae_edge_coloring(theta);
    ASSERT_TRUE(built);
    EXPECT_TRUE(verify_nae_edge(theta, *built));
    EXPECT_THROW(brute_force_nae_edge(fam::complete(8), 20), precondition_error);
}

TEST(EdgeColoring, EulerTourCasePassesEveryVertex)
{
    for (const auto& g : {fam::complete(5), fam::complete(6), fam::complete_bipartite(4, 5),
                          Graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}})}) {
        EulerColoringTrace tr;
        auto c = nae_edge_coloring(g, &tr);
        ASSERT_TRUE(c);
        check_tour_passes(g, tr);
    }
}

TEST(EdgeColoring, PendantCyclesAtTheFirstCubicVertex)
{
    // vertex 0 has degree 3 with a pendant odd cycle 0-1-2-0 and an edge to a K4 minus an edge
    Graph g(7, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 6}, {6, 3}});
    ASSERT_EQ(degree_profile(g).max_degree, 4);
    Graph cubic(8, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {3, 5}, {4, 6}, {5, 6}, {4, 7}, {5, 7}, {6, 7}});
    ASSERT_EQ(degree_profile(cubic).max_degree, 3);
    for (const auto& h : {g, cubic}) {
        auto c = nae_edge_coloring(h);
        ASSERT_TRUE(c);
        EXPECT_TRUE(verify_nae_edge(h, *c));
    }
}

TEST(EdgeColoring, ExhaustiveSmallGraphs)
{
    // every connected graph with minimum degree 2 and at most 16 edges
    std::uint64_t graphs = 0;
    for (int n = 3; n <= 16; ++n) {
        EnumerateOptions opt;
        opt.n = n;
        opt.connected = true;
        opt.min_degree = 2;
        opt.max_edges = 16;
        enumerate_graphs(opt, [&](const Graph& g) {
            ++graphs;
            EulerColoringTrace tr;
            auto c = nae_edge_coloring(g, &tr);
            auto bf = brute_force_nae_edge(g);
            ASSERT_EQ(c.has_value(), !is_odd_cycle(g));
            ASSERT_EQ(bf.has_value(), c.has_value());
            if (c) {
                EXPECT_TRUE(verify_nae_edge(g, *c));
                if (degree_profile(g).max_degree >= 4)
                    check_tour_passes(g, tr);
            }
        });
    }
    EXPECT_GT(graphs, 10000u);
}

TEST(EdgeColoring, BruteForceAgreesWithMaskEnumeration)
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = oracle::random_graph(3 + trial % 6, 0.5, rng);
        if (g.size() > 14)
            continue;
        auto bf = brute_force_nae_edge(g);
        ASSERT_EQ(bf.has_value(), oracle::nae_edge_coloring(g)) << trial;
        if (bf) {
            EXPECT_TRUE(verify_nae_edge(g, *bf));
        }
    }
}

TEST(Matching, Examples)
{
    auto e = one_in_degree_edge(Graph(2, {{0, 1}}));
    ASSERT_TRUE(e);
    EXPECT_EQ(*e, (Matching{0}));
    EXPECT_FALSE(one_in_degree_edge(fam::path(3)));
    auto c6 = one_in_degree_edge(fam::cycle(6));
    ASSERT_TRUE(c6);
    EXPECT_EQ(c6->size(), 3u);
    EXPECT_TRUE(is_perfect_matching(fam::cycle(6), *c6));
    EXPECT_FALSE(is_matching(fam::path(3), {0, 1}));
    // two triangles joined by an edge need the blossom step
    Graph bowtie(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
    EXPECT_TRUE(one_in_degree_edge(bowtie));
    EXPECT_TRUE(one_in_degree_edge(fam::petersen()));
}

TEST(Matching, AgreesWithExhaustiveSearch)
{
    std::uint64_t graphs = 0;
    for (int n = 2; n <= 10; n += 2) {
        EnumerateOptions opt;
        opt.n = n;
        opt.max_edges = n <= 8 ? -1 : 12;
        enumerate_graphs(opt, [&](const Graph& g) {
            ++graphs;
            auto m = one_in_degree_edge(g);
            ASSERT_EQ(m.has_value(), oracle::perfect_matching(g));
            if (m) {
                EXPECT_TRUE(is_perfect_matching(g, *m));
            }
        });
    }
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 2000; ++trial) {
        auto g = oracle::random_graph(2 + trial % 9, 0.3, rng);
        auto mm = maximum_matching(g);
        ASSERT_TRUE(is_matching(g, mm));
        EXPECT_EQ(one_in_degree_edge(g).has_value(), oracle::perfect_matching(g));
    }
    EXPECT_GT(graphs, 10000u);
}
