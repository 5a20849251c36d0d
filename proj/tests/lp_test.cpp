#include <gtest/gtest.h>

#include <random>

#include "naeflow/enumerate.hpp"
#include "naeflow/families.hpp"
#include "naeflow/tu_decide.hpp"
#include "support.hpp"

using namespace naeflow;
namespace fam = naeflow::families;

namespace {

// Fourier-Motzkin elimination; rows are coef.x >= rhs, bounds folded in as rows.
bool fm_feasible(const LinearSystem& sys)
{
    using Row = std::pair<std::vector<Rational>, Rational>;
    std::vector<Row> rows;
    for (const auto& r : sys.rows)
        rows.emplace_back(r.coef, r.rhs);
    for (int j = 0; j < sys.num_vars; ++j) {
        std::vector<Rational> e(static_cast<std::size_t>(sys.num_vars), 0);
        e[static_cast<std::size_t>(j)] = 1;
        rows.emplace_back(e, sys.lower[static_cast<std::size_t>(j)]);
        e[static_cast<std::size_t>(j)] = -1;
        rows.emplace_back(e, -sys.upper[static_cast<std::size_t>(j)]);
    }
    for (int j = 0; j < sys.num_vars; ++j) {
        std::vector<Row> pos, neg, rest;
        for (auto& r : rows) {
            const Rational& c = r.first[static_cast<std::size_t>(j)];
            (c > 0 ? pos : c < 0 ? neg : rest).push_back(r);
        }
        for (const auto& p : pos)
            for (const auto& q : neg) {
                Rational a = p.first[static_cast<std::size_t>(j)];
                Rational b = -q.first[static_cast<std::size_t>(j)];
                Row r{std::vector<Rational>(static_cast<std::size_t>(sys.num_vars)), b * p.second + a * q.second};
                for (std::size_t i = 0; i < r.first.size(); ++i)
                    r.first[i] = b * p.first[i] + a * q.first[i];
                rest.push_back(std::move(r));
            }
        rows = std::move(rest);
    }
    for (const auto& r : rows)
        if (r.second > 0)
            return false;
    return true;
}

} // namespace

TEST(LinearSystem, OneInDegreeRows)
{
    auto sys = build_one_in_degree_system(fam::cycle(4));
    EXPECT_EQ(sys.rows.size(), 8u);
    EXPECT_EQ(sys.num_vars, 4);

    auto edge = build_one_in_degree_system(Graph(2, {{0, 1}}));
    auto r = feasible(edge);
    ASSERT_TRUE(r.feasible);
    EXPECT_EQ(*r.point, (std::vector<Rational>{1, 1}));

    auto isolated = build_one_in_degree_system(Graph(1));
    EXPECT_EQ(isolated.rows[0].coef, std::vector<Rational>{0});
    EXPECT_EQ(isolated.rows[0].rhs, 1);
    EXPECT_FALSE(feasible(isolated).feasible);
}

TEST(LinearSystem, NaeWindows)
{
    auto c4 = build_nae_system(fam::cycle(4));
    for (int v = 0; v < 4; ++v) {
        EXPECT_EQ(c4.rows[static_cast<std::size_t>(v)].rhs, 1);
        EXPECT_EQ(c4.rows[static_cast<std::size_t>(4 + v)].rhs, -1);
    }
    auto k4 = build_nae_system(fam::complete(4));
    for (int v = 0; v < 4; ++v)
        EXPECT_EQ(k4.rows[static_cast<std::size_t>(4 + v)].rhs, -2);
    auto p2 = build_nae_system(fam::path(2));
    EXPECT_EQ(p2.rows[2].rhs, 0);
    EXPECT_FALSE(feasible(p2).feasible);
}

TEST(LinearSystem, FeasibilityExamples)
{
    auto c4 = feasible(build_one_in_degree_system(fam::cycle(4)));
    ASSERT_TRUE(c4.feasible);
    EXPECT_TRUE(is_integral(*c4.point));

    auto c6sys = build_one_in_degree_system(fam::cycle(6));
    auto c6 = feasible(c6sys);
    ASSERT_TRUE(c6.feasible);
    EXPECT_FALSE(is_integral(*c6.point));
    EXPECT_EQ(*c6.point, std::vector<Rational>(6, Rational(1, 2)));
    EXPECT_TRUE(c6sys.satisfied_by(*c6.point));

    LinearSystem bad(1);
    bad.lower[0] = -10;
    bad.upper[0] = 10;
    bad.add_row({1}, 1);
    bad.add_row({-1}, 0);
    EXPECT_FALSE(feasible(bad).feasible);
}

TEST(LinearSystem, InputChecks)
{
    LinearSystem sys(2);
    EXPECT_THROW(sys.add_row({1}, 0), precondition_error);
    sys.lower[1] = 2;
    EXPECT_THROW(feasible(sys), precondition_error);
}

TEST(LinearSystem, TextDump)
{
    LinearSystem sys(2);
    sys.add_row({1, Rational(-1, 2)}, 3);
    auto text = to_lp_text(sys);
    EXPECT_NE(text.find("row0: 1 -1/2 >= 3"), std::string::npos);
    EXPECT_NE(text.find("bound x1: 0 <= x1 <= 1"), std::string::npos);
}

TEST(LinearSystem, AgreesWithFourierMotzkin)
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> coef(-3, 3), rhs(-4, 4), bound(-2, 2);
    int feas = 0, infeas = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + trial % 4;
        LinearSystem sys(n);
        for (int j = 0; j < n; ++j) {
            int a = bound(rng), b = bound(rng);
            sys.lower[static_cast<std::size_t>(j)] = std::min(a, b);
            sys.upper[static_cast<std::size_t>(j)] = std::max(a, b);
        }
        const int m = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < m; ++i) {
            std::vector<Rational> row;
            for (int j = 0; j < n; ++j)
                row.emplace_back(coef(rng));
            sys.add_row(row, rhs(rng));
        }
        auto res = feasible(sys);
        ASSERT_EQ(res.feasible, fm_feasible(sys)) << trial << "\n" << to_lp_text(sys);
        if (res.feasible) {
            ++feas;
            EXPECT_TRUE(sys.satisfied_by(*res.point));
        } else {
            ++infeas;
        }
    }
    EXPECT_GT(feas, 50);
    EXPECT_GT(infeas, 50);
}

TEST(PolyDecide, Examples)
{
    auto c4 = decide_one_in_degree_poly(fam::cycle(4));
    ASSERT_TRUE(c4);
    EXPECT_TRUE(verify_one_in_degree(fam::cycle(4), *c4));
    auto c8 = decide_one_in_degree_poly(fam::cycle(8));
    ASSERT_TRUE(c8);
    EXPECT_TRUE(verify_one_in_degree(fam::cycle(8), *c8));
    EXPECT_THROW(decide_one_in_degree_poly(fam::cycle(6)), precondition_error);
    EXPECT_THROW(decide_one_in_degree_poly(fam::cycle(5)), precondition_error);

    auto n4 = decide_nae_poly(fam::cycle(4));
    ASSERT_TRUE(n4);
    EXPECT_TRUE(verify_nae(fam::cycle(4), *n4));
    auto n8 = decide_nae_poly(fam::cycle(8));
    ASSERT_TRUE(n8);
    EXPECT_TRUE(verify_nae(fam::cycle(8), *n8));
    EXPECT_FALSE(decide_nae_poly(fam::path(4)));
    EXPECT_THROW(decide_nae_poly(fam::complete_bipartite(3, 3)), precondition_error);
}

TEST(PolyDecide, CapRefusesUncertifiedGraphs)
{
    EXPECT_THROW(decide_one_in_degree_poly(fam::complete_bipartite(2, 5), 2), precondition_error);
    EXPECT_NO_THROW(decide_one_in_degree_poly(fam::complete_bipartite(2, 5)));
}

TEST(PolyDecide, MatchesSubsetEnumerationOnTheTuClass)
{
    // bipartite graphs on up to 9 vertices with every cycle of length 0 mod 4
    int graphs = 0, yes1 = 0, yesn = 0;
    for (int n = 2; n <= 9; ++n) {
        EnumerateOptions opt;
        opt.n = n;
        opt.bipartite = true;
        enumerate_graphs(opt, [&](const Graph& g) {
            if (has_cycle_2_mod_4(g).has_bad_cycle)
                return;
            ++graphs;
            auto one = decide_one_in_degree_poly_full(g);
            ASSERT_EQ(one.decomposition.has_value(), oracle::one_in_degree(g).has_value());
            if (one.decomposition) {
                ++yes1;
                EXPECT_TRUE(verify_one_in_degree(g, *one.decomposition));
                EXPECT_TRUE(is_integral(*one.lp.point));
            }
            auto nae = decide_nae_poly_full(g);
            ASSERT_EQ(nae.decomposition.has_value(), oracle::nae(g).has_value());
            if (nae.decomposition) {
                ++yesn;
                EXPECT_TRUE(verify_nae(g, *nae.decomposition));
            }
        });
    }
    EXPECT_GT(graphs, 100);
    EXPECT_GT(yes1, 10);
    EXPECT_GT(yesn, 5);
}

TEST(PolyDecide, PrunedEnumerationOfTheTuClassIsComplete)
{
    for (int n = 1; n <= 9; ++n) {
        EnumerateOptions opt;
        opt.n = n;
        opt.bipartite = true;
        std::uint64_t filtered = 0;
        enumerate_graphs(opt, [&](const Graph& g) { filtered += !oracle::cycle_2_mod_4(g); });
        opt.prune = [](const Graph& g) { return has_cycle_2_mod_4_through(g, g.order() - 1).has_bad_cycle; };
        std::uint64_t pruned = 0;
        enumerate_graphs(opt, [&](const Graph& g) {
            ++pruned;
            EXPECT_FALSE(oracle::cycle_2_mod_4(g));
        });
        EXPECT_EQ(pruned, filtered) << n;
    }
}
