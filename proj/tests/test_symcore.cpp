#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "kops/symcore.hpp"
#include "oracle.hpp"

using namespace kops;

namespace {

std::string read_golden(const std::string& name)
{
    std::ifstream in(std::string(GOLDEN_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string s = ss.str();
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

IntPoly x(int i) { return IntPoly::variable(var(Family::x, i)); }

} // namespace

TEST(UniversalPk, FirstIsProductOfGenerators) { EXPECT_EQ(to_text(universal_pk(1)), "x1*y1"); }

TEST(UniversalPk, MatchesFittedSplittingOracle)
{
    for (int k = 1; k <= 4; ++k) EXPECT_EQ(universal_pk(k), oracle::fit_pk(k)) << "k = " << k;
}

TEST(UniversalPk, FiveAgreesWithLineValues)
{
    // lambda^5 of a product of two 5-line sums, at random integer lines.
    std::mt19937_64 rng(5);
    const IntPoly& p5 = universal_pk(5);
    for (int t = 0; t < 20; ++t) {
        auto a = oracle::random_values(rng, 5, -3, 3);
        auto b = oracle::random_values(rng, 5, -3, 3);
        auto ea = oracle::elementary(a, 5);
        auto eb = oracle::elementary(b, 5);
        std::vector<Int> prods;
        for (const auto& u : a)
            for (const auto& v : b) prods.push_back(u * v);
        Int got = oracle::evaluate_numeric(p5, [&](Var v) { return v.family == Family::x ? ea[v.index] : eb[v.index]; });
        EXPECT_EQ(got, oracle::elementary(prods, 5)[5]);
    }
}

TEST(UniversalPk, IsSymmetricInItsTwoAlphabets)
{
    for (int k = 1; k <= 5; ++k) {
        IntPoly swapped = substitute(universal_pk(k), [](Var v) {
            v.family = v.family == Family::x ? Family::y : Family::x;
            return IntPoly::variable(v);
        });
        EXPECT_EQ(swapped, universal_pk(k));
    }
}

TEST(UniversalPij, MatchesFittedSplittingOracle)
{
    for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 3}, {3, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {4, 2}, {3, 3}})
        EXPECT_EQ(universal_pij(i, j), oracle::fit_pij(i, j)) << i << "," << j;
}

TEST(UniversalPij, OneAndKArePlainGenerators)
{
    EXPECT_EQ(to_text(universal_pij(1, 5)), "L5");
    EXPECT_EQ(to_text(universal_pij(5, 1)), "L5");
    EXPECT_EQ(to_text(universal_pij(2, 2)), "L1*L3 - L4");
}

TEST(UniversalPij, TruncationDropsHighGenerators)
{
    const IntPoly& full = universal_pij(3, 3);
    IntPoly expected = full.filter([](const Monomial& m) { return m.degree_if([](Var v) { return v.index > 5; }) == 0; });
    EXPECT_EQ(universal_pij_truncated(3, 3, 5), expected);
}

TEST(LeftLinearise, KeepsTermsOfXDegreeOne)
{
    EXPECT_EQ(to_text(left_linearise(universal_pk(2))), "x2*y1^2 - 2*x2*y2");
    for (int k = 1; k <= 4; ++k) EXPECT_EQ(left_linearise(universal_pk(k)), oracle::x_linear(oracle::fit_pk(k)));
}

TEST(GoldenFiles, SecondProductPolynomial)
{
    EXPECT_EQ(to_text(oracle::fit_pk(2)), read_golden("p2.txt"));
    EXPECT_EQ(to_text(universal_pk(2)), read_golden("p2.txt"));
}

TEST(GoldenFiles, SecondLinearisedPolynomial)
{
    EXPECT_EQ(to_text(oracle::x_linear(oracle::fit_pk(2))), read_golden("plin2.txt"));
    EXPECT_EQ(to_text(left_linearise(universal_pk(2))), read_golden("plin2.txt"));
}

TEST(ElementaryExpand, PowerSumOfTwo) { EXPECT_EQ(to_text(elementary_expand(x(1) * x(1) + x(2) * x(2), 2)), "e1^2 - 2*e2"); }

TEST(ElementaryExpand, RoundTripsAtRandomPoints)
{
    // p(x) = q(e(x)) at integer points.
    IntPoly p = pow(x(1), 3) + pow(x(2), 3) + pow(x(3), 3) + x(1) * x(2) * x(3) * Int(4);
    IntPoly q = elementary_expand(p, 3);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        auto v = oracle::random_values(rng, 3);
        auto e = oracle::elementary(v, 3);
        Int lhs = oracle::evaluate_numeric(p, [&](Var w) { return v[w.index - 1]; });
        Int rhs = oracle::evaluate_numeric(q, [&](Var w) { return e[w.index]; });
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(ElementaryExpand, RejectsNonSymmetricInput)
{
    EXPECT_THROW(elementary_expand(x(1) * x(1) + x(2), 2), NonSymmetricInput);
}

TEST(NewtonPsi, MatchesPowerSums)
{
    std::mt19937_64 rng(17);
    for (int k = 1; k <= 6; ++k)
        for (int t = 0; t < 10; ++t) {
            auto v = oracle::random_values(rng, 6);
            auto e = oracle::elementary(v, 6);
            Int power_sum = 0;
            for (const auto& a : v) power_sum += boost::multiprecision::pow(a, k);
            EXPECT_EQ(oracle::evaluate_numeric(newton_psi(k), [&](Var w) { return e[w.index]; }), power_sum) << "k = " << k;
        }
}

TEST(NewtonPsi, ThirdInLambdaVariables) { EXPECT_EQ(to_text(newton_psi(3)), "-3*L1*L2 + L1^3 + 3*L3"); }
