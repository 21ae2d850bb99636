#include <gtest/gtest.h>

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "kops/setzz.hpp"

using namespace kops;

TEST(Window, RejectsNonPositiveRadius)
{
    EXPECT_THROW(Window(0), InvalidArgument);
    EXPECT_TRUE(Window(3).contains(-3));
    EXPECT_FALSE(Window(3).contains(4));
}

TEST(FnZZ, EvaluatesEachForm)
{
    const FnZZ f = FnZZ::sum({FnZZ::chi(2), FnZZ::product({FnZZ::constant(3), FnZZ::identity()})});
    EXPECT_EQ(f(2), 7);
    EXPECT_EQ(f(-1), -3);
    EXPECT_EQ(FnZZ::composite(FnZZ::chi(4), FnZZ::product({FnZZ::identity(), FnZZ::identity()}))(-2), 1);
    EXPECT_EQ(f.to_string(), "sum(chi(2),prod(const(3),id))");
}

TEST(FnZZ, ComposeSimplifiesIdentityAndConstants)
{
    EXPECT_EQ(fn_compose(FnZZ::identity(), FnZZ::chi(1)).to_string(), "chi(1)");
    EXPECT_EQ(fn_compose(FnZZ::chi(1), FnZZ::identity()).to_string(), "chi(1)");
    EXPECT_EQ(fn_compose(FnZZ::chi(5), FnZZ::constant(5)).to_string(), "const(1)");
}

TEST(FnZZ, ComposeIsPointwise)
{
    const FnZZ f = FnZZ::sum({FnZZ::chi(1), FnZZ::identity()});
    const FnZZ g = FnZZ::product({FnZZ::constant(-2), FnZZ::chi(3)});
    const FnZZ fg = fn_compose(f, g);
    for (int n = -10; n <= 10; ++n) EXPECT_EQ(fg(n), f(g(n))) << n;
}

TEST(IndicatorTable, NormalFormAgreesOnWindow)
{
    const Window w(5);
    const FnZZ f = FnZZ::sum({FnZZ::identity(), FnZZ::constant(2), FnZZ::chi(-4)});
    const FnZZ g = fn_window_normalise(f, w);
    EXPECT_TRUE(equal_on_window(f, g, w));
    for (int n = -5; n <= 5; ++n) EXPECT_EQ(f(n), g(n));
    EXPECT_EQ(indicator_table(f, w).size(), 10u);
    EXPECT_EQ(indicator_table(f, w).count(-2), 0u);
}

TEST(IndicatorTable, DistinguishesOnlyInsideWindow)
{
    EXPECT_TRUE(equal_on_window(FnZZ::chi(7), FnZZ::constant(0), Window(5)));
    EXPECT_FALSE(equal_on_window(FnZZ::chi(7), FnZZ::constant(0), Window(7)));
}

TEST(FnCoproducts, AreSumAndProductOnTheSquare)
{
    const Window w(4);
    const FnZZ f = FnZZ::sum({FnZZ::chi(2), FnZZ::product({FnZZ::constant(3), FnZZ::chi(0)})});
    const FnTensor add = fn_coadd(f, w), mul = fn_comult(f, w);
    for (int a = -4; a <= 4; ++a)
        for (int b = -4; b <= 4; ++b) {
            EXPECT_EQ(add(a, b), f(a + b));
            EXPECT_EQ(mul(a, b), f(a * b));
        }
    EXPECT_THROW(add(5, 0), WindowExhausted);
}

TEST(FnCoproducts, CozeroAndCounit)
{
    const FnZZ f = FnZZ::sum({FnZZ::chi(0), FnZZ::product({FnZZ::constant(5), FnZZ::chi(1)})});
    EXPECT_EQ(fn_cozero(f), 1);
    EXPECT_EQ(fn_counit(f), 5);
}

namespace {

// Z/6 = Z/2 x Z/3: the idempotent 3 picks the first factor, 4 the second. A
// family is a pair of integers, one per factor, and the operations act on
// each factor separately.
using Z6 = ZMod<6>;
using Fam = COIFamily<Z6>;

std::pair<long, long> points(const Fam& f)
{
    std::pair<long, long> p{0, 0};
    for (const auto& [d, e] : f.components()) {
        if (e % 2 == 1) p.first = d;
        if (e % 3 == 1) p.second = d;
    }
    return p;
}

Fam from_points(long a, long b)
{
    if (a == b) return Fam::delta(a);
    return Fam({{a, 3}, {b, 4}});
}

} // namespace

TEST(COIFamily, RejectsInvalidFamilies)
{
    EXPECT_THROW(Fam({{1, 2}, {2, 5}}), InvalidFamily);
    EXPECT_THROW(Fam({{1, 3}, {2, 3}}), InvalidFamily);
    EXPECT_THROW(Fam(std::map<std::int64_t, int>{{1, 3}}), InvalidFamily);
    EXPECT_THROW(COIFamily<IntegerRing>({{1, 2}, {2, -1}}), InvalidFamily);
}

TEST(COIFamily, ZModSixMatchesPointwiseOracle)
{
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<long> d(-4, 4);
    for (int t = 0; t < 60; ++t) {
        const long a1 = d(rng), a2 = d(rng), b1 = d(rng), b2 = d(rng);
        const Fam a = from_points(a1, a2), b = from_points(b1, b2);
        EXPECT_EQ(points(coi_add(a, b)), std::make_pair(a1 + b1, a2 + b2));
        EXPECT_EQ(points(coi_mul(a, b)), std::make_pair(a1 * b1, a2 * b2));
        EXPECT_EQ(points(coi_neg(a)), std::make_pair(-a1, -a2));
        EXPECT_EQ(coi_add(a, coi_neg(a)), Fam::zero());
        EXPECT_EQ(coi_mul(a, Fam::one()), a);
    }
}

TEST(COIFamily, OverIntegersCollapsesToDeltas)
{
    using ZF = COIFamily<IntegerRing>;
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b) {
            EXPECT_EQ(coi_add(ZF::delta(a), ZF::delta(b)), ZF::delta(a + b));
            EXPECT_EQ(coi_mul(ZF::delta(a), ZF::delta(b)), ZF::delta(a * b));
        }
}
