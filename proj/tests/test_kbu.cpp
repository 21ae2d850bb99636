#include <gtest/gtest.h>

#include <vector>

#include "kops/kbu.hpp"
#include "kops/models.hpp"

using namespace kops;

namespace {

// Values are checked in the split model, whose lambda-operations come from
// line decompositions only.
const SplitModel model(2);

IntPoly x(int i) { return IntPoly::variable(var(Family::x, i)); }

std::vector<IntPoly> series(const IntPoly& a, int n) { return model.lambda_series(a, n); }

IntPoly at(const IntPoly& p, const std::vector<std::vector<IntPoly>>& slots)
{
    return substitute(p, [&](Var v) { return slots.at(v.slot).at(v.index); });
}

IntPoly at(const KBUElem& e, const IntPoly& a) { return at(e.poly(), {series(a, e.trunc())}); }

const int N = 6;

std::vector<KBUElem> corpus()
{
    return {KBUElem::one(N),
            KBUElem::generator(1, N),
            KBUElem::generator(2, N),
            KBUElem::generator(3, N),
            KBUElem(lam(1) * lam(1) - lam(2) * Int(3), N),
            KBUElem(lam(2) * lam(1) + Int(2), N),
            KBUElem(lam(4) - lam(1) * lam(3), N)};
}

// Few enough lines that lambda^m vanishes above the truncation level.
std::vector<IntPoly> elements() { return {x(1) + x(2), IntPoly(1) + x(1), x(1) * x(2) + x(2), IntPoly(2) + x(1)}; }

} // namespace

TEST(KBUElem, RejectsVariablesAboveTheLevel)
{
    EXPECT_THROW(KBUElem(lam(4), 3), InvalidArgument);
    EXPECT_THROW(KBUElem(IntPoly::variable(var(Family::x, 1)), 3), InvalidArgument);
    EXPECT_THROW(KBUElem::one(0), InvalidArgument);
}

TEST(KBUElem, GeneratorAboveLevelIsZero) { EXPECT_TRUE(KBUElem::generator(5, 4).is_zero()); }

TEST(KBUElem, RetruncateDropsHighGenerators)
{
    KBUElem e(lam(1) * lam(3) + lam(2), 4);
    EXPECT_EQ(e.retruncate(2).poly(), lam(2));
    EXPECT_THROW(e.retruncate(5), TruncationMismatch);
}

TEST(Coaddition, SecondGeneratorText) { EXPECT_EQ(to_text(coadd(KBUElem::generator(2, N))), "L1⊗L1 + L2⊗1 + 1⊗L2"); }

TEST(Coaddition, EvaluatesOnSums)
{
    for (const auto& e : corpus())
        for (const auto& a : elements())
            for (const auto& b : elements())
                EXPECT_EQ(at(coadd(e).poly(), {series(a, N), series(b, N)}), at(e, a + b)) << to_text(e.poly());
}

TEST(Comultiplication, EvaluatesOnProducts)
{
    for (const auto& e : corpus())
        for (const auto& a : elements())
            for (const auto& b : elements())
                EXPECT_EQ(at(comult(e).poly(), {series(a, N), series(b, N)}), at(e, a * b)) << to_text(e.poly());
}

TEST(Cozero, IsValueAtZero)
{
    for (const auto& e : corpus()) EXPECT_EQ(IntPoly(cozero(e)), at(e, IntPoly{}));
}

TEST(Antipode, IsValueAtNegative)
{
    for (const auto& e : corpus())
        for (const auto& a : elements()) EXPECT_EQ(at(antipode(e), a), at(e, -a)) << to_text(e.poly());
}

TEST(Colinear, IsPrecompositionWithScalar)
{
    for (int kappa = -2; kappa <= 2; ++kappa)
        for (const auto& e : corpus())
            for (const auto& a : elements())
                EXPECT_EQ(at(colinear(kappa, e), a), at(e, a * Int(kappa))) << kappa << " " << to_text(e.poly());
}

TEST(Colinear, MinusOneIsAntipode)
{
    for (const auto& e : corpus()) EXPECT_EQ(colinear(-1, e), antipode(e));
}

TEST(LambdaSeries, MatchesModel)
{
    for (const auto& e : corpus()) {
        if (cozero(e) != 0) continue;
        auto s = lambda_series(e, 3);
        for (const auto& a : elements())
            for (int k = 0; k <= 3; ++k) EXPECT_EQ(at(s[k], {series(a, N)}), model.lambda(k, at(e, a))) << k << " " << to_text(e.poly());
    }
}

TEST(ComposeKBU, IsCompositionOfValues)
{
    const KBUElem y(lam(2) - lam(1), N);
    const KBUElem z(lam(1) * lam(1) - lam(2) * Int(2), N);
    for (const auto& xop : corpus())
        for (const auto& inner : {y, z})
            for (const auto& a : {x(1) + x(2), IntPoly(1) + x(1)})
                EXPECT_EQ(at(compose_kbu(xop, inner), a), at(xop, at(inner, a))) << to_text(xop.poly()) << " ∘ " << to_text(inner.poly());
}

TEST(ComposeKBU, RequiresReducedRightOperand)
{
    EXPECT_THROW(compose_kbu(KBUElem::generator(1, N), KBUElem::one(N)), NotReduced);
    EXPECT_THROW(compose_kbu(KBUElem::generator(1, N), KBUElem::generator(1, 3)), TruncationMismatch);
}
