#include <gtest/gtest.h>

#include <random>

#include "kops/models.hpp"
#include "kops/unitary.hpp"

using namespace kops;

namespace {

IntPoly x(int i) { return IntPoly::variable(var(Family::x, i)); }

std::string text(const UnModelElem& e) { return e.to_text(); }

} // namespace

TEST(Models, RegisteredModelsPassTheAxiomSuite)
{
    for (const auto& name : registered_model_names()) {
        auto bad = check_lambda_axioms(*make_model(name), 50, 5, 21);
        EXPECT_FALSE(bad.has_value()) << name << ": " << bad.value_or("");
    }
    EXPECT_EQ(register_models().size(), registered_model_names().size());
}

TEST(Models, NamesParse)
{
    EXPECT_EQ(make_model("sphere")->name(), "sphere");
    EXPECT_EQ(make_model("cp:3")->name(), "cp:3");
    EXPECT_EQ(make_model("nil:2:4")->name(), "nil:2:4");
    EXPECT_THROW(make_model("torus"), InvalidArgument);
    EXPECT_THROW(make_model("cp:x"), InvalidArgument);
    EXPECT_THROW(make_model("split"), InvalidArgument);
}

TEST(Models, IntegerLambdaIsBinomial)
{
    const IntegerModel z;
    EXPECT_EQ(z.lambda(2, IntPoly(3)), IntPoly(3));
    EXPECT_EQ(z.lambda(3, IntPoly(-2)), IntPoly(-4));
}

TEST(Models, SphereLambdaAlternates)
{
    const ProjectiveModel sphere(1);
    const IntPoly u = ProjectiveModel::u();
    for (int i = 1; i <= 5; ++i) EXPECT_EQ(sphere.lambda(i, u), u * Int(i % 2 == 1 ? 1 : -1)) << i;
}

TEST(Models, SplitLambdaIsElementary)
{
    const SplitModel split(2);
    EXPECT_EQ(split.lambda(2, x(1) + x(2)), x(1) * x(2));
    EXPECT_EQ(split.lambda(3, x(1) + x(2)), IntPoly{});
}

TEST(Models, ProjectiveLineIsOnePlusU)
{
    // xi = 1 + u is a line: lambda^k vanishes for k >= 2.
    const ProjectiveModel cp(3);
    const IntPoly xi = IntPoly(1) + ProjectiveModel::u();
    for (int k = 2; k <= 5; ++k) EXPECT_TRUE(cp.lambda(k, xi).is_zero()) << k;
}

TEST(Models, TruncationLimitIsEnforced)
{
    const ProjectiveModel cp(2);
    EXPECT_THROW(cp.lambda_series(ProjectiveModel::u(), cp.lambda_limit() + 1), ModelTruncationExceeded);
}

TEST(Models, SuspendedModelSquaresToZero)
{
    const SuspendedModel susp(std::make_shared<SplitModel>(2));
    const IntPoly s = SuspendedModel::s();
    EXPECT_TRUE(susp.mul(s, s).is_zero());
    EXPECT_FALSE(check_lambda_axioms(susp, 30, 4, 3).has_value());
}

TEST(Models, GetModelCaches) { EXPECT_EQ(get_model("cp:2").get(), get_model("cp:2").get()); }

TEST(UnitaryModel, RestrictionOnGenerators)
{
    EXPECT_EQ(text(un_restrict(UnModelElem::mu(3, 2))), "M1 + M2");
    EXPECT_EQ(text(un_restrict(UnModelElem::mu(3, 3))), "M2");
    EXPECT_EQ(un_restrict(UnModelElem::mu(3, 1)), UnModelElem::mu(2, 1));
    EXPECT_THROW(un_restrict(UnModelElem{0, Exterior(1)}), RankUnderflow);
}

TEST(UnitaryModel, RestrictionIsMultiplicative)
{
    const UnModelElem a{4, UnModelElem::mu(4, 2).ext * UnModelElem::mu(4, 4).ext};
    const UnModelElem b{4, UnModelElem::mu(4, 3).ext};
    EXPECT_EQ(un_restrict(UnModelElem{4, a.ext * b.ext}).ext, un_restrict(a).ext * un_restrict(b).ext);
}

TEST(UnitaryModel, ExteriorGeneratorsFromMu)
{
    EXPECT_EQ(lk_from_mu(5, 1), UnModelElem::mu(5, 1));
    EXPECT_EQ(text(lk_from_mu(2, 2)), "-2*M1 + M2");
    EXPECT_THROW(lk_from_mu(2, 3), IndexOutOfRange);
    EXPECT_THROW(lk_from_mu(2, 0), IndexOutOfRange);
}

TEST(UnitaryModel, RestrictionPreservesGenerators)
{
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) EXPECT_EQ(un_restrict(lk_from_mu(n, k)), lk_formula(n - 1, k)) << n << " " << k;
    for (int n = 3; n <= 6; ++n)
        for (int k = 1; k <= n - 2; ++k) EXPECT_EQ(un_restrict(un_restrict(lk_from_mu(n, k))), lk_from_mu(n - 2, k));
}

TEST(ClassifyingModel, RestrictionOnGenerators)
{
    EXPECT_EQ(bun_restrict(BUnModelElem::beta(3, 2)).to_text(), "B1 + B2");
    EXPECT_EQ(lambdak_from_beta(4, 1).to_text(), "-4 + B1");
    EXPECT_THROW(lambdak_from_beta(2, 3), IndexOutOfRange);
    EXPECT_THROW(bun_restrict(BUnModelElem{2, IntPoly::variable(var(Family::beta, 3))}), IndexOutOfRange);
}

TEST(ClassifyingModel, RestrictionPreservesLambdaClasses)
{
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) EXPECT_EQ(bun_restrict(lambdak_from_beta(n + 1, k)), lambdak_from_beta(n, k)) << n << " " << k;
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= n; ++k) EXPECT_EQ(bun_restrict(bun_restrict(lambdak_from_beta(n + 2, k))), lambdak_from_beta(n, k));
}
