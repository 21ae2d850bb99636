#pragma once

// Property suites shared by the command line and the test programs. Each
// returns a Report; nothing here throws on a failed property.

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "errors.hpp"
#include "evenops.hpp"
#include "kbu.hpp"
#include "loopgrade.hpp"
#include "models.hpp"
#include "setzz.hpp"
#include "symcore.hpp"

namespace kops {

namespace detail {

inline int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Products of generators of total weight at most `weight` (plus 1).
inline std::vector<KBUElem> kbu_corpus(int n, int weight)
{
    std::vector<KBUElem> out{KBUElem::one(n)};
    for (int i = 1; i <= std::min(n, weight); ++i) {
        out.push_back(KBUElem::generator(i, n));
        for (int j = i; i + j <= weight && j <= n; ++j) out.push_back(KBUElem::generator(i, n) * KBUElem::generator(j, n));
    }
    return out;
}

} // namespace detail

/// Largest k with k*k <= N: composites of such operations are exact at level N.
inline int exact_index_bound(int n) { return std::max(1, static_cast<int>(std::sqrt(static_cast<double>(n)))); }

inline FnZZ random_fn(std::mt19937_64& rng)
{
    switch (detail::pick(rng, 0, 3)) {
    case 0: return FnZZ::chi(detail::pick(rng, -3, 3));
    case 1: return FnZZ::constant(detail::pick(rng, -2, 2));
    case 2: return FnZZ::sum({FnZZ::chi(detail::pick(rng, -3, 3)), FnZZ::constant(detail::pick(rng, -1, 1))});
    default: return FnZZ::product({FnZZ::constant(detail::pick(rng, -2, 2)), FnZZ::chi(detail::pick(rng, -3, 3))});
    }
}

/// Random element of K(BU) using lambda^1..lambda^kmax.
inline KBUElem random_kbu(std::mt19937_64& rng, int n, int kmax, bool with_constant)
{
    IntPoly p;
    if (with_constant) p += IntPoly(detail::pick(rng, -2, 2));
    for (int t = 0; t < 2; ++t) {
        IntPoly m = lam(detail::pick(rng, 1, kmax));
        if (detail::pick(rng, 0, 3) == 0) m *= lam(1);
        p += m * Int(detail::pick(rng, -2, 2));
    }
    return KBUElem(p, n);
}

/// One or two summands; an identity left factor only meets a reduced right
/// factor, so composites stay inside any window of radius >= 3.
inline EvenOp random_even_op(std::mt19937_64& rng, int n, Window w, int kmax)
{
    std::vector<EvenOp::Summand> summands;
    const int count = detail::pick(rng, 1, 2);
    for (int i = 0; i < count; ++i) {
        const bool ident = detail::pick(rng, 0, 2) == 0;
        summands.emplace_back(ident ? FnZZ::identity() : random_fn(rng), random_kbu(rng, n, kmax, !ident));
    }
    return EvenOp(n, w, std::move(summands));
}

/// Coassociativity, antipode, counit and co-linear laws of K(BU) at level N.
inline Report check_biring(int n)
{
    Report rep;
    auto name = [](const KBUElem& x) { return to_text(x.poly()); };
    const auto corpus = detail::kbu_corpus(n, n);
    for (const auto& x : corpus) {
        const IntPoly& p = x.poly();
        for (const bool additive : {true, false}) {
            auto gen = [&](int k, std::uint8_t l, std::uint8_t r) { return additive ? coadd_generator(k, l, r) : comult_generator(k, l, r); };
            IntPoly once = map_slot(p, 0, [&](int k) { return gen(k, 0, 2); });
            IntPoly left = map_slot(once, 0, [&](int k) { return gen(k, 0, 1); });
            IntPoly right = map_slot(map_slot(p, 0, [&](int k) { return gen(k, 0, 1); }), 1, [&](int k) { return gen(k, 1, 2); });
            rep.add(additive ? "coassociativity+" : "coassociativity×", name(x), left == right);

            // Counit: eps+ kills lambda^k, eps^x sends lambda^k to C(1, k).
            IntPoly two = map_slot(p, 0, [&](int k) { return gen(k, 0, 1); });
            IntPoly unit = map_slot(two, 0, [&](int k) { return IntPoly(additive ? Int(0) : lambda_of_integer(1, k)); });
            rep.add(additive ? "counit+" : "counit×", name(x), relabel_slots(unit, {0, 0}) == p);
        }
        // m(sigma ⊗ 1)Delta+ = eps+.
        const auto sigma = antipode_generators(n);
        IntPoly anti = map_slot(coadd(x).poly(), 0, [&](int k) { return sigma[k]; });
        rep.add("antipode", name(x), relabel_slots(anti, {0, 0}) == IntPoly(cozero(x)));
        rep.add("gamma(-1) = sigma", name(x), colinear(-1, x) == antipode(x));
        for (int a = -2; a <= 2; ++a)
            for (int b = -2; b <= 2; ++b)
                rep.add("gamma composition", name(x) + " at " + std::to_string(a) + ", " + std::to_string(b),
                        colinear(a, colinear(b, x)) == colinear(Int(a) * b, x));
    }
    return rep;
}

/// Composition against the action oracle, unit laws and associativity.
inline Report check_compose(int n, Window w, std::uint64_t seed, int pairs, int elements_per_model = 5)
{
    Report rep;
    std::mt19937_64 rng(seed);
    const int kmax = exact_index_bound(n);
    const EvenOp unit = identity_op(n, w);
    const auto models = register_models();
    for (int t = 0; t < pairs; ++t) {
        const EvenOp r = random_even_op(rng, n, w, kmax);
        const EvenOp s = random_even_op(rng, n, w, kmax);
        const std::string inst = "r = " + to_text(r) + ", s = " + to_text(s);
        try {
            const EvenOp rs = compose(r, s);
            rep.add("unit", "left " + inst, compose(unit, s) == s.normal_form());
            rep.add("unit", "right " + inst, compose(r, unit) == r.normal_form());
            const EvenOp u = random_even_op(rng, n, w, kmax);
            rep.add("associativity", inst + ", t = " + to_text(u), compose(rs, u) == compose(r, compose(s, u)));
            for (const auto& model : models)
                for (int e = 0; e < elements_per_model; ++e) {
                    const IntPoly a = model->sample(rng);
                    IntPoly lhs, rhs;
                    try {
                        lhs = act(rs, *model, a);
                        rhs = act(r, *model, act(s, *model, a));
                    } catch (const WindowExhausted&) {
                        continue;
                    }
                    rep.add("action", inst + " on " + model->name() + " at " + to_text(a), lhs == rhs,
                            to_text(lhs) + " vs " + to_text(rhs));
                }
        } catch (const WindowExhausted& e) {
            rep.add("window", inst, false, e.what());
        }
    }
    return rep;
}

/// Axiom suite of every registered model, rerun with the given seed.
inline Report check_models(std::uint64_t seed, int pairs = 50)
{
    Report rep;
    for (const auto& name : registered_model_names()) {
        auto model = make_model(name);
        auto bad = check_lambda_axioms(*model, pairs, 5, seed);
        rep.add("lambda-ring axioms", name, !bad.has_value(), bad.value_or(""));
    }
    return rep;
}

} // namespace kops
