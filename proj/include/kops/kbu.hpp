#pragma once

// K(BU) = Z[[lambda^1 iota, lambda^2 iota, ...]] at finite truncation level N:
// any lambda^m iota with m > N is dropped.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"
#include "intpoly.hpp"
#include "symcore.hpp"

namespace kops {

inline IntPoly lam(std::uint32_t k, std::uint8_t slot = 0)
{
    if (k == 0) return IntPoly(1);
    return IntPoly::variable(var(Family::lambda, k, slot));
}

/// Element of K(BU) truncated at level N.
class KBUElem {
public:
    KBUElem() = default;
    KBUElem(IntPoly poly, int trunc) : poly_(std::move(poly)), trunc_(trunc)
    {
        if (trunc_ < 1) throw InvalidArgument("truncation level must be positive");
        if (!poly_.all_vars([&](Var v) {
                return v.slot == 0 && v.family == Family::lambda && v.index >= 1 && static_cast<int>(v.index) <= trunc_;
            }))
            throw InvalidArgument("K(BU) element must be a polynomial in lambda_1..lambda_" + std::to_string(trunc_));
    }

    static KBUElem one(int trunc) { return KBUElem(IntPoly(1), trunc); }
    static KBUElem constant(const Int& c, int trunc) { return KBUElem(IntPoly(c), trunc); }
    /// lambda^k iota; zero when k exceeds the truncation.
    static KBUElem generator(int k, int trunc)
    {
        if (k > trunc) return KBUElem(IntPoly{}, trunc);
        return KBUElem(lam(static_cast<std::uint32_t>(k)), trunc);
    }

    const IntPoly& poly() const { return poly_; }
    int trunc() const { return trunc_; }
    bool is_zero() const { return poly_.is_zero(); }

    /// Projection to level M <= N: deletes every term containing lambda_m, m > M.
    KBUElem retruncate(int level) const
    {
        if (level > trunc_) throw TruncationMismatch("cannot raise truncation level");
        return KBUElem(poly_.filter([&](const Monomial& m) {
                           return m.degree_if([&](Var v) { return static_cast<int>(v.index) > level; }) == 0;
                       }),
                       level);
    }

    KBUElem& operator+=(const KBUElem& o)
    {
        check(o);
        poly_ += o.poly_;
        return *this;
    }
    KBUElem& operator-=(const KBUElem& o)
    {
        check(o);
        poly_ -= o.poly_;
        return *this;
    }
    friend KBUElem operator+(KBUElem a, const KBUElem& b) { return a += b; }
    friend KBUElem operator-(KBUElem a, const KBUElem& b) { return a -= b; }
    friend KBUElem operator-(KBUElem a) { return KBUElem(-a.poly_, a.trunc_); }
    friend KBUElem operator*(const KBUElem& a, const KBUElem& b)
    {
        a.check(b);
        return KBUElem(a.poly_ * b.poly_, a.trunc_);
    }
    friend KBUElem operator*(const Int& c, const KBUElem& a) { return KBUElem(a.poly_ * c, a.trunc_); }

    bool operator==(const KBUElem&) const = default;

private:
    void check(const KBUElem& o) const
    {
        if (o.trunc_ != trunc_)
            throw TruncationMismatch("levels " + std::to_string(trunc_) + " and " + std::to_string(o.trunc_));
    }

    IntPoly poly_;
    int trunc_ = 1;
};

/// Multi-fold tensor power of K(BU): a polynomial whose lambda variables carry
/// their tensor position in Var::slot.
class TensorKBU {
public:
    TensorKBU() = default;
    TensorKBU(IntPoly poly, int trunc, int arity) : poly_(std::move(poly)), trunc_(trunc), arity_(arity) {}

    const IntPoly& poly() const { return poly_; }
    int trunc() const { return trunc_; }
    int arity() const { return arity_; }

    /// Bilinear normal form for arity 2: distinct left monomials with their
    /// right cofactors.
    std::vector<std::pair<KBUElem, KBUElem>> pairs() const
    {
        if (arity_ != 2) throw InvalidArgument("pairs() needs a two-fold tensor");
        std::map<Monomial, IntPoly> grouped;
        for (const auto& [m, c] : poly_.terms()) {
            std::vector<Factor> left, right;
            for (const auto& f : m.factors()) {
                Factor g = f;
                g.var.slot = 0;
                (f.var.slot == 0 ? left : right).push_back(g);
            }
            grouped[Monomial(left)].add_term(Monomial(right), c);
        }
        std::vector<std::pair<KBUElem, KBUElem>> out;
        for (auto& [m, rest] : grouped) out.emplace_back(KBUElem(IntPoly::term(m, 1), trunc_), KBUElem(rest, trunc_));
        return out;
    }

    bool operator==(const TensorKBU&) const = default;

private:
    IntPoly poly_;
    int trunc_ = 1;
    int arity_ = 2;
};

/// "c*m0⊗m1" terms, e.g. "L1⊗1 + 1⊗L1".
inline std::string to_text(const TensorKBU& t)
{
    if (t.poly().is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : t.poly().terms()) {
        std::vector<std::vector<Factor>> parts(t.arity());
        for (const auto& f : m.factors()) {
            Factor g = f;
            g.var.slot = 0;
            parts.at(f.var.slot).push_back(g);
        }
        Int mag = c < 0 ? Int(-c) : c;
        s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        first = false;
        if (mag != 1) s += mag.str() + "*";
        for (int i = 0; i < t.arity(); ++i) {
            if (i) s += "⊗";
            s += monomial_text(Monomial(parts[i]));
        }
    }
    return s;
}

/// Moves slot i of every variable to new_slots[i].
inline IntPoly relabel_slots(const IntPoly& p, const std::vector<std::uint8_t>& new_slots)
{
    return substitute(p, [&](Var v) {
        v.slot = new_slots.at(v.slot);
        return IntPoly::variable(v);
    });
}

/// Applies a ring map to the variables in `slot`; `image(k)` gives the image
/// of lambda_k. Other variables are left alone.
template <class Image>
IntPoly map_slot(const IntPoly& p, std::uint8_t slot, Image&& image)
{
    return substitute(p, [&](Var v) {
        if (v.slot == slot && v.family == Family::lambda) return image(static_cast<int>(v.index));
        return IntPoly::variable(v);
    });
}

/// Image of lambda^k iota under co-addition, into slots (left, right).
inline IntPoly coadd_generator(int k, std::uint8_t left = 0, std::uint8_t right = 1)
{
    IntPoly out;
    for (int i = 0; i <= k; ++i) out += lam(i, left) * lam(k - i, right);
    return out;
}

/// Image of lambda^k iota under co-multiplication: P_k(lambda^i⊗1; 1⊗lambda^j).
inline IntPoly comult_generator(int k, std::uint8_t left = 0, std::uint8_t right = 1)
{
    return substitute(universal_pk(k), [&](Var v) {
        return lam(v.index, v.family == Family::x ? left : right);
    });
}

inline TensorKBU coadd(const KBUElem& x)
{
    return TensorKBU(map_slot(x.poly(), 0, [](int k) { return coadd_generator(k); }), x.trunc(), 2);
}

inline TensorKBU comult(const KBUElem& x)
{
    return TensorKBU(map_slot(x.poly(), 0, [](int k) { return comult_generator(k); }), x.trunc(), 2);
}

inline Int cozero(const KBUElem& x) { return x.poly().constant_term(); }

/// sigma(lambda^k iota) from sum_{i+j=k} lambda^i sigma(lambda^j) = 0.
inline std::vector<IntPoly> antipode_generators(int k_max)
{
    std::vector<IntPoly> sigma{IntPoly(1)};
    for (int k = 1; k <= k_max; ++k) {
        IntPoly s;
        for (int i = 1; i <= k; ++i) s -= lam(i) * sigma[k - i];
        sigma.push_back(std::move(s));
    }
    return sigma;
}

inline KBUElem antipode(const KBUElem& x)
{
    auto sigma = antipode_generators(static_cast<int>(x.poly().max_index(Family::lambda)));
    return KBUElem(map_slot(x.poly(), 0, [&](int k) { return sigma[k]; }), x.trunc());
}

/// gamma(kappa): lambda^k iota -> P_k(C(kappa, i); lambda^j iota), i.e.
/// precomposition with multiplication by kappa.
inline KBUElem colinear(const Int& kappa, const KBUElem& x)
{
    return KBUElem(map_slot(x.poly(), 0,
                            [&](int k) {
                                return substitute(universal_pk(k), [&](Var v) {
                                    if (v.family == Family::x) return IntPoly(lambda_of_integer(kappa, static_cast<int>(v.index)));
                                    return lam(v.index);
                                });
                            }),
                   x.trunc());
}

/// Truncated lambda-series [1, lambda^1(z), ..., lambda^K(z)] in K(BU).
using LambdaSeries = std::vector<IntPoly>;

namespace detail {

inline LambdaSeries series_mul(const LambdaSeries& a, const LambdaSeries& b)
{
    LambdaSeries out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        for (std::size_t i = 0; i <= k; ++i) out[k] += a[i] * b[k - i];
    return out;
}

/// Inverse of a series with constant term 1.
inline LambdaSeries series_inv(const LambdaSeries& a)
{
    LambdaSeries out(a.size());
    out[0] = IntPoly(1);
    for (std::size_t k = 1; k < a.size(); ++k) {
        IntPoly s;
        for (std::size_t i = 1; i <= k; ++i) s -= a[i] * out[k - i];
        out[k] = std::move(s);
    }
    return out;
}

inline LambdaSeries series_pow(const LambdaSeries& a, const Int& c)
{
    LambdaSeries base = c < 0 ? series_inv(a) : a;
    Int n = c < 0 ? Int(-c) : c;
    LambdaSeries out(a.size());
    out[0] = IntPoly(1);
    for (Int i = 0; i < n; ++i) out = series_mul(out, base);
    return out;
}

/// Series of a product from the series of its factors via P_k.
inline LambdaSeries series_product(const LambdaSeries& a, const LambdaSeries& b)
{
    LambdaSeries out(a.size());
    out[0] = IntPoly(1);
    for (std::size_t k = 1; k < a.size(); ++k)
        out[k] = substitute(universal_pk(static_cast<int>(k)), [&](Var v) {
            return v.family == Family::x ? a[v.index] : b[v.index];
        });
    return out;
}

} // namespace detail

/// lambda^k applied to z in the truncated lambda-ring K(BU), k <= k_max.
inline LambdaSeries lambda_series(const KBUElem& z, int k_max)
{
    const int n = z.trunc();
    const std::size_t len = static_cast<std::size_t>(k_max) + 1;
    LambdaSeries total(len);
    total[0] = IntPoly(1);
    std::map<std::uint32_t, LambdaSeries> gen;
    auto generator_series = [&](std::uint32_t j) -> const LambdaSeries& {
        auto it = gen.find(j);
        if (it != gen.end()) return it->second;
        LambdaSeries s(len);
        s[0] = IntPoly(1);
        for (std::size_t k = 1; k < len; ++k) s[k] = universal_pij_truncated(static_cast<int>(k), static_cast<int>(j), n);
        return gen.emplace(j, std::move(s)).first->second;
    };
    for (const auto& [mono, c] : z.poly().terms()) {
        LambdaSeries ms(len);
        if (mono.is_one()) {
            ms[0] = IntPoly(1);
            for (std::size_t k = 1; k < len; ++k) ms[k] = IntPoly(lambda_of_integer(1, static_cast<int>(k)));
        } else {
            bool first = true;
            for (const auto& f : mono.factors())
                for (std::uint32_t e = 0; e < f.exp; ++e) {
                    ms = first ? generator_series(f.var.index) : detail::series_product(ms, generator_series(f.var.index));
                    first = false;
                }
        }
        total = detail::series_mul(total, detail::series_pow(ms, c));
    }
    return total;
}

/// Internal composition x∘y for y in the augmentation ideal. The left
/// argument acts as a ring map; the right argument is expanded with the
/// additive, multiplicative and scalar composition rules.
inline KBUElem compose_kbu(const KBUElem& x, const KBUElem& y)
{
    if (x.trunc() != y.trunc()) throw TruncationMismatch("compose_kbu operands differ in level");
    if (cozero(y) != 0) throw NotReduced("right operand has constant term " + cozero(y).str());
    const int k_max = static_cast<int>(x.poly().max_index(Family::lambda));
    if (k_max == 0) return x;
    LambdaSeries s = lambda_series(y, k_max);
    return KBUElem(map_slot(x.poly(), 0, [&](int k) { return s[k]; }), x.trunc());
}

} // namespace kops
