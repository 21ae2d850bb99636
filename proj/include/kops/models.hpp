#pragma once

// Concrete lambda-rings used as action oracles. Every model writes its
// elements as integer combinations of line elements (lambda_t(L) = 1 + L t),
// so lambda_t(sum c_i L_i) = prod (1 + L_i t)^{c_i}.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"
#include "intpoly.hpp"
#include "symcore.hpp"

namespace kops {

class LambdaRingModel {
public:
    using Lines = std::vector<std::pair<IntPoly, Int>>;

    explicit LambdaRingModel(std::string name, int lambda_limit = 16) : name_(std::move(name)), limit_(lambda_limit) {}
    virtual ~LambdaRingModel() = default;

    const std::string& name() const { return name_; }
    /// Largest k for which the model hands out lambda^k.
    int lambda_limit() const { return limit_; }

    /// Canonical representative.
    virtual IntPoly reduce(const IntPoly& a) const = 0;
    virtual Int augmentation(const IntPoly& a) const = 0;
    /// a = sum c_i L_i with each L_i a line.
    virtual Lines lines(const IntPoly& a) const = 0;
    virtual IntPoly sample(std::mt19937_64& rng) const = 0;

    IntPoly mul(const IntPoly& a, const IntPoly& b) const { return reduce(a * b); }

    /// [lambda^0(a), ..., lambda^K(a)].
    std::vector<IntPoly> lambda_series(const IntPoly& a, int k_max) const
    {
        if (k_max > limit_)
            throw ModelTruncationExceeded(name_ + " supplies lambda^k only up to k = " + std::to_string(limit_));
        std::vector<IntPoly> series(k_max + 1);
        series[0] = reduce(IntPoly(1));
        for (const auto& [line, c] : lines(reduce(a))) {
            std::vector<IntPoly> factor(k_max + 1);
            IntPoly power = series[0];
            for (int k = 0; k <= k_max; ++k) {
                factor[k] = power * lambda_of_integer(c, k);
                power = mul(power, line);
            }
            std::vector<IntPoly> next(k_max + 1);
            for (int i = 0; i <= k_max; ++i)
                for (int j = 0; i + j <= k_max; ++j)
                    if (!series[i].is_zero() && !factor[j].is_zero()) next[i + j] += mul(series[i], factor[j]);
            series = std::move(next);
        }
        return series;
    }

    IntPoly lambda(int k, const IntPoly& a) const { return lambda_series(a, k)[k]; }

private:
    std::string name_;
    int limit_;
};

/// Ring operations in a model, for use with evaluate().
struct ModelRing {
    const LambdaRingModel* model;

    IntPoly one() const { return model->reduce(IntPoly(1)); }
    IntPoly add(const IntPoly& a, const IntPoly& b) const { return a + b; }
    IntPoly mul(const IntPoly& a, const IntPoly& b) const { return model->mul(a, b); }
    IntPoly scale(const Int& c, const IntPoly& a) const { return a * c; }
};

namespace detail {
inline Int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline IntPoly xvar(std::uint32_t i) { return IntPoly::variable(var(Family::x, i)); }
} // namespace detail

/// Z with lambda^k(n) = C(n, k).
class IntegerModel : public LambdaRingModel {
public:
    IntegerModel() : LambdaRingModel("int", 64) {}

    IntPoly reduce(const IntPoly& a) const override
    {
        if (!a.all_vars([](Var) { return false; })) throw InvalidArgument("int model elements are integers");
        return a;
    }
    Int augmentation(const IntPoly& a) const override { return a.constant_term(); }
    Lines lines(const IntPoly& a) const override { return {{IntPoly(1), a.constant_term()}}; }
    IntPoly sample(std::mt19937_64& rng) const override { return IntPoly(detail::uniform(rng, -4, 4)); }
};

/// Z[u]/(u^{m+1}) with u = xi - 1 for a line xi; m = 1 is the sphere.
class ProjectiveModel : public LambdaRingModel {
public:
    explicit ProjectiveModel(int m) : LambdaRingModel(m == 1 ? "sphere" : "cp:" + std::to_string(m)), m_(m)
    {
        if (m < 1) throw InvalidArgument("cp:m needs m >= 1");
    }

    IntPoly reduce(const IntPoly& a) const override
    {
        if (!a.all_vars([](Var v) { return v == u_var(); })) throw InvalidArgument(name() + " elements are polynomials in u");
        return a.filter([&](const Monomial& mono) { return static_cast<int>(mono.degree()) <= m_; });
    }
    Int augmentation(const IntPoly& a) const override { return a.constant_term(); }

    Lines lines(const IntPoly& a) const override
    {
        // u^j = (xi - 1)^j, so the coefficient of xi^i is sum_j a_j C(j, i) (-1)^{j-i}.
        Lines out;
        IntPoly xi_power(1);
        const IntPoly xi = IntPoly(1) + u();
        for (int i = 0; i <= m_; ++i) {
            Int b = 0;
            for (int j = i; j <= m_; ++j) b += a.coefficient(Monomial::of(u_var(), j)) * binomial(j, i) * sign_power(j - i);
            if (b != 0) out.emplace_back(xi_power, b);
            xi_power = mul(xi_power, xi);
        }
        return out;
    }

    IntPoly sample(std::mt19937_64& rng) const override
    {
        IntPoly out;
        for (int j = 0; j <= m_; ++j) out.add_term(Monomial::of(u_var(), j), detail::uniform(rng, -3, 3));
        return out;
    }

    static Var u_var() { return var(Family::u, 1); }
    static IntPoly u() { return IntPoly::variable(u_var()); }

private:
    int m_;
};

/// Z[x_1..x_m]; every monomial is a line, epsilon(x_i) = 1.
class SplitModel : public LambdaRingModel {
public:
    explicit SplitModel(int m) : LambdaRingModel("split:" + std::to_string(m)), m_(m)
    {
        if (m < 1) throw InvalidArgument("split:m needs m >= 1");
    }

    IntPoly reduce(const IntPoly& a) const override
    {
        if (!a.all_vars([&](Var v) { return v.slot == 0 && v.family == Family::x && static_cast<int>(v.index) <= m_; }))
            throw InvalidArgument(name() + " elements are polynomials in x1..x" + std::to_string(m_));
        return a;
    }
    Int augmentation(const IntPoly& a) const override
    {
        Int s = 0;
        for (const auto& [mono, c] : a.terms()) s += c;
        return s;
    }
    Lines lines(const IntPoly& a) const override
    {
        Lines out;
        for (const auto& [mono, c] : a.terms()) out.emplace_back(IntPoly::term(mono, 1), c);
        return out;
    }
    IntPoly sample(std::mt19937_64& rng) const override
    {
        IntPoly out;
        for (int t = 0; t < 2; ++t) {
            int i = static_cast<int>(detail::uniform(rng, 0, m_));
            out += (i == 0 ? IntPoly(1) : detail::xvar(i)) * detail::uniform(rng, -2, 2);
        }
        return out;
    }

private:
    int m_;
};

/// Z[x_1..x_m]/(x)^{D+1}; monomials are lines, epsilon(x_i) = 0.
class NilpotentModel : public LambdaRingModel {
public:
    NilpotentModel(int m, int depth)
        : LambdaRingModel("nil:" + std::to_string(m) + ":" + std::to_string(depth)), m_(m), depth_(depth)
    {
        if (m < 1 || depth < 1) throw InvalidArgument("nil:m:D needs m, D >= 1");
    }

    IntPoly reduce(const IntPoly& a) const override
    {
        if (!a.all_vars([&](Var v) { return v.slot == 0 && v.family == Family::x && static_cast<int>(v.index) <= m_; }))
            throw InvalidArgument(name() + " elements are polynomials in x1..x" + std::to_string(m_));
        return a.filter([&](const Monomial& mono) { return static_cast<int>(mono.degree()) <= depth_; });
    }
    Int augmentation(const IntPoly& a) const override { return a.constant_term(); }
    Lines lines(const IntPoly& a) const override
    {
        Lines out;
        for (const auto& [mono, c] : a.terms()) out.emplace_back(IntPoly::term(mono, 1), c);
        return out;
    }
    IntPoly sample(std::mt19937_64& rng) const override
    {
        IntPoly out(detail::uniform(rng, -3, 3));
        for (int t = 0; t < 2; ++t) {
            IntPoly mono(1);
            int deg = static_cast<int>(detail::uniform(rng, 1, depth_));
            for (int d = 0; d < deg; ++d) mono *= detail::xvar(static_cast<std::uint32_t>(detail::uniform(rng, 1, m_)));
            out += mono * detail::uniform(rng, -2, 2);
        }
        return reduce(out);
    }

private:
    int m_;
    int depth_;
};

/// Z^m as sum c_s x_s with complete orthogonal idempotents x_s; epsilon reads
/// the first coordinate.
class CoiModel : public LambdaRingModel {
public:
    explicit CoiModel(int m) : LambdaRingModel("coi:" + std::to_string(m)), m_(m)
    {
        if (m < 1) throw InvalidArgument("coi:m needs m >= 1");
    }

    IntPoly reduce(const IntPoly& a) const override
    {
        IntPoly out;
        for (const auto& [mono, c] : a.terms()) {
            const auto& fs = mono.factors();
            if (fs.empty()) {
                for (int s = 1; s <= m_; ++s) out.add_term(Monomial::of(var(Family::x, s)), c);
                continue;
            }
            for (const auto& f : fs)
                if (f.var.slot != 0 || f.var.family != Family::x || static_cast<int>(f.var.index) > m_)
                    throw InvalidArgument(name() + " elements are combinations of x1..x" + std::to_string(m_));
            if (fs.size() == 1) out.add_term(Monomial::of(fs.front().var), c);
        }
        return out;
    }
    Int augmentation(const IntPoly& a) const override { return reduce(a).coefficient(Monomial::of(var(Family::x, 1))); }
    Lines lines(const IntPoly& a) const override
    {
        Lines out;
        const IntPoly r = reduce(a);
        for (const auto& [mono, c] : r.terms()) out.emplace_back(IntPoly::term(mono, 1), c);
        return out;
    }
    IntPoly sample(std::mt19937_64& rng) const override
    {
        IntPoly out;
        for (int s = 1; s <= m_; ++s) out += detail::xvar(s) * detail::uniform(rng, -3, 3);
        return out;
    }

private:
    int m_;
};

/// A[s]/(s^2) = A ⊗ K(S^2) with s = xi - 1; epsilon(s) = 0.
class SuspendedModel : public LambdaRingModel {
public:
    explicit SuspendedModel(std::shared_ptr<const LambdaRingModel> base)
        : LambdaRingModel("susp(" + base->name() + ")", base->lambda_limit()), base_(std::move(base))
    {
    }

    static Var s_var() { return var(Family::s, 1); }
    static IntPoly s() { return IntPoly::variable(s_var()); }

    /// (a0, a1) with a = a0 + a1 s, higher powers dropped.
    std::pair<IntPoly, IntPoly> split(const IntPoly& a) const
    {
        IntPoly a0, a1;
        for (const auto& [mono, c] : a.terms()) {
            std::uint32_t e = mono.exponent(s_var());
            if (e == 0) {
                a0.add_term(mono, c);
            } else if (e == 1) {
                std::vector<Factor> rest;
                for (const auto& f : mono.factors())
                    if (f.var != s_var()) rest.push_back(f);
                a1.add_term(Monomial(rest), c);
            }
        }
        return {base_->reduce(a0), base_->reduce(a1)};
    }

    IntPoly reduce(const IntPoly& a) const override
    {
        auto [a0, a1] = split(a);
        return a0 + a1 * s();
    }
    Int augmentation(const IntPoly& a) const override { return base_->augmentation(split(a).first); }
    Lines lines(const IntPoly& a) const override
    {
        auto [a0, a1] = split(a);
        Lines out = base_->lines(a0 - a1);
        for (auto& [line, c] : base_->lines(a1)) out.emplace_back(reduce(line * (IntPoly(1) + s())), c);
        return out;
    }
    IntPoly sample(std::mt19937_64& rng) const override { return base_->sample(rng) + base_->sample(rng) * s(); }

    const LambdaRingModel& base() const { return *base_; }

private:
    std::shared_ptr<const LambdaRingModel> base_;
};

/// First violated axiom on `pairs` random pairs, or nothing.
inline std::optional<std::string> check_lambda_axioms(const LambdaRingModel& model, int pairs, int k_max, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    const ModelRing ring{&model};
    auto image = [&](const std::vector<IntPoly>& lx, const std::vector<IntPoly>& ly) {
        return [&lx, &ly](Var v) { return v.family == Family::y ? ly.at(v.index) : lx.at(v.index); };
    };
    for (int n = 0; n < pairs; ++n) {
        IntPoly x = model.reduce(model.sample(rng));
        IntPoly y = model.reduce(model.sample(rng));
        auto lx = model.lambda_series(x, k_max);
        auto ly = model.lambda_series(y, k_max);
        auto lsum = model.lambda_series(x + y, k_max);
        auto lprod = model.lambda_series(model.mul(x, y), k_max);
        const std::string where = " at x = " + to_text(x) + ", y = " + to_text(y);
        if (lx[0] != model.reduce(IntPoly(1)) || lx[1] != x) return "lambda^0 = 1, lambda^1 = id" + where;
        for (int k = 0; k <= k_max; ++k) {
            if (model.augmentation(lx[k]) != lambda_of_integer(model.augmentation(x), k))
                return "augmentation commutes with lambda^" + std::to_string(k) + where;
            IntPoly conv;
            for (int i = 0; i <= k; ++i) conv += model.mul(lx[i], ly[k - i]);
            if (model.reduce(conv) != lsum[k]) return "additivity of lambda^" + std::to_string(k) + where;
            if (k >= 1 && evaluate(universal_pk(k), image(lx, ly), ring) != lprod[k])
                return "lambda^" + std::to_string(k) + " of a product" + where;
        }
        for (int i = 2; i <= k_max; ++i)
            for (int j = 2; i * j <= 9 && j <= k_max; ++j) {
                IntPoly lhs = model.lambda(i, lx[j]);
                IntPoly rhs = evaluate(universal_pij(i, j), [&](Var v) { return model.lambda(static_cast<int>(v.index), x); }, ring);
                if (lhs != rhs) return "lambda^" + std::to_string(i) + " lambda^" + std::to_string(j) + where;
            }
    }
    return std::nullopt;
}

/// Builds a model from its CLI name: int, sphere, cp:m, split:m, nil:m:D, coi:m.
inline std::shared_ptr<const LambdaRingModel> make_model(const std::string& name)
{
    auto parts = [&] {
        std::vector<std::string> out;
        std::size_t start = 0;
        for (std::size_t p; (p = name.find(':', start)) != std::string::npos; start = p + 1) out.push_back(name.substr(start, p - start));
        out.push_back(name.substr(start));
        return out;
    }();
    auto number = [&](std::size_t i) {
        if (i >= parts.size()) throw InvalidArgument("model " + name + " is missing a parameter");
        try {
            return std::stoi(parts[i]);
        } catch (const std::exception&) {
            throw InvalidArgument("model " + name + " has a bad parameter");
        }
    };
    const std::string& kind = parts[0];
    if (kind == "int" && parts.size() == 1) return std::make_shared<IntegerModel>();
    if (kind == "sphere" && parts.size() == 1) return std::make_shared<ProjectiveModel>(1);
    if (kind == "cp" && parts.size() == 2) return std::make_shared<ProjectiveModel>(number(1));
    if (kind == "split" && parts.size() == 2) return std::make_shared<SplitModel>(number(1));
    if (kind == "nil" && parts.size() == 3) return std::make_shared<NilpotentModel>(number(1), number(2));
    if (kind == "coi" && parts.size() == 2) return std::make_shared<CoiModel>(number(1));
    throw InvalidArgument("unknown model " + name);
}

/// Model by name, axiom suite run once on first use.
inline std::shared_ptr<const LambdaRingModel> get_model(const std::string& name)
{
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const LambdaRingModel>> cache;
    std::lock_guard lock(mu);
    if (auto it = cache.find(name); it != cache.end()) return it->second;
    auto model = make_model(name);
    if (auto bad = check_lambda_axioms(*model, 50, 5, 0x5eed))
        throw RegistrationFailure(model->name() + ": " + *bad);
    cache.emplace(name, model);
    return model;
}

inline const std::vector<std::string>& registered_model_names()
{
    static const std::vector<std::string> names{"int", "sphere", "cp:2", "cp:3", "split:2", "split:3", "nil:2:3", "coi:3"};
    return names;
}

inline std::vector<std::shared_ptr<const LambdaRingModel>> register_models()
{
    std::vector<std::shared_ptr<const LambdaRingModel>> out;
    for (const auto& n : registered_model_names()) out.push_back(get_model(n));
    return out;
}

} // namespace kops
