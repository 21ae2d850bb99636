#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "integer.hpp"

namespace kops {

/// Symbol families. `a`/`b` are line variables used by the splitting
/// oracle, `u` and `s` are model generators (projective-space class and
/// suspension class).
enum class Family : std::uint8_t { x, y, e, lambda, beta, mu, l, u, a, b, s };

/// Name used in JSON output.
inline std::string_view family_tag(Family f)
{
    switch (f) {
    case Family::x: return "x";
    case Family::y: return "y";
    case Family::e: return "e";
    case Family::lambda: return "λ";
    case Family::beta: return "β";
    case Family::mu: return "μ";
    case Family::l: return "l";
    case Family::u: return "u";
    case Family::a: return "a";
    case Family::b: return "b";
    case Family::s: return "s";
    }
    return "?";
}

/// Name used in text output; chosen so text output parses back.
inline std::string_view family_text(Family f)
{
    switch (f) {
    case Family::lambda: return "L";
    case Family::beta: return "B";
    case Family::mu: return "M";
    default: return family_tag(f);
    }
}

/// Families whose single generator prints without an index.
inline bool family_is_scalar(Family f) { return f == Family::u || f == Family::s; }

/// A variable. `slot` is the tensor position (0 outside tensors).
struct Var {
    std::uint8_t slot = 0;
    Family family = Family::x;
    std::uint32_t index = 1;

    auto operator<=>(const Var&) const = default;
};

inline Var var(Family f, std::uint32_t index, std::uint8_t slot = 0) { return Var{slot, f, index}; }

struct Factor {
    Var var;
    std::uint32_t exp = 1;

    auto operator<=>(const Factor&) const = default;
};

/// Product of variable powers, factors sorted by variable, exponents positive.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) { canonicalise(); }
    static Monomial of(Var v, std::uint32_t e = 1) { return e == 0 ? Monomial{} : Monomial{{Factor{v, e}}}; }

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    std::uint32_t degree() const
    {
        std::uint32_t d = 0;
        for (const auto& f : factors_) d += f.exp;
        return d;
    }

    template <class Pred>
    std::uint32_t degree_if(Pred&& pred) const
    {
        std::uint32_t d = 0;
        for (const auto& f : factors_)
            if (pred(f.var)) d += f.exp;
        return d;
    }

    std::uint32_t exponent(Var v) const
    {
        for (const auto& f : factors_)
            if (f.var == v) return f.exp;
        return 0;
    }

    friend Monomial operator*(const Monomial& lhs, const Monomial& rhs)
    {
        std::vector<Factor> out;
        out.reserve(lhs.factors_.size() + rhs.factors_.size());
        auto i = lhs.factors_.begin();
        auto j = rhs.factors_.begin();
        while (i != lhs.factors_.end() || j != rhs.factors_.end()) {
            if (j == rhs.factors_.end() || (i != lhs.factors_.end() && i->var < j->var)) {
                out.push_back(*i++);
            } else if (i == lhs.factors_.end() || j->var < i->var) {
                out.push_back(*j++);
            } else {
                out.push_back(Factor{i->var, i->exp + j->exp});
                ++i;
                ++j;
            }
        }
        Monomial m;
        m.factors_ = std::move(out);
        return m;
    }

    auto operator<=>(const Monomial&) const = default;

private:
    void canonicalise()
    {
        std::sort(factors_.begin(), factors_.end());
        std::vector<Factor> merged;
        for (const auto& f : factors_) {
            if (f.exp == 0) continue;
            if (!merged.empty() && merged.back().var == f.var)
                merged.back().exp += f.exp;
            else
                merged.push_back(f);
        }
        factors_ = std::move(merged);
    }

    std::vector<Factor> factors_;
};

/// Sparse multivariate polynomial with arbitrary-precision coefficients.
/// No stored coefficient is zero.
class IntPoly {
public:
    using TermMap = std::map<Monomial, Int>;

    IntPoly() = default;
    IntPoly(Int c) { add_term(Monomial{}, std::move(c)); }
    IntPoly(int c) : IntPoly(Int(c)) {}

    static IntPoly variable(Var v, std::uint32_t e = 1) { return term(Monomial::of(v, e), 1); }
    static IntPoly term(Monomial m, Int c)
    {
        IntPoly p;
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Int coefficient(const Monomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Int(0) : it->second;
    }
    Int constant_term() const { return coefficient(Monomial{}); }

    void add_term(const Monomial& m, const Int& c)
    {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    IntPoly& operator+=(const IntPoly& o)
    {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    IntPoly& operator-=(const IntPoly& o)
    {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    IntPoly& operator*=(const IntPoly& o)
    {
        *this = *this * o;
        return *this;
    }
    IntPoly& operator*=(const Int& c)
    {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator-(IntPoly a)
    {
        for (auto& [m, v] : a.terms_) v = -v;
        return a;
    }
    friend IntPoly operator*(IntPoly a, const Int& c) { return a *= c; }
    friend IntPoly operator*(const Int& c, IntPoly a) { return a *= c; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b)
    {
        IntPoly out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
        return out;
    }

    bool operator==(const IntPoly&) const = default;

    /// Terms whose monomial satisfies `pred`.
    template <class Pred>
    IntPoly filter(Pred&& pred) const
    {
        IntPoly out;
        for (const auto& [m, c] : terms_)
            if (pred(m)) out.terms_.emplace(m, c);
        return out;
    }

    /// Largest index of a variable of family `f` (0 if none).
    std::uint32_t max_index(Family f) const
    {
        std::uint32_t k = 0;
        for (const auto& [m, c] : terms_)
            for (const auto& fac : m.factors())
                if (fac.var.family == f) k = std::max(k, fac.var.index);
        return k;
    }

    template <class Pred>
    bool all_vars(Pred&& pred) const
    {
        for (const auto& [m, c] : terms_)
            for (const auto& fac : m.factors())
                if (!pred(fac.var)) return false;
        return true;
    }

private:
    TermMap terms_;
};

inline IntPoly pow(const IntPoly& p, std::uint32_t e)
{
    IntPoly out(1);
    for (std::uint32_t i = 0; i < e; ++i) out *= p;
    return out;
}

/// Ring operations for plain IntPoly; other carriers (model quotient rings)
/// provide the same four members.
struct PolyRing {
    IntPoly one() const { return IntPoly(1); }
    IntPoly add(const IntPoly& a, const IntPoly& b) const { return a + b; }
    IntPoly mul(const IntPoly& a, const IntPoly& b) const { return a * b; }
    IntPoly scale(const Int& c, const IntPoly& a) const { return a * c; }
};

/// Ring-map evaluation: replace each variable by `image(var)` and evaluate
/// in `ring`. Powers are cached per variable.
template <class Ring, class Image>
auto evaluate(const IntPoly& p, Image&& image, const Ring& ring)
{
    using R = decltype(ring.one());
    std::map<Var, std::vector<R>> powers;
    auto power = [&](Var v, std::uint32_t e) -> const R& {
        auto& cache = powers[v];
        if (cache.empty()) {
            cache.push_back(ring.one());
            cache.push_back(image(v));
        }
        while (cache.size() <= e) cache.push_back(ring.mul(cache.back(), cache[1]));
        return cache[e];
    };
    R total = ring.scale(Int(0), ring.one());
    for (const auto& [m, c] : p.terms()) {
        R t = ring.scale(c, ring.one());
        for (const auto& f : m.factors()) t = ring.mul(t, power(f.var, f.exp));
        total = ring.add(total, t);
    }
    return total;
}

template <class Image>
IntPoly substitute(const IntPoly& p, Image&& image)
{
    return evaluate(p, std::forward<Image>(image), PolyRing{});
}

inline std::string var_text(Var v)
{
    std::string s(family_text(v.family));
    if (!(family_is_scalar(v.family) && v.index == 1)) s += std::to_string(v.index);
    return s;
}

inline std::string monomial_text(const Monomial& m)
{
    if (m.is_one()) return "1";
    std::string s;
    for (const auto& f : m.factors()) {
        if (!s.empty()) s += "*";
        s += var_text(f.var);
        if (f.exp != 1) s += "^" + std::to_string(f.exp);
    }
    return s;
}

/// Canonical text: terms in monomial order, e.g. "x1^2*y2 + x2*y1^2 - 2*x2*y2".
/// Slots are ignored; tensor printers group by slot themselves.
inline std::string to_text(const IntPoly& p)
{
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        first = false;
        if (m.is_one()) {
            s += mag.str();
        } else {
            if (mag != 1) s += mag.str() + "*";
            s += monomial_text(m);
        }
    }
    return s;
}

/// JSON form: {"terms":[{"coeff":"-2","monomial":[["x",2,1],["y",2,1]]},...]}.
inline nlohmann::json to_json(const IntPoly& p)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json mono = nlohmann::json::array();
        for (const auto& f : m.factors()) {
            nlohmann::json fj = {std::string(family_tag(f.var.family)), f.var.index, f.exp};
            if (f.var.slot != 0) fj.push_back(f.var.slot);
            mono.push_back(fj);
        }
        terms.push_back({{"coeff", c.str()}, {"monomial", mono}});
    }
    return {{"terms", terms}};
}

} // namespace kops
