#pragma once

// Set(Z, Z): total functions Z -> Z as finite expression trees. Equality and
// coproducts are computed relative to a window [-W, W]; the completed
// structure is only ever seen through such windows.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"

namespace kops {

struct Window {
    std::int64_t radius = 1;

    explicit Window(std::int64_t w = 1) : radius(w)
    {
        if (w < 1) throw InvalidArgument("window radius must be at least 1");
    }
    bool contains(const Int& n) const { return n >= -radius && n <= radius; }
    bool operator==(const Window&) const = default;
};

class FnZZ {
public:
    enum class Kind { constant, identity, indicator, sum, product, compose };

    static FnZZ constant(Int c) { return FnZZ(Kind::constant, std::move(c), {}); }
    static FnZZ identity() { return FnZZ(Kind::identity, 0, {}); }
    static FnZZ chi(Int d) { return FnZZ(Kind::indicator, std::move(d), {}); }
    static FnZZ sum(std::vector<FnZZ> terms)
    {
        if (terms.empty()) return constant(0);
        if (terms.size() == 1) return terms.front();
        return FnZZ(Kind::sum, 0, std::move(terms));
    }
    static FnZZ product(std::vector<FnZZ> factors)
    {
        if (factors.empty()) return constant(1);
        if (factors.size() == 1) return factors.front();
        return FnZZ(Kind::product, 0, std::move(factors));
    }
    static FnZZ composite(FnZZ outer, FnZZ inner) { return FnZZ(Kind::compose, 0, {std::move(outer), std::move(inner)}); }

    Kind kind() const { return node_->kind; }
    /// Constant value or indicator point.
    const Int& value() const { return node_->value; }
    const std::vector<FnZZ>& children() const { return node_->children; }

    Int operator()(const Int& n) const
    {
        switch (kind()) {
        case Kind::constant: return value();
        case Kind::identity: return n;
        case Kind::indicator: return n == value() ? 1 : 0;
        case Kind::sum: {
            Int s = 0;
            for (const auto& c : children()) s += c(n);
            return s;
        }
        case Kind::product: {
            Int p = 1;
            for (const auto& c : children()) {
                p *= c(n);
                if (p == 0) break;
            }
            return p;
        }
        case Kind::compose: return children()[0](children()[1](n));
        }
        return 0;
    }

    /// Prefix form: const(3), id, chi(-2), sum(..), prod(..), comp(outer,inner).
    std::string to_string() const
    {
        switch (kind()) {
        case Kind::constant: return "const(" + value().str() + ")";
        case Kind::identity: return "id";
        case Kind::indicator: return "chi(" + value().str() + ")";
        case Kind::sum: return "sum(" + join() + ")";
        case Kind::product: return "prod(" + join() + ")";
        case Kind::compose: return "comp(" + join() + ")";
        }
        return "?";
    }

private:
    struct Node {
        Kind kind;
        Int value;
        std::vector<FnZZ> children;
    };

    FnZZ(Kind k, Int v, std::vector<FnZZ> ch) : node_(std::make_shared<const Node>(Node{k, std::move(v), std::move(ch)})) {}

    std::string join() const
    {
        std::string s;
        for (const auto& c : children()) {
            if (!s.empty()) s += ",";
            s += c.to_string();
        }
        return s;
    }

    std::shared_ptr<const Node> node_;
};

inline Int eval(const FnZZ& f, const Int& n) { return f(n); }

/// eval(fn_compose(f, g), n) == f(g(n)).
inline FnZZ fn_compose(const FnZZ& f, const FnZZ& g)
{
    using K = FnZZ::Kind;
    if (f.kind() == K::identity) return g;
    if (g.kind() == K::identity) return f;
    if (f.kind() == K::constant) return f;
    if (g.kind() == K::constant) return FnZZ::constant(f(g.value()));
    return FnZZ::composite(f, g);
}

/// Sorted (d, f(d)) pairs over the window, zero values omitted.
using IndicatorTable = std::map<std::int64_t, Int>;

inline IndicatorTable indicator_table(const FnZZ& f, Window w)
{
    IndicatorTable t;
    for (std::int64_t d = -w.radius; d <= w.radius; ++d) {
        Int v = f(d);
        if (v != 0) t.emplace(d, std::move(v));
    }
    return t;
}

inline FnZZ from_indicator_table(const IndicatorTable& t)
{
    std::vector<FnZZ> terms;
    for (const auto& [d, v] : t) {
        if (v == 1)
            terms.push_back(FnZZ::chi(d));
        else
            terms.push_back(FnZZ::product({FnZZ::constant(v), FnZZ::chi(d)}));
    }
    return FnZZ::sum(std::move(terms));
}

/// sum_{|d| <= W} f(d) chi_d.
inline FnZZ fn_window_normalise(const FnZZ& f, Window w) { return from_indicator_table(indicator_table(f, w)); }

/// The only equality on FnZZ: agreement on the window.
inline bool equal_on_window(const FnZZ& f, const FnZZ& g, Window w) { return indicator_table(f, w) == indicator_table(g, w); }

/// sum c_{ij} chi_i ⊗ chi_j, recorded with the window it was computed on.
struct FnTensor {
    Window window;
    std::map<std::pair<std::int64_t, std::int64_t>, Int> coeffs;

    Int operator()(const Int& a, const Int& b) const
    {
        if (!window.contains(a) || !window.contains(b)) throw WindowExhausted("evaluation outside the window square");
        auto it = coeffs.find({static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)});
        return it == coeffs.end() ? Int(0) : it->second;
    }
};

namespace detail {
template <class Op>
FnTensor fn_coproduct(const FnZZ& f, Window w, Op&& op)
{
    FnTensor t{w, {}};
    for (std::int64_t i = -w.radius; i <= w.radius; ++i)
        for (std::int64_t j = -w.radius; j <= w.radius; ++j) {
            Int v = f(op(Int(i), Int(j)));
            if (v != 0) t.coeffs.emplace(std::make_pair(i, j), std::move(v));
        }
    return t;
}
} // namespace detail

/// Delta+(f)(a, b) = f(a + b) on the window square.
inline FnTensor fn_coadd(const FnZZ& f, Window w)
{
    return detail::fn_coproduct(f, w, [](const Int& a, const Int& b) { return a + b; });
}

/// Delta^x(f)(a, b) = f(a b) on the window square.
inline FnTensor fn_comult(const FnZZ& f, Window w)
{
    return detail::fn_coproduct(f, w, [](const Int& a, const Int& b) { return a * b; });
}

/// Co-zero: f(0).
inline Int fn_cozero(const FnZZ& f) { return f(0); }
/// Co-unit: f(1).
inline Int fn_counit(const FnZZ& f) { return f(1); }

// Complete orthogonal idempotents over a sample commutative ring.

struct IntegerRing {
    using value_type = Int;
    static Int zero() { return 0; }
    static Int one() { return 1; }
    static Int add(const Int& a, const Int& b) { return a + b; }
    static Int mul(const Int& a, const Int& b) { return a * b; }
};

template <int Modulus>
struct ZMod {
    using value_type = int;
    static int zero() { return 0; }
    static int one() { return 1 % Modulus; }
    static int add(int a, int b) { return (a + b) % Modulus; }
    static int mul(int a, int b) { return (a * b) % Modulus; }
};

/// (x_d) with sum x_d = 1, x_d^2 = x_d and x_d x_e = 0 for d != e; zeros implicit.
template <class Ring>
class COIFamily {
public:
    using value_type = typename Ring::value_type;

    explicit COIFamily(std::map<std::int64_t, value_type> comps) : comps_(std::move(comps))
    {
        std::erase_if(comps_, [](const auto& kv) { return kv.second == Ring::zero(); });
        validate();
    }

    static COIFamily delta(std::int64_t d) { return COIFamily({{d, Ring::one()}}); }
    static COIFamily zero() { return delta(0); }
    static COIFamily one() { return delta(1); }

    const std::map<std::int64_t, value_type>& components() const { return comps_; }
    value_type operator[](std::int64_t d) const
    {
        auto it = comps_.find(d);
        return it == comps_.end() ? Ring::zero() : it->second;
    }

    bool operator==(const COIFamily&) const = default;

private:
    void validate() const
    {
        value_type total = Ring::zero();
        for (const auto& [d, x] : comps_) {
            total = Ring::add(total, x);
            if (!(Ring::mul(x, x) == x)) throw InvalidFamily("component " + std::to_string(d) + " is not idempotent");
            for (const auto& [e, y] : comps_)
                if (d < e && !(Ring::mul(x, y) == Ring::zero()))
                    throw InvalidFamily("components " + std::to_string(d) + " and " + std::to_string(e) + " are not orthogonal");
        }
        if (!(total == Ring::one())) throw InvalidFamily("components do not sum to 1");
    }

    std::map<std::int64_t, value_type> comps_;
};

namespace detail {
template <class Ring, class Op>
COIFamily<Ring> coi_convolve(const COIFamily<Ring>& a, const COIFamily<Ring>& b, Op&& op)
{
    std::map<std::int64_t, typename Ring::value_type> out;
    for (const auto& [i, x] : a.components())
        for (const auto& [j, y] : b.components()) {
            auto& slot = out.try_emplace(op(i, j), Ring::zero()).first->second;
            slot = Ring::add(slot, Ring::mul(x, y));
        }
    return COIFamily<Ring>(std::move(out));
}
} // namespace detail

/// pi_l(a + b) = sum_{i+j=l} a_i b_j.
template <class Ring>
COIFamily<Ring> coi_add(const COIFamily<Ring>& a, const COIFamily<Ring>& b)
{
    return detail::coi_convolve(a, b, [](std::int64_t i, std::int64_t j) { return i + j; });
}

/// pi_l(a b) = sum_{ij=l} a_i b_j.
template <class Ring>
COIFamily<Ring> coi_mul(const COIFamily<Ring>& a, const COIFamily<Ring>& b)
{
    return detail::coi_convolve(a, b, [](std::int64_t i, std::int64_t j) { return i * j; });
}

template <class Ring>
COIFamily<Ring> coi_neg(const COIFamily<Ring>& a)
{
    std::map<std::int64_t, typename Ring::value_type> out;
    for (const auto& [i, x] : a.components()) out.emplace(-i, x);
    return COIFamily<Ring>(std::move(out));
}

} // namespace kops
