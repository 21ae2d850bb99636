#pragma once

// Even operations Set(Z, Z) ⊗̂ K(BU): finite sums of f ⊗ x, acting on an
// augmented lambda-ring element a by f(eps(a)) * x(a - eps(a)).

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "errors.hpp"
#include "integer.hpp"
#include "intpoly.hpp"
#include "kbu.hpp"
#include "models.hpp"
#include "setzz.hpp"
#include "symcore.hpp"

namespace kops {

class EvenOp {
public:
    using Summand = std::pair<FnZZ, KBUElem>;
    /// d -> x_d with r = sum chi_d ⊗ x_d on the window.
    using Table = std::map<std::int64_t, IntPoly>;

    EvenOp(int trunc, Window window, std::vector<Summand> summands = {})
        : trunc_(trunc), window_(window), summands_(std::move(summands))
    {
        if (trunc_ < 1) throw InvalidArgument("truncation level must be positive");
        for (const auto& [f, x] : summands_)
            if (x.trunc() != trunc_) throw TruncationMismatch("summand level differs from the operation level");
    }

    static EvenOp tensor(const FnZZ& f, const KBUElem& x, Window window) { return EvenOp(x.trunc(), window, {{f, x}}); }

    static EvenOp from_table(const Table& t, int trunc, Window window)
    {
        std::vector<Summand> out;
        for (const auto& [d, p] : t)
            if (!p.is_zero()) out.emplace_back(FnZZ::chi(d), KBUElem(p, trunc));
        return EvenOp(trunc, window, std::move(out));
    }

    const std::vector<Summand>& summands() const { return summands_; }
    int trunc() const { return trunc_; }
    Window window() const { return window_; }

    Table table() const
    {
        Table t;
        for (const auto& [f, x] : summands_)
            for (const auto& [d, v] : indicator_table(f, window_)) {
                auto& slot = t[d];
                slot += x.poly() * v;
                if (slot.is_zero()) t.erase(d);
            }
        return t;
    }

    /// Summands chi_d ⊗ x_d, sorted by d, x_d != 0.
    EvenOp normal_form() const { return from_table(table(), trunc_, window_); }

    /// Every left factor is chi_d or c * chi_d with d inside the window.
    bool is_indicator_form() const
    {
        auto point = [&](const FnZZ& f) { return f.kind() == FnZZ::Kind::indicator && window_.contains(f.value()); };
        for (const auto& [f, x] : summands_) {
            if (point(f)) continue;
            const auto& ch = f.children();
            if (f.kind() == FnZZ::Kind::product && ch.size() == 2 && ch[0].kind() == FnZZ::Kind::constant && point(ch[1])) continue;
            return false;
        }
        return true;
    }

    std::uint32_t max_lambda() const
    {
        std::uint32_t k = 0;
        for (const auto& [f, x] : summands_) k = std::max(k, x.poly().max_index(Family::lambda));
        return k;
    }

    EvenOp& operator+=(const EvenOp& o)
    {
        check(o);
        summands_.insert(summands_.end(), o.summands_.begin(), o.summands_.end());
        return *this;
    }
    friend EvenOp operator+(EvenOp a, const EvenOp& b) { return a += b; }
    friend EvenOp operator*(const Int& c, const EvenOp& a)
    {
        std::vector<Summand> out;
        for (const auto& [f, x] : a.summands_) out.emplace_back(f, c * x);
        return EvenOp(a.trunc_, a.window_, std::move(out));
    }
    friend EvenOp operator-(const EvenOp& a, const EvenOp& b) { return a + Int(-1) * b; }

    /// (f ⊗ x)(g ⊗ y) = fg ⊗ xy.
    friend EvenOp operator*(const EvenOp& a, const EvenOp& b)
    {
        a.check(b);
        std::vector<Summand> out;
        for (const auto& [f, x] : a.summands_)
            for (const auto& [g, y] : b.summands_) out.emplace_back(FnZZ::product({f, g}), x * y);
        return EvenOp(a.trunc_, a.window_, std::move(out));
    }

    /// Equality of the functions the two sums define on the window.
    bool operator==(const EvenOp& o) const { return trunc_ == o.trunc_ && window_ == o.window_ && table() == o.table(); }

    void check(const EvenOp& o) const
    {
        if (trunc_ != o.trunc_) throw TruncationMismatch("levels " + std::to_string(trunc_) + " and " + std::to_string(o.trunc_));
        if (!(window_ == o.window_)) throw InvalidArgument("operations use different windows");
    }

private:
    int trunc_;
    Window window_;
    std::vector<Summand> summands_;
};

/// 1 ⊗ lambda^1 iota + iota ⊗ 1.
inline EvenOp identity_op(int trunc, Window window)
{
    return EvenOp(trunc, window, {{FnZZ::constant(1), KBUElem::generator(1, trunc)}, {FnZZ::identity(), KBUElem::one(trunc)}});
}

/// "c*chi(d)⊗monomial" terms of the normal form; "c*1⊗monomial" when the
/// right factor is the same at every window point.
namespace detail {
inline bool uniform_on_window(const EvenOp::Table& t, Window w)
{
    return t.size() == static_cast<std::size_t>(2 * w.radius + 1) &&
           std::all_of(t.begin(), t.end(), [&](const auto& kv) { return kv.second == t.begin()->second; });
}
} // namespace detail

inline std::string to_text(const EvenOp& r)
{
    const EvenOp::Table t = r.table();
    const bool uniform = detail::uniform_on_window(t, r.window());
    std::string s;
    auto emit = [&](const std::string& left, const IntPoly& p) {
        for (const auto& [m, c] : p.terms()) {
            Int mag = c < 0 ? Int(-c) : c;
            s += s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
            if (mag != 1) s += mag.str() + "*";
            s += left + "⊗" + monomial_text(m);
        }
    };
    if (uniform)
        emit("1", t.begin()->second);
    else
        for (const auto& [d, p] : t) emit(FnZZ::chi(d).to_string(), p);
    return s.empty() ? "0" : s;
}

inline nlohmann::json to_json(const EvenOp& r)
{
    const EvenOp::Table t = r.table();
    nlohmann::json summands = nlohmann::json::array();
    if (detail::uniform_on_window(t, r.window()))
        summands.push_back({{"fn", FnZZ::constant(1).to_string()}, {"kbu", to_json(t.begin()->second)}});
    else
        for (const auto& [d, p] : t) summands.push_back({{"fn", FnZZ::chi(d).to_string()}, {"kbu", to_json(p)}});
    return {{"trunc", r.trunc()}, {"window", r.window().radius}, {"summands", summands}};
}

/// eps+(f ⊗ x) = f(0) * eps+(x).
inline Int op_cozero(const EvenOp& r)
{
    Int s = 0;
    for (const auto& [f, x] : r.summands()) s += f(0) * cozero(x);
    return s;
}

/// eps^x(f ⊗ x) = f(1) * eps+(x).
inline Int op_counit(const EvenOp& r)
{
    Int s = 0;
    for (const auto& [f, x] : r.summands()) s += f(1) * cozero(x);
    return s;
}

/// sum chi_i ⊗ chi_j ⊗ p_ij with p_ij in K(BU) ⊗ K(BU) (slots 0, 1); read as
/// a sum of r' ⊗ r'' with r' = chi_i ⊗ (slot 0 part), r'' = chi_j ⊗ (slot 1 part).
struct EvenOpTensor {
    int trunc = 1;
    Window window;
    std::map<std::pair<std::int64_t, std::int64_t>, IntPoly> coeffs;

    void add(std::int64_t i, std::int64_t j, const IntPoly& p)
    {
        auto& slot = coeffs[{i, j}];
        slot += p;
        if (slot.is_zero()) coeffs.erase({i, j});
    }

    bool operator==(const EvenOpTensor&) const = default;
};

inline std::string to_text(const EvenOpTensor& t)
{
    std::string s;
    for (const auto& [ij, p] : t.coeffs) {
        if (!s.empty()) s += " + ";
        s += FnZZ::chi(ij.first).to_string() + "⊗" + FnZZ::chi(ij.second).to_string() + "⊗(" + to_text(TensorKBU(p, t.trunc, 2)) + ")";
    }
    return s.empty() ? "0" : s;
}

/// Delta+: fn_coadd on the left factor, coadd on the right, shuffled.
inline EvenOpTensor op_coadd(const EvenOp& r)
{
    EvenOpTensor out{r.trunc(), r.window(), {}};
    for (const auto& [f, x] : r.summands()) {
        const IntPoly kx = coadd(x).poly();
        for (const auto& [ij, c] : fn_coadd(f, r.window()).coeffs) out.add(ij.first, ij.second, kx * c);
    }
    return out;
}

namespace detail {

/// gamma(kappa)(lambda^k iota) placed in `slot`.
inline IntPoly gamma_generator(const Int& kappa, int k, std::uint8_t slot)
{
    return substitute(universal_pk(k), [&](Var v) {
        if (v.family == Family::x) return IntPoly(lambda_of_integer(kappa, static_cast<int>(v.index)));
        return lam(v.index, slot);
    });
}

/// lambda^k iota -> sum_{a+b+c=k} lambda^a ⊗ lambda^b ⊗ lambda^c in slots 0, 1, 2.
inline IntPoly coadd3_generator(int k)
{
    IntPoly out;
    for (int a = 0; a <= k; ++a)
        for (int b = 0; a + b <= k; ++b) out += lam(a, 0) * lam(b, 1) * lam(k - a - b, 2);
    return out;
}

} // namespace detail

/// Delta^x(f ⊗ b) = sum_{r,s} f(rs) chi_r ⊗ b(1)[1] gamma(s)(b(2)) ⊗ chi_s ⊗ b(1)[2] gamma(r)(b(3)),
/// over the window square.
inline EvenOpTensor op_comult(const EvenOp& r)
{
    const Window w = r.window();
    EvenOpTensor out{r.trunc(), w, {}};
    for (const auto& [f, b] : r.summands()) {
        const int kmax = static_cast<int>(b.poly().max_index(Family::lambda));
        // Slots 3 and 4 collect the left and right tensor factors.
        IntPoly t = map_slot(b.poly(), 0, [](int k) { return detail::coadd3_generator(k); });
        t = map_slot(t, 0, [](int k) { return comult_generator(k, 3, 4); });
        std::map<std::int64_t, std::vector<IntPoly>> gamma_right;
        for (std::int64_t rr = -w.radius; rr <= w.radius; ++rr) {
            auto& g = gamma_right[rr];
            for (int k = 0; k <= kmax; ++k) g.push_back(k == 0 ? IntPoly(1) : detail::gamma_generator(rr, k, 4));
        }
        for (std::int64_t ss = -w.radius; ss <= w.radius; ++ss) {
            IntPoly ts = map_slot(t, 1, [&](int k) { return detail::gamma_generator(ss, k, 3); });
            for (std::int64_t rr = -w.radius; rr <= w.radius; ++rr) {
                Int c = f(Int(rr) * ss);
                if (c == 0) continue;
                IntPoly p = map_slot(ts, 2, [&](int k) { return gamma_right[rr][k]; });
                out.add(rr, ss, relabel_slots(p, {0, 1, 2, 0, 1}) * c);
            }
        }
    }
    return out;
}

namespace detail {

struct ModelPoint {
    Int eps;
    std::vector<IntPoly> series;
};

/// eps(a) and the lambda-series of a - eps(a) up to k_max.
inline ModelPoint model_point(const LambdaRingModel& model, const IntPoly& a, Window w, int k_max)
{
    ModelPoint pt;
    pt.eps = model.augmentation(a);
    if (!w.contains(pt.eps)) throw WindowExhausted("augmentation " + pt.eps.str() + " lies outside the window");
    pt.series = model.lambda_series(model.reduce(a - model.reduce(IntPoly(pt.eps))), k_max);
    return pt;
}

} // namespace detail

/// sum_i f_i(eps(a)) * x_i evaluated at a - eps(a).
inline IntPoly act(const EvenOp& r, const LambdaRingModel& model, const IntPoly& a)
{
    const auto pt = detail::model_point(model, a, r.window(), static_cast<int>(r.max_lambda()));
    const ModelRing ring{&model};
    IntPoly out;
    for (const auto& [f, x] : r.summands()) {
        Int c = f(pt.eps);
        if (c == 0) continue;
        out += evaluate(x.poly(), [&](Var v) { return pt.series.at(v.index); }, ring) * c;
    }
    return model.reduce(out);
}

/// Action of a two-fold tensor on a pair: sum r'(a) r''(b).
inline IntPoly act_pair(const EvenOpTensor& t, const LambdaRingModel& model, const IntPoly& a, const IntPoly& b)
{
    std::uint32_t k = 0;
    for (const auto& [ij, p] : t.coeffs) k = std::max(k, p.max_index(Family::lambda));
    const auto pa = detail::model_point(model, a, t.window, static_cast<int>(k));
    const auto pb = detail::model_point(model, b, t.window, static_cast<int>(k));
    auto it = t.coeffs.find({static_cast<std::int64_t>(pa.eps), static_cast<std::int64_t>(pb.eps)});
    if (it == t.coeffs.end()) return IntPoly{};
    const ModelRing ring{&model};
    return model.reduce(evaluate(it->second, [&](Var v) { return (v.slot == 0 ? pa.series : pb.series).at(v.index); }, ring));
}

/// Pairs (r, s) with rs = d inside the window, negative divisors included.
inline std::vector<std::pair<std::int64_t, std::int64_t>> divisor_pairs(std::int64_t d, Window w)
{
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    if (d == 0) {
        for (std::int64_t s = -w.radius; s <= w.radius; ++s) out.emplace_back(0, s);
        for (std::int64_t r = -w.radius; r <= w.radius; ++r)
            if (r != 0) out.emplace_back(r, 0);
        return out;
    }
    const std::int64_t m = d < 0 ? -d : d;
    for (std::int64_t r = 1; r <= m; ++r) {
        if (m % r != 0) continue;
        if (r > w.radius || m / r > w.radius) throw WindowExhausted("divisor pair of " + std::to_string(d) + " leaves the window");
        out.emplace_back(r, d / r);
        out.emplace_back(-r, -d / r);
    }
    return out;
}

namespace detail {

/// x∘y0 for reduced y0, given the lambda-series of y0.
inline IntPoly compose_with_series(const IntPoly& x, const LambdaSeries& series)
{
    return map_slot(x, 0, [&](int k) { return series.at(k); });
}

/// (sum chi_d ⊗ x_d)∘(g ⊗ y) by the divisor-pair formula.
inline EvenOp::Table compose_single(const EvenOp::Table& r, const FnZZ& g, const KBUElem& y, int trunc, Window w)
{
    const Int c = cozero(y);
    if (!w.contains(c)) throw WindowExhausted("right operand has constant term " + c.str());
    for (std::int64_t n = -w.radius; n <= w.radius; ++n) {
        Int e = g(n) * c;
        if (!w.contains(e)) throw WindowExhausted("right operand has augmentation " + e.str() + " on the window");
    }
    const LambdaSeries series = lambda_series(y - KBUElem::constant(c, trunc), trunc);
    EvenOp::Table out;
    for (const auto& [d, x] : r) {
        if (d == 0 && c == 0)
            for (std::int64_t n = -w.radius; n <= w.radius; ++n)
                if (!w.contains(g(n))) throw WindowExhausted("divisor " + g(n).str() + " of 0 leaves the window");
        for (auto [rr, ss] : divisor_pairs(d, w)) {
            if (rr != c) continue;
            const FnZZ left = fn_compose(FnZZ::chi(ss), g);
            const IntPoly right = compose_with_series(colinear(ss, KBUElem(x, trunc)).poly(), series);
            if (right.is_zero()) continue;
            for (const auto& [n, v] : indicator_table(left, w)) {
                auto& slot = out[n];
                slot += right * v;
                if (slot.is_zero()) out.erase(n);
            }
        }
    }
    return out;
}

/// Pointwise in eps: (r∘s)_n = x_{c_n}∘(y_n - c_n) with c_n = eps+(y_n).
inline EvenOp::Table compose_local(const EvenOp::Table& r, const EvenOp::Table& s, int trunc, Window w)
{
    EvenOp::Table out;
    for (std::int64_t n = -w.radius; n <= w.radius; ++n) {
        auto sit = s.find(n);
        const IntPoly yn = sit == s.end() ? IntPoly{} : sit->second;
        const Int c = yn.constant_term();
        if (!w.contains(c)) throw WindowExhausted("right operand has augmentation " + c.str() + " at " + std::to_string(n));
        auto rit = r.find(static_cast<std::int64_t>(c));
        if (rit == r.end()) continue;
        IntPoly p = compose_kbu(KBUElem(rit->second, trunc), KBUElem(yn - IntPoly(c), trunc)).poly();
        if (!p.is_zero()) out.emplace(n, std::move(p));
    }
    return out;
}

} // namespace detail

/// r∘s for r in indicator form. A single summand g ⊗ y on the right uses the
/// divisor-pair formula; longer sums are split over the indicators of s.
inline EvenOp compose_even(const EvenOp& r, const EvenOp& s)
{
    r.check(s);
    if (!r.is_indicator_form()) throw NotNormalised("left operand must be a sum of indicator tensors");
    const EvenOp::Table rt = r.table();
    if (s.summands().size() == 1) {
        const auto& [g, y] = s.summands().front();
        return EvenOp::from_table(detail::compose_single(rt, g, y, r.trunc(), r.window()), r.trunc(), r.window());
    }
    return EvenOp::from_table(detail::compose_local(rt, s.table(), r.trunc(), r.window()), r.trunc(), r.window());
}

/// compose_even after normalising the left operand.
inline EvenOp compose(const EvenOp& r, const EvenOp& s) { return compose_even(r.normal_form(), s); }

} // namespace kops
