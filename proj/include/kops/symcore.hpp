#pragma once

// Symmetric-function engine. A symmetric polynomial is carried by its
// dominant terms (exponent vectors that are nonincreasing, i.e. partitions);
// the elementary basis is recovered by leading-monomial subtraction, where
// the coefficient of x^alpha in e_mu is a count of 0-1 matrices with margins
// (mu, alpha).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"
#include "intpoly.hpp"

namespace kops {

/// Nonincreasing list of positive parts.
using Partition = std::vector<int>;

namespace detail {

inline Partition conjugate(const Partition& p)
{
    Partition c;
    if (p.empty()) return c;
    for (int j = 1; j <= p.front(); ++j) {
        int count = 0;
        for (int part : p)
            if (part >= j) ++count;
        c.push_back(count);
    }
    return c;
}

inline void partitions_rec(int n, int max_part, int max_len, Partition& cur, std::vector<Partition>& out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    if (max_len == 0) return;
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, max_len - 1, cur, out);
        cur.pop_back();
    }
}

/// Partitions of n with at most `max_len` parts, each at most `max_part`.
inline const std::vector<Partition>& partitions(int n, int max_len, int max_part)
{
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::vector<Partition>> cache;
    std::lock_guard lock(mu);
    auto key = std::make_tuple(n, max_len, max_part);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Partition> out;
    Partition cur;
    partitions_rec(n, std::min(n, max_part), max_len, cur, out);
    return cache.emplace(key, std::move(out)).first->second;
}

inline bool is_partition(const std::vector<int>& v)
{
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[i - 1]) return false;
    return true;
}

inline Partition strip_zeros(std::vector<int> v)
{
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

/// Number of 0-1 matrices with the given row and column sums.
inline Int zero_one_count(const Partition& rows, const Partition& cols)
{
    if (std::accumulate(rows.begin(), rows.end(), 0) != std::accumulate(cols.begin(), cols.end(), 0)) return 0;

    static std::mutex mu;
    static std::map<std::pair<Partition, Partition>, Int> global;
    {
        std::lock_guard lock(mu);
        auto it = global.find({rows, cols});
        if (it != global.end()) return it->second;
    }

    std::map<std::pair<std::size_t, std::vector<int>>, Int> memo;
    std::function<Int(std::size_t, std::vector<int>)> rec = [&](std::size_t i, std::vector<int> rem) -> Int {
        std::sort(rem.begin(), rem.end(), std::greater<>());
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (i == rows.size()) return rem.empty() ? 1 : 0;
        auto key = std::make_pair(i, rem);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        // Group equal remaining column sums and choose how many of each get a one.
        std::vector<std::pair<int, int>> groups; // (value, multiplicity)
        for (int v : rem) {
            if (!groups.empty() && groups.back().first == v)
                ++groups.back().second;
            else
                groups.emplace_back(v, 1);
        }
        Int total = 0;
        std::vector<int> take(groups.size(), 0);
        std::function<void(std::size_t, int, Int)> choose = [&](std::size_t g, int need, Int ways) {
            if (g == groups.size()) {
                if (need != 0) return;
                std::vector<int> next;
                for (std::size_t h = 0; h < groups.size(); ++h) {
                    for (int t = 0; t < groups[h].second; ++t)
                        next.push_back(groups[h].first - (t < take[h] ? 1 : 0));
                }
                total += ways * rec(i + 1, std::move(next));
                return;
            }
            for (int t = 0; t <= std::min(need, groups[g].second); ++t) {
                take[g] = t;
                choose(g + 1, need - t, ways * binomial(groups[g].second, t));
            }
            take[g] = 0;
        };
        choose(0, rows[i], 1);
        memo.emplace(std::move(key), total);
        return total;
    };
    Int result = rec(0, std::vector<int>(cols.begin(), cols.end()));
    std::lock_guard lock(mu);
    global.emplace(std::make_pair(rows, cols), result);
    return result;
}

/// Number of sets of `count` distinct `width`-subsets of an m-element set in
/// which element r is used exactly mult[r] times (mult has length m).
inline Int distinct_subset_count(int count, int width, const std::vector<int>& mult)
{
    // Rows identical on the processed columns form a class (remaining, size);
    // rows are unordered, so splitting a class has a single outcome per size.
    using State = std::vector<std::pair<int, int>>;
    std::map<std::pair<std::size_t, State>, Int> memo;
    const std::size_t m = mult.size();
    std::function<Int(std::size_t, State)> rec = [&](std::size_t col, State st) -> Int {
        std::sort(st.begin(), st.end());
        if (col == m) {
            for (auto [rem, size] : st)
                if (rem != 0 || size != 1) return 0;
            return 1;
        }
        for (auto [rem, size] : st)
            if (rem > static_cast<int>(m - col)) return 0;
        auto key = std::make_pair(col, st);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Int total = 0;
        State next;
        std::function<void(std::size_t, int)> split = [&](std::size_t c, int need) {
            if (c == st.size()) {
                if (need == 0) total += rec(col + 1, next);
                return;
            }
            auto [rem, size] = st[c];
            int hi = rem > 0 ? std::min(need, size) : 0;
            for (int t = 0; t <= hi; ++t) {
                std::size_t mark = next.size();
                if (t > 0) next.emplace_back(rem - 1, t);
                if (size - t > 0) next.emplace_back(rem, size - t);
                split(c + 1, need - t);
                next.resize(mark);
            }
        };
        split(0, mult[col]);
        memo.emplace(std::move(key), total);
        return total;
    };
    return rec(0, State{{width, count}});
}

/// Dominant-term representation over several alphabets.
using MultiKey = std::vector<Partition>;
using DominantForm = std::map<MultiKey, Int>;

/// Leading-monomial subtraction in the elementary basis. `sizes[t]` is the
/// number of variables of alphabet t and `out[t]` the family receiving e_i.
inline IntPoly expand_dominant(DominantForm form, const std::vector<int>& sizes, const std::vector<Family>& out)
{
    IntPoly result;
    while (!form.empty()) {
        auto lead = std::prev(form.end());
        const MultiKey key = lead->first;
        const Int c = lead->second;

        std::vector<Partition> conj(key.size());
        std::vector<Factor> factors;
        for (std::size_t t = 0; t < key.size(); ++t) {
            conj[t] = conjugate(key[t]);
            for (int q : conj[t]) factors.push_back(Factor{var(out[t], static_cast<std::uint32_t>(q)), 1});
        }
        result.add_term(Monomial(std::move(factors)), c);

        // Subtract c * prod_t e_{conj[t]} over all dominant keys of the same multidegree.
        std::vector<const std::vector<Partition>*> choices(key.size());
        for (std::size_t t = 0; t < key.size(); ++t) {
            int n = std::accumulate(key[t].begin(), key[t].end(), 0);
            choices[t] = &partitions(n, sizes[t], n);
        }
        MultiKey probe(key.size());
        std::function<void(std::size_t, Int)> walk = [&](std::size_t t, Int coef) {
            if (coef == 0) return;
            if (t == key.size()) {
                auto it = form.find(probe);
                Int delta = -c * coef;
                if (it == form.end()) {
                    form.emplace(probe, delta);
                } else {
                    it->second += delta;
                    if (it->second == 0) form.erase(it);
                }
                return;
            }
            for (const auto& alpha : *choices[t]) {
                probe[t] = alpha;
                walk(t + 1, coef * zero_one_count(conj[t], alpha));
            }
        };
        walk(0, 1);
        if (form.count(key) != 0) throw NonSymmetricInput("leading term did not cancel");
    }
    return result;
}

template <class T>
class MemoTable {
public:
    template <class Key, class Make>
    const T& get(const Key& key, Make&& make)
    {
        {
            std::lock_guard lock(mu_);
            if (auto it = table_.find(key); it != table_.end()) return it->second;
        }
        T value = make();
        std::lock_guard lock(mu_);
        return table_.try_emplace(key, std::move(value)).first->second;
    }

private:
    std::mutex mu_;
    std::map<std::vector<int>, T> table_;
};

} // namespace detail

/// Rewrite a symmetric polynomial in x_1..x_m in the elementary basis e_1..e_m.
inline IntPoly elementary_expand(const IntPoly& p, int m)
{
    if (m < 1) throw InvalidArgument("elementary_expand: need at least one variable");
    if (!p.all_vars([&](Var v) { return v.slot == 0 && v.family == Family::x && v.index >= 1 && static_cast<int>(v.index) <= m; }))
        throw InvalidArgument("elementary_expand: input must be a polynomial in x_1..x_" + std::to_string(m));
    for (int i = 1; i < m; ++i) {
        auto swapped = substitute(p, [&](Var v) {
            if (v.index == static_cast<std::uint32_t>(i)) return IntPoly::variable(var(Family::x, i + 1));
            if (v.index == static_cast<std::uint32_t>(i + 1)) return IntPoly::variable(var(Family::x, i));
            return IntPoly::variable(v);
        });
        if (swapped != p)
            throw NonSymmetricInput("transposition (x" + std::to_string(i) + " x" + std::to_string(i + 1) + ") changes the input");
    }
    detail::DominantForm form;
    for (const auto& [mono, c] : p.terms()) {
        std::vector<int> ex(m, 0);
        for (const auto& f : mono.factors()) ex[f.var.index - 1] = static_cast<int>(f.exp);
        if (detail::is_partition(ex)) form.emplace(detail::MultiKey{detail::strip_zeros(ex)}, c);
    }
    return detail::expand_dominant(std::move(form), {m}, {Family::e});
}

/// P_k in x_1..x_k (lambda of the first factor) and y_1..y_k (second factor):
/// lambda^k(xy) expressed through lambda^i(x), lambda^j(y).
inline const IntPoly& universal_pk(int k)
{
    if (k < 1) throw InvalidArgument("universal_pk: k must be positive");
    static detail::MemoTable<IntPoly> memo;
    return memo.get(std::vector<int>{k}, [k] {
        // Coefficient of a^alpha b^beta in e_k(a_r b_s) counts k x k 0-1
        // matrices with row sums alpha and column sums beta.
        detail::DominantForm form;
        for (const auto& alpha : detail::partitions(k, k, k))
            for (const auto& beta : detail::partitions(k, k, k)) {
                Int c = detail::zero_one_count(alpha, beta);
                if (c != 0) form.emplace(detail::MultiKey{alpha, beta}, c);
            }
        return detail::expand_dominant(std::move(form), {k, k}, {Family::x, Family::y});
    });
}

/// P_{i,j} reduced modulo lambda_m for m > vars: computed with `vars` line
/// variables, exact when vars >= i*j.
inline const IntPoly& universal_pij_truncated(int i, int j, int vars)
{
    if (i < 1 || j < 1) throw InvalidArgument("universal_pij: indices must be positive");
    const int m = std::min(i * j, vars);
    static detail::MemoTable<IntPoly> memo;
    return memo.get(std::vector<int>{i, j, m}, [i, j, m] {
        detail::DominantForm form;
        if (j <= m) {
            for (const auto& alpha : detail::partitions(i * j, m, i)) {
                std::vector<int> mult(alpha.begin(), alpha.end());
                mult.resize(m, 0);
                Int c = detail::distinct_subset_count(i, j, mult);
                if (c != 0) form.emplace(detail::MultiKey{alpha}, c);
            }
        }
        return detail::expand_dominant(std::move(form), {m}, {Family::lambda});
    });
}

/// P_{i,j} in lambda_1..lambda_{ij}: lambda^i(lambda^j(x)) through lambda^m(x).
inline const IntPoly& universal_pij(int i, int j) { return universal_pij_truncated(i, j, i * j); }

/// Sum of the monomials of total degree one in the x family.
inline IntPoly left_linearise(const IntPoly& p)
{
    return p.filter([](const Monomial& m) { return m.degree_if([](Var v) { return v.family == Family::x; }) == 1; });
}

/// k-th power sum in the elementary symmetric polynomials lambda_1..lambda_k
/// (Newton's identities).
inline const IntPoly& newton_psi(int k)
{
    if (k < 1) throw InvalidArgument("newton_psi: k must be positive");
    static detail::MemoTable<IntPoly> memo;
    return memo.get(std::vector<int>{k}, [k] {
        auto lam = [](int i) { return IntPoly::variable(var(Family::lambda, i)); };
        IntPoly p = Int(sign_power(k - 1) * k) * lam(k);
        for (int i = 1; i < k; ++i) p += Int(sign_power(i - 1)) * lam(i) * newton_psi(k - i);
        return p;
    });
}

} // namespace kops
