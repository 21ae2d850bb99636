#pragma once

// Independent reference computations for the test programs. Nothing here
// calls into symcore: universal polynomials are recovered by evaluating the
// splitting principle on integer line values and solving for coefficients.

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kops/intpoly.hpp"

namespace oracle {

using kops::Family;
using kops::Int;
using kops::IntPoly;
using Rational = boost::multiprecision::cpp_rational;

/// e_0..e_k of the values.
inline std::vector<Int> elementary(const std::vector<Int>& vals, int k)
{
    std::vector<Int> e(k + 1, 0);
    e[0] = 1;
    for (const auto& v : vals)
        for (int i = k; i >= 1; --i) e[i] += e[i - 1] * v;
    return e;
}

/// Products over all j-element subsets.
inline std::vector<Int> subset_products(const std::vector<Int>& vals, int j)
{
    std::vector<Int> out;
    std::vector<int> idx(j);
    for (int i = 0; i < j; ++i) idx[i] = i;
    const int n = static_cast<int>(vals.size());
    if (j > n) return out;
    for (;;) {
        Int p = 1;
        for (int i : idx) p *= vals[i];
        out.push_back(p);
        int pos = j - 1;
        while (pos >= 0 && idx[pos] == n - j + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < j; ++i) idx[i] = idx[i - 1] + 1;
    }
    return out;
}

inline void partitions_into(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_into(n - p, p, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> partitions(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_into(n, n, cur, out);
    return out;
}

inline kops::Monomial monomial_of(const std::vector<int>& parts, Family f)
{
    std::vector<kops::Factor> fs;
    for (int p : parts) fs.push_back({kops::var(f, static_cast<std::uint32_t>(p)), 1});
    return kops::Monomial(fs);
}

inline Int eval_monomial(const std::vector<int>& parts, const std::vector<Int>& e)
{
    Int v = 1;
    for (int p : parts) v *= e.at(p);
    return v;
}

/// Exact solution of an overdetermined but consistent system A c = t.
inline std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> t)
{
    const std::size_t rows = a.size();
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(t[p], t[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c] / a[r][c];
            for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
            t[i] -= f * t[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (pivot_col.size() != cols) throw std::runtime_error("oracle system is underdetermined");
    for (std::size_t i = r; i < rows; ++i)
        if (t[i] != 0) throw std::runtime_error("oracle system is inconsistent");
    std::vector<Rational> c(cols);
    for (std::size_t i = 0; i < r; ++i) c[pivot_col[i]] = t[i] / a[i][pivot_col[i]];
    return c;
}

inline IntPoly to_poly(const std::vector<kops::Monomial>& basis, const std::vector<Rational>& coeffs)
{
    IntPoly out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (denominator(coeffs[i]) != 1) throw std::runtime_error("non-integral coefficient");
        out.add_term(basis[i], numerator(coeffs[i]));
    }
    return out;
}

inline std::vector<Int> random_values(std::mt19937_64& rng, int n, int lo = -4, int hi = 4)
{
    std::uniform_int_distribution<int> d(lo, hi);
    std::vector<Int> v;
    for (int i = 0; i < n; ++i) v.push_back(d(rng));
    return v;
}

/// lambda^k of a product of two sums of k lines, fitted in the x_i, y_j.
inline IntPoly fit_pk(int k, std::uint64_t seed = 11)
{
    std::mt19937_64 rng(seed);
    const auto parts = partitions(k);
    std::vector<kops::Monomial> basis;
    for (const auto& px : parts)
        for (const auto& py : parts) basis.push_back(monomial_of(px, Family::x) * monomial_of(py, Family::y));
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> targets;
    for (std::size_t s = 0; s < 3 * basis.size() + 10; ++s) {
        const auto a = random_values(rng, k);
        const auto b = random_values(rng, k);
        const auto ea = elementary(a, k);
        const auto eb = elementary(b, k);
        std::vector<Int> prods;
        for (const auto& u : a)
            for (const auto& v : b) prods.push_back(u * v);
        std::vector<Rational> row;
        for (const auto& px : parts)
            for (const auto& py : parts) row.emplace_back(eval_monomial(px, ea) * eval_monomial(py, eb));
        rows.push_back(row);
        targets.emplace_back(elementary(prods, k)[k]);
    }
    return to_poly(basis, solve(rows, targets));
}

/// lambda^i(lambda^j) of a sum of ij lines, fitted in lambda_1..lambda_{ij}.
inline IntPoly fit_pij(int i, int j, std::uint64_t seed = 13)
{
    std::mt19937_64 rng(seed);
    const int n = i * j;
    const auto parts = partitions(n);
    std::vector<kops::Monomial> basis;
    for (const auto& p : parts) basis.push_back(monomial_of(p, Family::lambda));
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> targets;
    for (std::size_t s = 0; s < 3 * basis.size() + 10; ++s) {
        const auto a = random_values(rng, n, -3, 3);
        const auto ea = elementary(a, n);
        std::vector<Rational> row;
        for (const auto& p : parts) row.emplace_back(eval_monomial(p, ea));
        rows.push_back(row);
        targets.emplace_back(elementary(subset_products(a, j), i)[i]);
    }
    return to_poly(basis, solve(rows, targets));
}

/// Terms with exactly one x factor.
inline IntPoly x_linear(const IntPoly& p)
{
    return p.filter([](const kops::Monomial& m) { return m.degree_if([](kops::Var v) { return v.family == Family::x; }) == 1; });
}

/// Value of a polynomial at integer points; `value(var)` supplies each variable.
template <class Value>
Int evaluate_numeric(const IntPoly& p, Value&& value)
{
    Int total = 0;
    for (const auto& [m, c] : p.terms()) {
        Int t = c;
        for (const auto& f : m.factors()) t *= boost::multiprecision::pow(Int(value(f.var)), f.exp);
        total += t;
    }
    return total;
}

} // namespace oracle
