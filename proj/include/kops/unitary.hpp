#pragma once

// Finite-rank models: K*(U(n)) as an exterior algebra on mu^1..mu^n and
// K(BU(n)) as a polynomial ring on beta^1..beta^n, with the restriction maps
// along U(n-1) -> U(n).

#include <cstdint>
#include <string>

#include "errors.hpp"
#include "exterior.hpp"
#include "integer.hpp"
#include "intpoly.hpp"

namespace kops {

struct UnModelElem {
    int rank = 1;
    Exterior ext;

    static UnModelElem mu(int n, int k)
    {
        if (n < 0) throw IndexOutOfRange("negative rank");
        if (k < 1) throw IndexOutOfRange("mu^k needs k >= 1");
        return {n, k > n ? Exterior{} : Exterior::generator(static_cast<std::uint32_t>(k))};
    }

    bool operator==(const UnModelElem&) const = default;
    std::string to_text() const { return ext.to_text("M"); }
};

/// i^*: mu^k_n -> mu^k_{n-1} + mu^{k-1}_{n-1}, where mu^0 = 0 and mu^k = 0
/// above the rank. Rank 0 is Z.
inline UnModelElem un_restrict(const UnModelElem& x)
{
    if (x.rank < 1) throw RankUnderflow("cannot restrict below rank 0");
    const int n = x.rank - 1;
    auto image = [&](std::uint32_t k) {
        Exterior out = UnModelElem::mu(n, static_cast<int>(k)).ext;
        if (k >= 2) out += UnModelElem::mu(n, static_cast<int>(k) - 1).ext;
        return out;
    };
    return {n, x.ext.map(image)};
}

/// sum_{i=0}^{k-1} C(-n, i) mu^{k-i}_n for any k >= 1.
inline UnModelElem lk_formula(int n, int k)
{
    if (n < 0 || k < 1) throw IndexOutOfRange("l^k_n needs n >= 0 and k >= 1");
    UnModelElem out{n, {}};
    for (int i = 0; i <= k - 1; ++i) out.ext += lambda_of_integer(-n, i) * UnModelElem::mu(n, k - i).ext;
    return out;
}

/// l^k_n for 1 <= k <= n.
inline UnModelElem lk_from_mu(int n, int k)
{
    if (k < 1 || k > n) throw IndexOutOfRange("l^" + std::to_string(k) + "_" + std::to_string(n) + " needs 1 <= k <= n");
    return lk_formula(n, k);
}

struct BUnModelElem {
    int rank = 1;
    IntPoly poly;

    /// beta^0 = 1; zero above the rank.
    static BUnModelElem beta(int n, int k)
    {
        if (n < 0 || k < 0) throw IndexOutOfRange("beta^k_n needs n, k >= 0");
        if (k == 0) return {n, IntPoly(1)};
        if (k > n) return {n, IntPoly{}};
        return {n, IntPoly::variable(var(Family::beta, static_cast<std::uint32_t>(k)))};
    }

    bool operator==(const BUnModelElem&) const = default;
    std::string to_text() const { return kops::to_text(poly); }
};

/// j^*: beta^k_{n+1} -> beta^k_n + beta^{k-1}_n.
inline BUnModelElem bun_restrict(const BUnModelElem& x)
{
    if (x.rank < 1) throw RankUnderflow("cannot restrict below rank 0");
    const int n = x.rank - 1;
    if (!x.poly.all_vars([&](Var v) { return v.family == Family::beta && static_cast<int>(v.index) <= x.rank; }))
        throw IndexOutOfRange("element uses beta classes above its rank");
    return {n, substitute(x.poly, [&](Var v) {
                const int k = static_cast<int>(v.index);
                return BUnModelElem::beta(n, k).poly + BUnModelElem::beta(n, k - 1).poly;
            })};
}

/// lambda^k_n = sum_{i=0}^{k} C(-n, i) beta^{k-i}_n, 0 <= k <= n.
inline BUnModelElem lambdak_from_beta(int n, int k)
{
    if (k < 0 || k > n) throw IndexOutOfRange("lambda^" + std::to_string(k) + "_" + std::to_string(n) + " needs 0 <= k <= n");
    BUnModelElem out{n, {}};
    for (int i = 0; i <= k; ++i) out.poly += BUnModelElem::beta(n, k - i).poly * lambda_of_integer(-n, i);
    return out;
}

} // namespace kops
