#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace kops {

/// Arbitrary-precision integer used for every coefficient in the kernel.
using Int = boost::multiprecision::cpp_int;

inline std::string to_string(const Int& v) { return v.str(); }

inline std::int64_t to_i64(const Int& v)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw InvalidArgument("integer " + v.str() + " does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

/// Generalised binomial coefficient n(n-1)...(n-k+1)/k!; the value of
/// lambda^k on the integer n in any lambda-ring.
inline Int lambda_of_integer(const Int& n, int k)
{
    if (k < 0) throw InvalidArgument("lambda_of_integer: k must be nonnegative");
    Int num = 1;
    Int den = 1;
    for (int i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

/// Ordinary binomial for nonnegative arguments.
inline Int binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    return lambda_of_integer(n, k);
}

inline int sign_power(int e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace kops
