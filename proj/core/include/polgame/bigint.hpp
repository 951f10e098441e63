#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace polgame {

/// Strategy counts and size bounds grow super-exponentially under the
/// connectives, so everything combinatorial is computed in exact
/// arbitrary-precision integers. No floating point is used anywhere in the
/// counting layers.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_factorial(std::uint64_t n) {
    BigInt r = 1;
    for (std::uint64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt big_pow(const BigInt& base, std::uint64_t e) {
    BigInt r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

/// Exact binomial coefficient C(n, k).
inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

} // namespace polgame
