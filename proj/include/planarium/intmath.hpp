#pragma once

// Exact integer helpers shared by the polynomial and classification code.
// Binomial coefficients are kept in arbitrary precision: C(k-i, i) outgrows
// 64 bits once k approaches 90, and the scan ceiling is configurable.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <optional>

#include "planarium/errors.hpp"

namespace planarium {

using BigInt = boost::multiprecision::cpp_int;

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t f = 3; f * f <= n; f += 2)
        if (n % f == 0) return false;
    return true;
}

inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::int64_t j = 1; j <= k; ++j) {
        r *= n - k + j;
        r /= j;  // exact at every step: r is C(n-k+j, j)
    }
    return r;
}

inline BigInt factorial(std::int64_t n) {
    BigInt r = 1;
    for (std::int64_t j = 2; j <= n; ++j) r *= j;
    return r;
}

// b^e with an overflow guard; exponents here stay within the desk-scale
// envelope (q <= ~10^6, scan exponents a few thousand).
inline std::int64_t ipow_checked(std::int64_t b, unsigned e) {
    std::int64_t r = 1;
    for (unsigned j = 0; j < e; ++j) {
        if (b != 0 && r > (std::int64_t{1} << 62) / b)
            fail("Overflow", "integer power overflows 64 bits");
        r *= b;
    }
    return r;
}

// Largest t with p^t dividing n (n > 0).
inline int p_valuation(std::int64_t n, std::int64_t p) {
    int t = 0;
    while (n % p == 0) {
        n /= p;
        ++t;
    }
    return t;
}

// If n == p^t returns t, else nullopt. p^0 = 1 counts.
inline std::optional<int> p_power_log(std::int64_t n, std::int64_t p) {
    if (n < 1) return std::nullopt;
    int t = 0;
    while (n % p == 0) {
        n /= p;
        ++t;
    }
    if (n == 1) return t;
    return std::nullopt;
}

inline std::int64_t isqrt64(std::int64_t n) {
    if (n < 0) return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_perfect_square(std::int64_t n) {
    if (n < 0) return false;
    std::int64_t r = isqrt64(n);
    return r * r == n;
}

// Binomial coefficient mod p by Lucas' theorem. Used where only the
// residue matters (difference-function expansion); the Dickson
// coefficients themselves are built from exact BigInt binomials.
inline std::int64_t binomial_mod_p(std::int64_t n, std::int64_t k, std::int64_t p) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    while (n > 0 || k > 0) {
        std::int64_t nd = n % p, kd = k % p;
        if (kd > nd) return 0;
        // small-digit binomial, exact in 64 bits since p is a small prime
        std::int64_t c = 1;
        for (std::int64_t j = 1; j <= kd; ++j) c = c * (nd - kd + j) / j;
        r = (r * (c % p)) % p;
        n /= p;
        k /= p;
    }
    return r;
}

}  // namespace planarium
