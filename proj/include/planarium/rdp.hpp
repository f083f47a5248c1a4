#pragma once

// Reversed Dickson polynomials of the (m+1)-th kind, D_{k,m}(a, X), and the
// constant-free compositions D_{k,m}(a, X^d) - D_{k,m}(a, 0) that the
// classifier works on. Coefficients come from two independent routes that
// must agree term for term:
//
//   closed form   (k-mi)/(k-i) * C(k-i, i) * (-1)^i, evaluated as the
//                 integer combination C(k-i,i) - (m-1)*C(k-i-1,i-1)
//   recurrence    T_k = a*T_{k-1} - X*T_{k-2} for the first and second
//                 kinds, combined as m*E_k - (m-1)*D_k
//
// All integer work is exact (BigInt); reduction mod p happens last.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "planarium/errors.hpp"
#include "planarium/ffcore.hpp"
#include "planarium/intmath.hpp"
#include "planarium/poly.hpp"

namespace planarium {

// Formal polynomial sum_i c_i * a^{k-2i} * X^{d*i} with 1 <= i <= k/2 and
// c_i in [1, p-1]. The i = 0 term is absent by construction.
struct SymbolicRDP {
    long k = 0;
    long m = 0;
    long d = 1;
    std::int64_t p = 3;
    std::vector<std::pair<long, std::int32_t>> terms;  // (i, c_i), increasing i
};

using RdpCoeffs = std::vector<std::pair<long, std::int32_t>>;

inline void require_kind_in_range(long m, std::int64_t p) {
    if (m < 0 || m >= p)
        fail("KindOutOfRange", "kind index m=" + std::to_string(m) +
                                   " must lie in [0, p-1] for p=" + std::to_string(p));
}

inline RdpCoeffs rdp_coeffs_closed(long k, long m, std::int64_t p) {
    require_kind_in_range(m, p);
    RdpCoeffs out;
    for (long i = 1; 2 * i <= k; ++i) {
        // (k/(k-i))*C(k-i,i) = C(k-i,i) + C(k-i-1,i-1) is the first-kind
        // coefficient; the (m+1)-th kind combination collapses to
        // C(k-i,i) - (m-1)*C(k-i-1,i-1).
        BigInt c = binomial(k - i, i) - BigInt(m - 1) * binomial(k - i - 1, i - 1);
        if (i % 2 != 0) c = -c;
        auto r = static_cast<std::int64_t>(c % p);
        if (r < 0) r += p;
        if (r != 0) out.emplace_back(i, static_cast<std::int32_t>(r));
    }
    return out;
}

inline RdpCoeffs rdp_coeffs_recursive(long k, long m, std::int64_t p) {
    require_kind_in_range(m, p);
    // T_n(a,X) = sum_i t[n][i] X^i a^{n-2i}; the recurrence shifts i by one
    // for the X factor: t[n][i] = t[n-1][i] - t[n-2][i-1].
    auto advance = [](std::vector<BigInt> prev2, const std::vector<BigInt>& prev1) {
        std::vector<BigInt> cur(prev1.size() + 1, 0);
        for (std::size_t i = 0; i < prev1.size(); ++i) cur[i] += prev1[i];
        for (std::size_t i = 0; i < prev2.size(); ++i) cur[i + 1] -= prev2[i];
        while (cur.size() > 1 && cur.back() == 0) cur.pop_back();
        return cur;
    };
    std::vector<BigInt> d0{2}, d1{1}, e0{1}, e1{1};
    if (k == 0) return {};
    for (long n = 2; n <= k; ++n) {
        auto dn = advance(d0, d1);
        d0 = std::move(d1);
        d1 = std::move(dn);
        auto en = advance(e0, e1);
        e0 = std::move(e1);
        e1 = std::move(en);
    }
    const auto& dk = d1;
    const auto& ek = e1;
    RdpCoeffs out;
    for (long i = 1; 2 * i <= k; ++i) {
        BigInt c = 0;
        if (i < static_cast<long>(ek.size())) c += BigInt(m) * ek[i];
        if (i < static_cast<long>(dk.size())) c -= BigInt(m - 1) * dk[i];
        auto r = static_cast<std::int64_t>(c % p);
        if (r < 0) r += p;
        if (r != 0) out.emplace_back(i, static_cast<std::int32_t>(r));
    }
    return out;
}

enum class RdpRoute { Closed, Recursive };

inline SymbolicRDP make_hat(long k, long m, long d, std::int64_t p,
                            RdpRoute route = RdpRoute::Closed) {
    if (d < 1) fail("BadParameter", "composition exponent d must be >= 1");
    SymbolicRDP s;
    s.k = k;
    s.m = m;
    s.d = d;
    s.p = p;
    s.terms = route == RdpRoute::Closed ? rdp_coeffs_closed(k, m, p)
                                        : rdp_coeffs_recursive(k, m, p);
    return s;
}

// The formal univariate polynomial over a concrete field, unreduced.
inline UniPoly rdp_instantiate(const SymbolicRDP& spec, const Elem& a, const FieldCtx& F) {
    if (F.p() != spec.p)
        fail("CharacteristicMismatch", "field characteristic " + std::to_string(F.p()) +
                                           " does not match spec p=" + std::to_string(spec.p));
    F.check(a);
    if (a.is_zero()) fail("ZeroParameter", "parameter a must be nonzero");
    std::vector<std::pair<long, Elem>> terms;
    for (const auto& [i, c] : spec.terms) {
        Elem coef = F.mul(F.from_int(c), F.pow(a, static_cast<std::uint64_t>(spec.k - 2 * i)));
        terms.emplace_back(spec.d * i, coef);
    }
    return make_unipoly(F, terms);
}

// D_{k,m}(0, X^d) collapses to (2-m)(-X^d)^{k/2}; it is Dembowski-Ostrom
// exactly when k is even, m != 2 (mod p) and kd = 2 p^j (p^i + 1).
inline bool rdp_zero_param_do(long k, long m, long d, std::int64_t p) {
    if (k <= 0 || k % 2 != 0) return false;
    if (((m % p) + p) % p == 2 % p) return false;
    // kd = 2 p^j (p^i + 1): halve, strip the p-part, the rest must be p^i + 1
    std::int64_t half = static_cast<std::int64_t>(k) * d / 2;
    while (half % p == 0) half /= p;
    return p_power_log(half - 1, p).has_value();
}

// k = k' * p^n with (k', p) = 1.
inline std::pair<long, int> rdp_normalize_kp(long k, std::int64_t p) {
    if (k < 1) fail("BadParameter", "k must be >= 1");
    int n = 0;
    while (k % p == 0) {
        k /= static_cast<long>(p);
        ++n;
    }
    return {k, n};
}

// Families D/E/F/G/H name the kinds m = 0..4.
inline char family_letter(long m) {
    static const char letters[] = {'D', 'E', 'F', 'G', 'H'};
    if (m < 0 || m > 4) fail("KindOutOfRange", "no single-letter family for m=" + std::to_string(m));
    return letters[m];
}

inline long family_kind(char letter) {
    switch (letter) {
        case 'D': return 0;
        case 'E': return 1;
        case 'F': return 2;
        case 'G': return 3;
        case 'H': return 4;
        default: fail("KindOutOfRange", std::string("unknown family letter '") + letter + "'");
    }
}

inline std::string hat_name(const SymbolicRDP& s) {
    std::string base = s.m <= 4 ? std::string(1, family_letter(s.m)) + std::to_string(s.k)
                                : "Dkm(" + std::to_string(s.k) + "," + std::to_string(s.m) + ")";
    return base;
}

}  // namespace planarium
