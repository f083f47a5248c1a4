#pragma once

// Dembowski-Ostrom shape detection on the formal polynomial, exponent
// number theory (Legendre valuation, p^i + p^j decomposition), the encoded
// classification predicate for which D_{k,m}(a, X^d) - D_{k,m}(a, 0) are
// DO, and the exhaustive scan that cross-checks the two against each other.
//
// Detection is on the FORMAL polynomial: a function may coincide with a DO
// function after reduction mod X^q - X without the polynomial being DO, and
// the classification is about polynomials, not functions.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "planarium/errors.hpp"
#include "planarium/intmath.hpp"
#include "planarium/parallel.hpp"
#include "planarium/rdp.hpp"

namespace planarium {

inline long digit_sum(std::int64_t w, std::int64_t p) {
    long s = 0;
    while (w > 0) {
        s += static_cast<long>(w % p);
        w /= p;
    }
    return s;
}

// Largest exponent of p dividing w!, via (w - digit_sum(w)) / (p - 1).
inline long legendre_valuation(std::int64_t w, std::int64_t p) {
    return static_cast<long>((w - digit_sum(w, p)) / (p - 1));
}

// Decomposition n = p^i + p^j with i <= j, when one exists. The p-adic
// valuation pins i, so the decomposition is unique and the returned
// witness is deterministic.
inline std::optional<std::pair<int, int>> is_do_exponent(std::int64_t n, std::int64_t p) {
    if (n < 2) return std::nullopt;
    int beta = p_valuation(n, p);
    std::int64_t core = n;
    for (int t = 0; t < beta; ++t) core /= p;
    auto alpha = p_power_log(core - 1, p);
    if (!alpha) return std::nullopt;
    int i = beta, j = beta + *alpha;
    if (i > j) std::swap(i, j);
    return std::make_pair(i, j);
}

struct DOWitness {
    std::int64_t exponent;
    int i;
    int j;
    bool operator==(const DOWitness&) const = default;
};

struct DOReport {
    bool is_do = false;
    bool zero_polynomial = false;
    std::vector<DOWitness> witnesses;                          // one per surviving monomial
    std::optional<std::pair<std::int64_t, std::int32_t>> failure;  // first bad (exponent, coeff)
};

inline DOReport is_do_polynomial(const SymbolicRDP& spec) {
    DOReport rep;
    if (spec.terms.empty()) {
        rep.zero_polynomial = true;  // the zero polynomial is not DO
        return rep;
    }
    for (const auto& [i, c] : spec.terms) {
        std::int64_t n = static_cast<std::int64_t>(spec.d) * i;
        auto w = is_do_exponent(n, spec.p);
        if (!w) {
            rep.failure = std::make_pair(n, c);
            rep.witnesses.clear();
            return rep;
        }
        rep.witnesses.push_back({n, w->first, w->second});
    }
    rep.is_do = true;
    return rep;
}

namespace detail {

// d = base * p^n for some n >= 0.
inline bool is_base_times_p_power(long d, std::int64_t p, long base) {
    if (d < base || d % base != 0) return false;
    return p_power_log(d / base, p).has_value();
}

// d = p^n (p^alpha + 1).
inline bool is_pn_times_pa_plus_1(long d, std::int64_t p) {
    std::int64_t core = d;
    while (core > 0 && core % p == 0) core /= p;
    return core >= 2 && p_power_log(core - 1, p).has_value();
}

// d = p^n (p^alpha + 1) / 2, i.e. 2d = p^n (p^alpha + 1).
inline bool is_half_pn_times_pa_plus_1(long d, std::int64_t p) {
    return is_pn_times_pa_plus_1(2 * d, p);
}

inline bool first_kind_do(std::int64_t p, long k, long d) {
    auto [k0, ell] = rdp_normalize_kp(k, p);
    if (p == 3) {
        if (k0 == 2) return is_pn_times_pa_plus_1(d, p);
        if (k0 == 4 || k0 == 5 || k0 == 7) return is_base_times_p_power(d, p, 2);
        return false;
    }
    return (k0 == 2 || k0 == 3) && is_pn_times_pa_plus_1(d, p);
}

inline bool second_kind_do(std::int64_t p, long k, long d) {
    switch (k) {
        case 2:
        case 3: return is_pn_times_pa_plus_1(d, p);
        case 4: return p == 3 && is_half_pn_times_pa_plus_1(d, p);
        case 5:
        case 6: return p == 3 && is_pn_times_pa_plus_1(d, p);
        case 7: return (p == 3 || p == 5) && is_base_times_p_power(d, p, 2);
        case 10:
        case 13:
        case 19: return p == 3 && is_base_times_p_power(d, p, 2);
        case 15: return p == 3 && is_base_times_p_power(d, p, 4);
        default: return false;
    }
}

// Third kind: D_{k,2}(a,X) = a D_{k-1,1}(a,X), so the list shifts by one.
inline bool third_kind_do(std::int64_t p, long k, long d) {
    return k >= 1 && second_kind_do(p, k - 1, d);
}

inline bool fourth_kind_do(std::int64_t p, long k, long d) {
    if (p < 5) return false;
    if (k == 2) return is_pn_times_pa_plus_1(d, p);
    return p == 5 && (k == 6 || k == 11) && is_base_times_p_power(d, p, 2);
}

inline bool fifth_kind_do(std::int64_t p, long k, long d) {
    if (p < 5) return false;
    if (k == 2 || k == 3) return is_pn_times_pa_plus_1(d, p);
    if (k == 4) return is_half_pn_times_pa_plus_1(d, p);
    return false;
}

// Kinds m >= 5 (only possible for p > 5; m stays in [0, p-1]).
inline bool high_kind_do(std::int64_t p, long k, long m, long d) {
    if (k == 2 || k == 3) return is_pn_times_pa_plus_1(d, p);
    if (k == 5 && m % p == 5 % p) return is_half_pn_times_pa_plus_1(d, p);
    if (k == 5 && (2 * m) % p == 5 % p) return is_pn_times_pa_plus_1(d, p);
    return false;
}

}  // namespace detail

// Encoded classification: true iff the hat polynomial with these parameters
// (and nonzero a) is Dembowski-Ostrom. The scan checks this against the
// brute-force detector on every triple.
inline bool theorem_predicate(std::int64_t p, long k, long m, long d) {
    require_kind_in_range(m, p);
    if (k < 2 || d < 1) return false;
    switch (m) {
        case 0: return detail::first_kind_do(p, k, d);
        case 1: return detail::second_kind_do(p, k, d);
        case 2: return detail::third_kind_do(p, k, d);
        case 3: return detail::fourth_kind_do(p, k, d);
        case 4: return detail::fifth_kind_do(p, k, d);
        default: return detail::high_kind_do(p, k, m, d);
    }
}

struct ScanOptions {
    std::int64_t p = 3;
    long k_max = 40;
    long d_max = 28;
    std::vector<long> m_set;            // empty = all m in [0, p-1]
    bool include_p_multiples = false;   // lift the (k,p)=1 and (d,p)=1 restriction
    long k_ceiling = 64;                // guard for the BigInt coefficient work
    unsigned threads = 1;
};

struct ScanRecord {
    long k = 0, m = 0, d = 0;
    bool is_do = false;
    bool predicted = false;
    std::vector<DOWitness> witnesses;
};

struct ScanResult {
    std::uint64_t scanned = 0;
    std::uint64_t matches = 0;
    std::vector<ScanRecord> discrepancies;
    std::vector<ScanRecord> do_records;  // the surviving DO list, canonical order
};

// Compare is_do_polynomial against theorem_predicate over the whole box.
// Records stream through on_record in canonical (m, k, d) order regardless
// of the worker count.
inline ScanResult scan_and_verify(const ScanOptions& opt,
                                  const std::function<void(const ScanRecord&)>& on_record = {}) {
    if (opt.k_max > opt.k_ceiling)
        fail("CeilingExceeded", "k_max " + std::to_string(opt.k_max) +
                                    " exceeds the configured ceiling " + std::to_string(opt.k_ceiling));
    std::vector<long> ms = opt.m_set;
    if (ms.empty())
        for (long m = 0; m < opt.p; ++m) ms.push_back(m);
    for (long m : ms) require_kind_in_range(m, opt.p);

    std::vector<std::array<long, 3>> triples;
    for (long m : ms)
        for (long k = 2; k <= opt.k_max; ++k) {
            if (!opt.include_p_multiples && k % opt.p == 0) continue;
            for (long d = 1; d <= opt.d_max; ++d) {
                if (!opt.include_p_multiples && d % opt.p == 0) continue;
                triples.push_back({m, k, d});
            }
        }

    // processed chunk by chunk: workers fill one bounded buffer, records
    // stream out in canonical order, the buffer is reused
    constexpr std::size_t kChunk = 1024;
    std::vector<ScanRecord> buffer(std::min(kChunk, triples.size()));
    ScanResult res;
    res.scanned = triples.size();
    for (std::size_t base = 0; base < triples.size(); base += kChunk) {
        std::size_t len = std::min(kChunk, triples.size() - base);
        parallel_chunks(len, opt.threads, [&](std::size_t begin, std::size_t end) {
            for (std::size_t t = begin; t < end; ++t) {
                auto [m, k, d] = triples[base + t];
                SymbolicRDP spec = make_hat(k, m, d, opt.p);
                DOReport rep = is_do_polynomial(spec);
                ScanRecord& r = buffer[t];
                r.k = k;
                r.m = m;
                r.d = d;
                r.is_do = rep.is_do;
                r.predicted = theorem_predicate(opt.p, k, m, d);
                r.witnesses = std::move(rep.witnesses);
            }
        });
        for (std::size_t t = 0; t < len; ++t) {
            const ScanRecord& r = buffer[t];
            if (on_record) on_record(r);
            if (r.is_do == r.predicted)
                ++res.matches;
            else
                res.discrepancies.push_back(r);
            if (r.is_do) res.do_records.push_back(r);
        }
    }
    return res;
}

}  // namespace planarium
