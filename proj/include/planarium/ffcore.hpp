#pragma once

// Construction of F_{p^e} and element arithmetic in the polynomial basis.
//
// A FieldCtx is immutable after construction and freely shareable across
// threads. Elements are plain coordinate vectors (index = basis exponent,
// entries reduced mod p); they carry no back-pointer, so every operation
// goes through the owning FieldCtx. Elements also have a dense index in
// [0, q) -- coordinate digits read least-significant-first -- which the
// scan kernels use for occupancy tables.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "planarium/errors.hpp"
#include "planarium/intmath.hpp"

namespace planarium {

struct Elem {
    std::vector<std::int32_t> c;

    bool operator==(const Elem& o) const = default;
    bool is_zero() const {
        return std::all_of(c.begin(), c.end(), [](std::int32_t v) { return v == 0; });
    }
};

namespace detail {

// Dense polynomial over F_p as int32 coefficients, for modulus handling only.
inline int fp_degree(const std::vector<std::int32_t>& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

// Remainder of f by monic g over F_p.
inline std::vector<std::int32_t> fp_rem(std::vector<std::int32_t> f,
                                        const std::vector<std::int32_t>& g,
                                        std::int64_t p) {
    int dg = fp_degree(g);
    for (int i = fp_degree(f); i >= dg && i >= 0; i = fp_degree(f)) {
        std::int64_t lead = f[i];
        for (int j = 0; j <= dg; ++j) {
            std::int64_t v = f[i - dg + j] - lead * g[j] % p;
            f[i - dg + j] = static_cast<std::int32_t>((v % p + p) % p);
        }
    }
    return f;
}

inline bool fp_is_zero(const std::vector<std::int32_t>& f) { return fp_degree(f) < 0; }

}  // namespace detail

class FieldCtx {
public:
    // build_field: p odd prime, e >= 1. When no modulus is given the
    // lexicographically smallest monic irreducible of degree e is chosen by
    // deterministic scan (coefficient tuples ordered low-degree-first, i.e.
    // by their dense index), so two builds always agree.
    static FieldCtx make(std::int64_t p, int e,
                         const std::optional<std::vector<std::int32_t>>& modulus = std::nullopt) {
        if (!is_prime(p)) fail("NonPrime", "characteristic " + std::to_string(p) + " is not prime");
        if (p == 2) fail("EvenCharacteristic", "characteristic 2 is out of scope (no odd-characteristic planar theory)");
        if (e < 1) fail("BadFieldSpec", "extension degree must be >= 1");
        FieldCtx F;
        F.p_ = p;
        F.e_ = e;
        F.q_ = 1;
        for (int i = 0; i < e; ++i) F.q_ = static_cast<std::uint64_t>(F.q_ * static_cast<std::uint64_t>(p));
        if (modulus) {
            auto m = *modulus;
            if (static_cast<int>(m.size()) != e + 1)
                fail("BadFieldSpec", "modulus must have degree-e+1 coefficients");
            for (auto& v : m) v = static_cast<std::int32_t>(((v % p) + p) % p);
            if (m[e] != 1) fail("BadFieldSpec", "modulus must be monic");
            if (e > 1 && !is_irreducible(m, p))
                fail("ReducibleModulus", "supplied modulus is reducible over F_p");
            F.mod_ = m;
        } else if (e == 1) {
            F.mod_ = {0, 1};  // X - 0, never used in reduction
        } else {
            F.mod_ = smallest_irreducible(p, e);
        }
        return F;
    }

    std::int64_t p() const { return p_; }
    int e() const { return e_; }
    std::uint64_t q() const { return q_; }
    const std::vector<std::int32_t>& modulus() const { return mod_; }

    bool operator==(const FieldCtx& o) const {
        return p_ == o.p_ && e_ == o.e_ && mod_ == o.mod_;
    }

    // ---- element construction ------------------------------------------

    Elem zero() const { return Elem{std::vector<std::int32_t>(e_, 0)}; }

    Elem one() const {
        Elem x = zero();
        x.c[0] = 1;
        return x;
    }

    Elem from_int(std::int64_t v) const {
        Elem x = zero();
        x.c[0] = static_cast<std::int32_t>(((v % p_) + p_) % p_);
        return x;
    }

    void check(const Elem& x) const {
        if (static_cast<int>(x.c.size()) != e_)
            fail("FieldMismatch", "element has wrong coordinate length for this field");
        for (auto v : x.c)
            if (v < 0 || v >= p_) fail("FieldMismatch", "element coordinate not reduced mod p");
    }

    // ---- arithmetic ------------------------------------------------------

    Elem add(const Elem& a, const Elem& b) const {
        Elem r = a;
        for (int i = 0; i < e_; ++i) {
            r.c[i] += b.c[i];
            if (r.c[i] >= p_) r.c[i] -= static_cast<std::int32_t>(p_);
        }
        return r;
    }

    Elem sub(const Elem& a, const Elem& b) const {
        Elem r = a;
        for (int i = 0; i < e_; ++i) {
            r.c[i] -= b.c[i];
            if (r.c[i] < 0) r.c[i] += static_cast<std::int32_t>(p_);
        }
        return r;
    }

    Elem neg(const Elem& a) const { return sub(zero(), a); }

    Elem mul(const Elem& a, const Elem& b) const {
        if (e_ == 1)
            return Elem{{static_cast<std::int32_t>(std::int64_t(a.c[0]) * b.c[0] % p_)}};
        std::vector<std::int64_t> t(2 * e_ - 1, 0);
        for (int i = 0; i < e_; ++i) {
            if (a.c[i] == 0) continue;
            for (int j = 0; j < e_; ++j) t[i + j] += std::int64_t(a.c[i]) * b.c[j];
        }
        // fold down by the monic modulus
        for (int i = 2 * e_ - 2; i >= e_; --i) {
            std::int64_t lead = t[i] % p_;
            if (lead == 0) continue;
            for (int j = 0; j < e_; ++j) t[i - e_ + j] -= lead * mod_[j];
        }
        Elem r = zero();
        for (int i = 0; i < e_; ++i) r.c[i] = static_cast<std::int32_t>(((t[i] % p_) + p_) % p_);
        return r;
    }

    Elem pow(Elem base, std::uint64_t n) const {
        Elem r = one();
        while (n > 0) {
            if (n & 1) r = mul(r, base);
            base = mul(base, base);
            n >>= 1;
        }
        return r;
    }

    Elem inv(const Elem& a) const {
        if (a.is_zero()) fail("DivisionByZero", "inverse of zero");
        return pow(a, q_ - 2);
    }

    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    // x^{p^j}; the Frobenius has order dividing e, so j is reduced first.
    Elem frobenius(const Elem& x, unsigned j) const {
        Elem r = x;
        for (unsigned t = 0; t < j % static_cast<unsigned>(e_ == 0 ? 1 : e_); ++t)
            r = pow(r, static_cast<std::uint64_t>(p_));
        return r;
    }

    // ---- dense index <-> coordinates ------------------------------------

    std::uint64_t index_of(const Elem& x) const {
        std::uint64_t idx = 0, w = 1;
        for (int i = 0; i < e_; ++i) {
            idx += w * static_cast<std::uint64_t>(x.c[i]);
            w *= static_cast<std::uint64_t>(p_);
        }
        return idx;
    }

    Elem elem_at(std::uint64_t idx) const {
        Elem x = zero();
        for (int i = 0; i < e_; ++i) {
            x.c[i] = static_cast<std::int32_t>(idx % static_cast<std::uint64_t>(p_));
            idx /= static_cast<std::uint64_t>(p_);
        }
        return x;
    }

    // Digit-wise index arithmetic; addition in F_q never carries between
    // coordinates, so indices combine without decoding.
    std::uint64_t add_index(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t r = 0, w = 1;
        auto up = static_cast<std::uint64_t>(p_);
        for (int i = 0; i < e_; ++i) {
            std::uint64_t s = a % up + b % up;
            if (s >= up) s -= up;
            r += w * s;
            a /= up;
            b /= up;
            w *= up;
        }
        return r;
    }

    std::uint64_t sub_index(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t r = 0, w = 1;
        auto up = static_cast<std::uint64_t>(p_);
        for (int i = 0; i < e_; ++i) {
            std::uint64_t s = a % up + up - b % up;
            if (s >= up) s -= up;
            r += w * s;
            a /= up;
            b /= up;
            w *= up;
        }
        return r;
    }

    // Every element exactly once, zero first, lexicographic coordinate order.
    std::vector<Elem> enumerate() const {
        std::vector<Elem> out;
        out.reserve(q_);
        for (std::uint64_t i = 0; i < q_; ++i) out.push_back(elem_at(i));
        return out;
    }

    // ---- text formats ----------------------------------------------------

    // Elements serialize as "c0,c1,...,c_{e-1}".
    std::string format_elem(const Elem& x) const {
        std::ostringstream os;
        for (int i = 0; i < e_; ++i) {
            if (i) os << ',';
            os << x.c[i];
        }
        return os.str();
    }

    Elem parse_elem(const std::string& s) const {
        std::vector<std::int32_t> c;
        std::string tok;
        std::istringstream is(s);
        while (std::getline(is, tok, ',')) {
            try {
                c.push_back(static_cast<std::int32_t>(std::stol(tok)));
            } catch (const std::exception&) {
                fail("BadFieldSpec", "bad element coordinate '" + tok + "'");
            }
        }
        if (c.size() == 1 && e_ > 1) c.resize(e_, 0);  // allow plain integers
        if (static_cast<int>(c.size()) != e_)
            fail("FieldMismatch", "element '" + s + "' has " + std::to_string(c.size()) +
                                      " coordinates, field needs " + std::to_string(e_));
        for (auto& v : c) v = static_cast<std::int32_t>(((v % p_) + p_) % p_);
        return Elem{c};
    }

    // Field-spec string: "p^e" (auto modulus) or "p^e/c0,c1,...,1".
    static FieldCtx parse_spec(const std::string& spec) {
        auto caret = spec.find('^');
        std::int64_t p = 0;
        int e = 1;
        std::string rest;
        try {
            if (caret == std::string::npos) {
                auto slash = spec.find('/');
                p = std::stoll(spec.substr(0, slash));
                if (slash != std::string::npos) rest = spec.substr(slash + 1);
            } else {
                p = std::stoll(spec.substr(0, caret));
                auto slash = spec.find('/', caret);
                e = std::stoi(spec.substr(caret + 1, slash == std::string::npos
                                                         ? std::string::npos
                                                         : slash - caret - 1));
                if (slash != std::string::npos) rest = spec.substr(slash + 1);
            }
        } catch (const std::exception&) {
            fail("BadFieldSpec", "cannot parse field spec '" + spec + "'");
        }
        std::optional<std::vector<std::int32_t>> mod;
        if (!rest.empty()) {
            std::vector<std::int32_t> m;
            std::string tok;
            std::istringstream is(rest);
            while (std::getline(is, tok, ',')) m.push_back(static_cast<std::int32_t>(std::stol(tok)));
            mod = m;
        }
        return make(p, e, mod);
    }

    std::string spec_string() const {
        std::string s = std::to_string(p_);
        if (e_ > 1) s += "^" + std::to_string(e_);
        return s;
    }

    std::string modulus_string() const {
        std::ostringstream os;
        for (int i = 0; i <= e_; ++i) {
            if (i) os << ',';
            os << mod_[i];
        }
        return os.str();
    }

private:
    FieldCtx() = default;

    // Trial division by every monic polynomial of degree <= e/2.
    static bool is_irreducible(const std::vector<std::int32_t>& m, std::int64_t p) {
        int e = detail::fp_degree(m);
        for (int dg = 1; dg <= e / 2; ++dg) {
            std::uint64_t count = 1;
            for (int i = 0; i < dg; ++i) count *= static_cast<std::uint64_t>(p);
            for (std::uint64_t idx = 0; idx < count; ++idx) {
                std::vector<std::int32_t> g(dg + 1, 0);
                std::uint64_t t = idx;
                for (int i = 0; i < dg; ++i) {
                    g[i] = static_cast<std::int32_t>(t % static_cast<std::uint64_t>(p));
                    t /= static_cast<std::uint64_t>(p);
                }
                g[dg] = 1;
                if (detail::fp_is_zero(detail::fp_rem(m, g, p))) return false;
            }
        }
        return true;
    }

    static std::vector<std::int32_t> smallest_irreducible(std::int64_t p, int e) {
        std::uint64_t count = 1;
        for (int i = 0; i < e; ++i) count *= static_cast<std::uint64_t>(p);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<std::int32_t> m(e + 1, 0);
            std::uint64_t t = idx;
            for (int i = 0; i < e; ++i) {
                m[i] = static_cast<std::int32_t>(t % static_cast<std::uint64_t>(p));
                t /= static_cast<std::uint64_t>(p);
            }
            m[e] = 1;
            if (is_irreducible(m, p)) return m;
        }
        fail("ReducibleModulus", "no irreducible polynomial found (unreachable)");
    }

    std::int64_t p_ = 0;
    int e_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::int32_t> mod_;
};

}  // namespace planarium
