#pragma once

// Planarity decision by three independent routes:
//
//   delta-bijection   for every eps != 0, x -> f(x+eps) - f(x) - f(eps)
//                     must be injective on F_q (the generic oracle)
//   two-to-one        for Dembowski-Ostrom f: planar iff f hits exactly
//                     (q-1)/2 values on F_q^* and none of them is 0
//   linearized-kernel for DO f the difference function at fixed eps is a
//                     linearized polynomial; it permutes F_q iff its only
//                     root is 0
//
// The two-to-one route needs the no-nonzero-root clause: a DO polynomial
// with a root z != 0 also vanishes at -z, so the value 0 absorbs a +/- pair
// and f cannot be 2-to-1 as a map. Its image on F_q^* then either drops
// below (q-1)/2 or, in the one degenerate corner (the zero function on F_3,
// image {0} of size 1 = (q-1)/2), still meets the count while failing
// planarity. Counting alone is not enough there; counting plus the
// zero-exclusion matches the delta oracle everywhere.

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "planarium/do_classify.hpp"
#include "planarium/errors.hpp"
#include "planarium/poly.hpp"

namespace planarium {

enum class PlanarityMethod { DeltaBijection, TwoToOne, LinearizedKernel };

inline std::string method_name(PlanarityMethod m) {
    switch (m) {
        case PlanarityMethod::DeltaBijection: return "delta-bijection";
        case PlanarityMethod::TwoToOne: return "two-to-one";
        case PlanarityMethod::LinearizedKernel: return "linearized-kernel";
    }
    return "?";
}

struct PlanarityWitness {
    Elem eps, x1, x2;  // x1 != x2 with Delta_f(x1, eps) == Delta_f(x2, eps)
};

struct PlanarityReport {
    bool planar = false;
    PlanarityMethod method = PlanarityMethod::DeltaBijection;
    std::uint64_t image_size = 0;  // |f(F_q^*)|
    std::optional<PlanarityWitness> witness;
};

// Every exponent with a nonzero coefficient is of the form p^i + p^j.
inline bool is_do_shaped(const UniPoly& f) {
    for (long n = 0; n < static_cast<long>(f.coeffs.size()); ++n)
        if (!f.coeffs[n].is_zero() && !is_do_exponent(n, f.field.p()))
            return false;
    return true;
}

// Every exponent with a nonzero coefficient is a power of p.
inline bool is_linearized(const UniPoly& f) {
    for (long n = 0; n < static_cast<long>(f.coeffs.size()); ++n)
        if (!f.coeffs[n].is_zero() && !p_power_log(n, f.field.p()).has_value())
            return false;
    return true;
}

// Value table vals[i] = index_of(f(elem_at(i))) over the whole field.
// Dembowski-Ostrom inputs take the Frobenius shortcut
// x^{p^i+p^j} = frob_i(x) * frob_j(x), which the scan suites lean on;
// everything else evaluates term by term.
inline std::vector<std::uint32_t> eval_values(const UniPoly& f) {
    const auto& F = f.field;
    const std::uint64_t q = F.q();
    std::vector<std::uint32_t> vals(q, 0);
    if (f.is_zero()) return vals;

    if (is_do_shaped(f)) {
        int max_i = 0;
        for (long n = 1; n < static_cast<long>(f.coeffs.size()); ++n)
            if (!f.coeffs[n].is_zero()) max_i = std::max(max_i, is_do_exponent(n, F.p())->second);
        // frob[t][x] = x^{p^t} as elements
        std::vector<std::vector<Elem>> frob(max_i + 1);
        frob[0].reserve(q);
        for (std::uint64_t i = 0; i < q; ++i) frob[0].push_back(F.elem_at(i));
        for (int t = 1; t <= max_i; ++t) {
            frob[t].reserve(q);
            for (std::uint64_t i = 0; i < q; ++i)
                frob[t].push_back(F.pow(frob[t - 1][i], static_cast<std::uint64_t>(F.p())));
        }
        std::vector<Elem> acc(q, F.zero());
        for (long n = 1; n < static_cast<long>(f.coeffs.size()); ++n) {
            if (f.coeffs[n].is_zero()) continue;
            auto [i, j] = *is_do_exponent(n, F.p());
            for (std::uint64_t x = 0; x < q; ++x)
                acc[x] = F.add(acc[x], F.mul(f.coeffs[n], F.mul(frob[i][x], frob[j][x])));
        }
        if (static_cast<long>(f.coeffs.size()) > 0 && !f.coeffs[0].is_zero())
            for (std::uint64_t x = 0; x < q; ++x) acc[x] = F.add(acc[x], f.coeffs[0]);
        for (std::uint64_t x = 0; x < q; ++x)
            vals[x] = static_cast<std::uint32_t>(F.index_of(acc[x]));
        return vals;
    }

    // sorted nonzero terms, evaluated with a running power per element
    std::vector<std::pair<long, Elem>> terms;
    for (long n = 0; n < static_cast<long>(f.coeffs.size()); ++n)
        if (!f.coeffs[n].is_zero()) terms.emplace_back(n, f.coeffs[n]);
    for (std::uint64_t x = 0; x < q; ++x) {
        Elem xe = F.elem_at(x);
        Elem acc = F.zero();
        Elem power = F.one();
        long reached = 0;
        for (const auto& [n, c] : terms) {
            power = F.mul(power, F.pow(xe, static_cast<std::uint64_t>(n - reached)));
            reached = n;
            acc = F.add(acc, F.mul(c, power));
        }
        vals[x] = static_cast<std::uint32_t>(F.index_of(acc));
    }
    return vals;
}

struct ImageStats {
    std::uint64_t size = 0;
    bool contains_zero = false;
};

inline ImageStats image_stats(const UniPoly& f) {
    const auto& F = f.field;
    auto vals = eval_values(f);
    std::vector<std::uint8_t> seen(F.q(), 0);
    ImageStats st;
    for (std::uint64_t i = 1; i < F.q(); ++i) {
        if (!seen[vals[i]]) {
            seen[vals[i]] = 1;
            ++st.size;
            if (vals[i] == 0) st.contains_zero = true;
        }
    }
    return st;
}

// Exact count of distinct values of f over the q-1 nonzero arguments.
inline std::uint64_t image_set_size(const UniPoly& f) { return image_stats(f).size; }

// Delta-bijection oracle with per-field addition tables. Building the
// tables costs one pass over the q x q grid, after which any number of
// polynomials over the same field can be checked at a few lookups per
// grid point -- the shape the method-agreement sweeps need.
class PlanarKernel {
public:
    explicit PlanarKernel(const FieldCtx& field) : F(field) {
        const std::uint64_t q = F.q();
        if (q <= kTableCap) {
            add_.resize(q * q);
            for (std::uint64_t i = 0; i < q; ++i)
                for (std::uint64_t j = 0; j <= i; ++j) {
                    auto s = static_cast<std::uint32_t>(F.add_index(i, j));
                    add_[i * q + j] = s;
                    add_[j * q + i] = s;
                }
            neg_.resize(q);
            for (std::uint64_t i = 0; i < q; ++i)
                neg_[i] = static_cast<std::uint32_t>(F.sub_index(0, i));
        }
    }

    const FieldCtx& field() const { return F; }

    PlanarityReport is_planar_delta(const UniPoly& f) const {
        require_same_field(f.field, F);
        PlanarityReport rep;
        rep.method = PlanarityMethod::DeltaBijection;
        rep.image_size = image_set_size(f);
        auto vals = eval_values(f);
        const std::uint64_t q = F.q();
        std::vector<std::int64_t> seen_by(q);
        for (std::uint64_t ei = 1; ei < q; ++ei) {
            std::fill(seen_by.begin(), seen_by.end(), -1);
            for (std::uint64_t xi = 0; xi < q; ++xi) {
                // Delta(x, eps) = f(x+eps) - f(x) up to the constant f(eps)
                std::uint64_t v;
                if (!add_.empty())
                    v = add_[static_cast<std::uint64_t>(vals[add_[xi * q + ei]]) * q +
                             neg_[vals[xi]]];
                else
                    v = F.sub_index(vals[F.add_index(xi, ei)], vals[xi]);
                if (seen_by[v] >= 0) {
                    rep.planar = false;
                    rep.witness =
                        PlanarityWitness{F.elem_at(ei),
                                         F.elem_at(static_cast<std::uint64_t>(seen_by[v])),
                                         F.elem_at(xi)};
                    return rep;
                }
                seen_by[v] = static_cast<std::int64_t>(xi);
            }
        }
        rep.planar = true;
        return rep;
    }

private:
    static constexpr std::uint64_t kTableCap = 1024;  // 4 MiB of add table at most
    FieldCtx F;
    std::vector<std::uint32_t> add_;
    std::vector<std::uint32_t> neg_;
};

// One-shot wrapper; batch callers should hold a PlanarKernel per field.
inline PlanarityReport is_planar_delta(const UniPoly& f) {
    return PlanarKernel(f.field).is_planar_delta(f);
}

// Image-set criterion for Dembowski-Ostrom polynomials.
inline PlanarityReport is_planar_do(const UniPoly& f) {
    if (!is_do_shaped(f))
        fail("NotDOShape", "polynomial exponents are not all of the form p^i + p^j");
    PlanarityReport rep;
    rep.method = PlanarityMethod::TwoToOne;
    ImageStats st = image_stats(f);
    rep.image_size = st.size;
    rep.planar = st.size == (f.field.q() - 1) / 2 && !st.contains_zero;
    return rep;
}

// A linearized polynomial permutes F_q iff its only root is 0.
inline bool linearized_permutes(const UniPoly& f) {
    if (!is_linearized(f)) fail("NotLinearized", "polynomial is not linearized");
    if (f.is_zero()) return false;
    const auto& F = f.field;
    for (std::uint64_t i = 1; i < F.q(); ++i)
        if (poly_eval(f, F.elem_at(i)).is_zero()) return false;
    return true;
}

// Difference function of a DO polynomial at fixed eps, collected in X.
// Term c X^{p^i+p^j} contributes c eps^{p^j} X^{p^i} + c eps^{p^i} X^{p^j}.
inline UniPoly do_difference_at(const UniPoly& f, const Elem& eps) {
    const auto& F = f.field;
    std::vector<std::pair<long, Elem>> terms;
    for (long n = 1; n < static_cast<long>(f.coeffs.size()); ++n) {
        if (f.coeffs[n].is_zero()) continue;
        auto w = is_do_exponent(n, F.p());
        if (!w) fail("NotDOShape", "exponent " + std::to_string(n) + " is not p^i + p^j");
        std::int64_t pi = ipow_checked(F.p(), static_cast<unsigned>(w->first));
        std::int64_t pj = ipow_checked(F.p(), static_cast<unsigned>(w->second));
        terms.emplace_back(pi, F.mul(f.coeffs[n], F.pow(eps, static_cast<std::uint64_t>(pj))));
        terms.emplace_back(pj, F.mul(f.coeffs[n], F.pow(eps, static_cast<std::uint64_t>(pi))));
    }
    return make_unipoly(F, terms);
}

// Third route: the per-eps difference functions are linearized; planar iff
// each one permutes F_q. A nonzero kernel element z yields the collision
// Delta(0, eps) == Delta(z, eps).
inline PlanarityReport is_planar_linearized(const UniPoly& f) {
    if (!is_do_shaped(f))
        fail("NotDOShape", "polynomial exponents are not all of the form p^i + p^j");
    const auto& F = f.field;
    PlanarityReport rep;
    rep.method = PlanarityMethod::LinearizedKernel;
    rep.image_size = image_set_size(f);
    for (std::uint64_t ei = 1; ei < F.q(); ++ei) {
        Elem eps = F.elem_at(ei);
        UniPoly L = do_difference_at(f, eps);
        if (L.is_zero()) {
            rep.planar = false;
            rep.witness = PlanarityWitness{eps, F.zero(), F.one()};
            return rep;
        }
        for (std::uint64_t xi = 1; xi < F.q(); ++xi) {
            Elem x = F.elem_at(xi);
            if (poly_eval(L, x).is_zero()) {
                rep.planar = false;
                rep.witness = PlanarityWitness{eps, F.zero(), x};
                return rep;
            }
        }
    }
    rep.planar = true;
    return rep;
}

// Monomial rule for X^{p^alpha + 1} over F_{p^e}: planar iff e/(alpha, e)
// is odd. gcd(0, e) = e, so alpha = 0 (the square) is always planar.
inline bool planar_monomial_rule(std::int64_t /*p*/, int e, int alpha) {
    int g = std::gcd(alpha, e);
    return (e / g) % 2 == 1;
}

// Parameter transport a -> a b^d; the two instances have equal planarity
// verdicts for every nonzero b.
inline Elem planar_equivalence_transport(const FieldCtx& F, const Elem& a, const Elem& b,
                                         long d) {
    F.check(a);
    F.check(b);
    if (a.is_zero() || b.is_zero()) fail("ZeroParameter", "transport needs nonzero a and b");
    return F.mul(a, F.pow(b, static_cast<std::uint64_t>(d)));
}

}  // namespace planarium
