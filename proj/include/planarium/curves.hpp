#pragma once

// Exhaustive rational point counting on the difference-function curves,
// the affine Weil lower bound q - (d-1)(d-2)sqrt(q) - d - 1, and the preset
// registry for the named curves split off the difference functions of the
// hat polynomials (D4.B, E10.h, E15.h, G6.B, G11.h).
//
// Absolute irreducibility of the presets is an input assumption recorded in
// the registry metadata, never computed here; the point counts themselves
// are exact grid enumerations.

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planarium/errors.hpp"
#include "planarium/parallel.hpp"
#include "planarium/poly.hpp"
#include "planarium/rdp.hpp"

namespace planarium {

struct CurveCountReport {
    std::uint64_t total_points = 0;     // #{(u,v) : F(u,v) = 0}
    std::uint64_t boundary_points = 0;  // zeros with u = 0 or v = 0
    double weil_bound = 0.0;
    long degree = 0;
    std::optional<std::pair<Elem, Elem>> nontrivial_witness;  // first zero with u,v != 0
};

inline double weil_lower_bound(std::int64_t q, long degree) {
    double d = static_cast<double>(degree);
    return static_cast<double>(q) - (d - 1.0) * (d - 2.0) * std::sqrt(static_cast<double>(q)) - d - 1.0;
}

struct ThresholdReport {
    double bound = 0.0;
    bool exact = false;              // sqrt(q) was an integer, comparison exact
    std::optional<bool> exceeds;     // nullopt when within the float guard
};

// weil_lower_bound(q, degree) > boundary_max? Exact integer comparison when
// q is a perfect square; otherwise floating point with a 1e-9 guard that
// reports indeterminate instead of guessing at the boundary.
inline ThresholdReport threshold_degree_check(std::int64_t q, long degree,
                                              std::int64_t boundary_max) {
    ThresholdReport rep;
    rep.bound = weil_lower_bound(q, degree);
    std::int64_t coeff = (static_cast<std::int64_t>(degree) - 1) * (degree - 2);
    if (is_perfect_square(q)) {
        rep.exact = true;
        std::int64_t s = isqrt64(q);
        rep.exceeds = q - degree - 1 - boundary_max > coeff * s;
        return rep;
    }
    double lhs = rep.bound - static_cast<double>(boundary_max);
    if (std::abs(lhs) < 1e-9)
        rep.exceeds = std::nullopt;
    else
        rep.exceeds = lhs > 0;
    return rep;
}

// Exhaustive count over the q x q grid, partitioned by rows of u. Partial
// counts and first-witness candidates merge in row order, so the report is
// identical for any thread count.
inline CurveCountReport count_affine_points(const BiPoly& F, unsigned threads = 1) {
    if (F.is_zero()) fail("BadPolynomial", "cannot count points of the zero polynomial");
    const auto& K = F.field;
    const std::uint64_t q = K.q();

    // distinct Y-exponents with per-row collapsed coefficients: for fixed u
    // the section g_u(Y) = sum_j (sum_i c_ij u^i) Y^j
    std::vector<long> yexps;
    for (const auto& [ij, c] : F.terms)
        if (std::find(yexps.begin(), yexps.end(), ij.second) == yexps.end())
            yexps.push_back(ij.second);
    std::sort(yexps.begin(), yexps.end());

    // v^j tables for each distinct j
    std::vector<std::vector<Elem>> ypow(yexps.size());
    for (std::size_t t = 0; t < yexps.size(); ++t) {
        ypow[t].reserve(q);
        for (std::uint64_t vi = 0; vi < q; ++vi)
            ypow[t].push_back(K.pow(K.elem_at(vi), static_cast<std::uint64_t>(yexps[t])));
    }

    struct RowResult {
        std::uint64_t points = 0;
        std::uint64_t boundary = 0;
        std::optional<std::pair<std::uint64_t, std::uint64_t>> witness;
    };
    std::vector<RowResult> rows(q);

    parallel_chunks(q, threads, [&](std::size_t begin, std::size_t end) {
        for (std::uint64_t ui = begin; ui < end; ++ui) {
            Elem u = K.elem_at(ui);
            std::vector<Elem> row(yexps.size(), K.zero());
            for (const auto& [ij, c] : F.terms) {
                auto t = static_cast<std::size_t>(
                    std::lower_bound(yexps.begin(), yexps.end(), ij.second) - yexps.begin());
                row[t] = K.add(row[t], K.mul(c, K.pow(u, static_cast<std::uint64_t>(ij.first))));
            }
            RowResult& rr = rows[ui];
            for (std::uint64_t vi = 0; vi < q; ++vi) {
                Elem acc = K.zero();
                for (std::size_t t = 0; t < yexps.size(); ++t)
                    acc = K.add(acc, K.mul(row[t], ypow[t][vi]));
                if (!acc.is_zero()) continue;
                ++rr.points;
                if (ui == 0 || vi == 0)
                    ++rr.boundary;
                else if (!rr.witness)
                    rr.witness = std::make_pair(ui, vi);
            }
        }
    });

    CurveCountReport rep;
    rep.degree = F.total_degree();
    rep.weil_bound = weil_lower_bound(static_cast<std::int64_t>(q), rep.degree);
    for (std::uint64_t ui = 0; ui < q; ++ui) {
        rep.total_points += rows[ui].points;
        rep.boundary_points += rows[ui].boundary;
        if (!rep.nontrivial_witness && rows[ui].witness)
            rep.nontrivial_witness = std::make_pair(K.elem_at(rows[ui].witness->first),
                                                    K.elem_at(rows[ui].witness->second));
    }
    return rep;
}

// ---- preset registry -------------------------------------------------------

struct CurvePreset {
    std::string name;
    std::int64_t p;
    long parent_k, parent_m, parent_d;
    std::int64_t boundary_max;  // axis-solution cap used with the Weil bound
    std::string note;
};

inline const std::vector<CurvePreset>& curve_presets() {
    static const std::vector<CurvePreset> table = {
        {"D4.B", 3, 4, 0, 2, 4, "X^2+Y^2-a^2, absolutely irreducible (Eisenstein)"},
        {"E10.h", 3, 10, 1, 2, 64, "2(X^8+Y^8)-a^4X^2Y^2+a^6(X^2+Y^2), absolute irreducibility assumed (external CAS)"},
        {"E15.h", 3, 15, 1, 4, 0, "degree-24 cofactor; irreducibility assumed for the a=1 form (external CAS)"},
        {"G6.B", 5, 6, 3, 2, 16, "X^4+Y^4-a^4, absolutely irreducible (Eisenstein)"},
        {"G11.h", 5, 11, 3, 2, 16, "3aX^4Y^4+a^5X^4+a^5Y^4+4a^9, absolute irreducibility assumed (external CAS)"},
    };
    return table;
}

inline const CurvePreset& find_preset(const std::string& name) {
    for (const auto& c : curve_presets())
        if (c.name == name) return c;
    fail("UnknownPreset", "unknown curve preset '" + name + "'");
}

// The named curve with parameter a. normalize_a counts the a = 1
// specialization instead (the form whose irreducibility is certified).
inline BiPoly preset_curve(const std::string& name, const FieldCtx& F, const Elem& a,
                           bool normalize_a = false) {
    const CurvePreset& pre = find_preset(name);
    if (F.p() != pre.p)
        fail("CharacteristicMismatch", "preset " + name + " lives in characteristic " +
                                           std::to_string(pre.p));
    F.check(a);
    if (a.is_zero()) fail("ZeroParameter", "preset curves need a nonzero parameter");
    Elem aa = normalize_a ? F.one() : a;
    auto ap = [&](long n) { return F.pow(aa, static_cast<std::uint64_t>(n)); };
    BiPoly C{F, {}};
    if (name == "D4.B") {  // X^2 + Y^2 - a^2
        bipoly_add_term(C, 2, 0, F.one());
        bipoly_add_term(C, 0, 2, F.one());
        bipoly_add_term(C, 0, 0, F.neg(ap(2)));
    } else if (name == "E10.h") {  // 2(X^8+Y^8) - a^4 X^2 Y^2 + a^6 (X^2+Y^2)
        bipoly_add_term(C, 8, 0, F.from_int(2));
        bipoly_add_term(C, 0, 8, F.from_int(2));
        bipoly_add_term(C, 2, 2, F.neg(ap(4)));
        bipoly_add_term(C, 2, 0, ap(6));
        bipoly_add_term(C, 0, 2, ap(6));
    } else if (name == "E15.h") {
        // alternating X^{24-2t} Y^{2t} band, three a^8 middle terms, a^12
        for (long t = 0; t <= 12; ++t)
            bipoly_add_term(C, 24 - 2 * t, 2 * t, t % 2 == 0 ? F.one() : F.neg(F.one()));
        bipoly_add_term(C, 6, 2, F.neg(ap(8)));
        bipoly_add_term(C, 4, 4, ap(8));
        bipoly_add_term(C, 2, 6, F.neg(ap(8)));
        bipoly_add_term(C, 0, 0, ap(12));
    } else if (name == "G6.B") {  // X^4 + Y^4 - a^4
        bipoly_add_term(C, 4, 0, F.one());
        bipoly_add_term(C, 0, 4, F.one());
        bipoly_add_term(C, 0, 0, F.neg(ap(4)));
    } else if (name == "G11.h") {  // 3a X^4 Y^4 + a^5 X^4 + a^5 Y^4 + 4a^9
        bipoly_add_term(C, 4, 4, F.mul(F.from_int(3), ap(1)));
        bipoly_add_term(C, 4, 0, ap(5));
        bipoly_add_term(C, 0, 4, ap(5));
        bipoly_add_term(C, 0, 0, F.mul(F.from_int(4), ap(9)));
    }
    return C;
}

// The stated cofactors: preset times these equals the difference function
// of the parent hat polynomial, term-exact.
inline std::vector<BiPoly> preset_cofactors(const std::string& name, const FieldCtx& F,
                                            const Elem& a) {
    find_preset(name);
    F.check(a);
    BiPoly X{F, {}}, Y{F, {}};
    bipoly_add_term(X, 1, 0, F.one());
    bipoly_add_term(Y, 0, 1, F.one());
    if (name == "D4.B") return {X, Y, bipoly_const(F, F.from_int(2))};
    if (name == "E15.h") {
        BiPoly S{F, {}};  // X^2 + Y^2
        bipoly_add_term(S, 2, 0, F.one());
        bipoly_add_term(S, 0, 2, F.one());
        return {X, Y, S, bipoly_const(F, a)};
    }
    return {X, Y};
}

inline SymbolicRDP preset_parent(const std::string& name) {
    const CurvePreset& pre = find_preset(name);
    return make_hat(pre.parent_k, pre.parent_m, pre.parent_d, pre.p);
}

}  // namespace planarium
