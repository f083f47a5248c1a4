#pragma once

// Shared fixtures for the unit and acceptance suites: the explicitly known
// hat-polynomial coefficient tables (exact integers, reduced mod p at check
// time), the known DO parameter families with representative exponents, and
// small helpers.

#include <cstdint>
#include <string>
#include <vector>

#include "planarium/do_classify.hpp"
#include "planarium/ffcore.hpp"
#include "planarium/planarity.hpp"
#include "planarium/poly.hpp"
#include "planarium/rdp.hpp"

namespace testdata {

struct HatDisplay {
    std::string name;
    long k;
    long m;
    std::int64_t p;  // 0 = valid for every odd prime
    std::vector<std::pair<long, std::int64_t>> terms;  // (i, exact integer coefficient)
};

// Coefficient displays of the low-degree hat polynomials, exact integers.
// Reduce mod p (dropping zeros) to get the expected rdp_coeffs output.
inline const std::vector<HatDisplay>& hat_displays() {
    static const std::vector<HatDisplay> t = {
        // first kind
        {"D2", 2, 0, 0, {{1, -2}}},
        {"D3", 3, 0, 0, {{1, -3}}},
        {"D4", 4, 0, 0, {{1, -4}, {2, 2}}},
        {"D5", 5, 0, 0, {{1, -5}, {2, 5}}},
        {"D7", 7, 0, 0, {{1, -7}, {2, 14}, {3, -7}}},
        // second kind
        {"E2", 2, 1, 0, {{1, -1}}},
        {"E3", 3, 1, 0, {{1, -2}}},
        {"E4", 4, 1, 0, {{1, -3}, {2, 1}}},
        {"E5", 5, 1, 0, {{1, -4}, {2, 3}}},
        {"E6", 6, 1, 0, {{1, -5}, {2, 6}, {3, -1}}},
        {"E7", 7, 1, 0, {{1, -6}, {2, 10}, {3, -4}}},
        // fourth kind
        {"G2", 2, 3, 0, {{1, 1}}},
        {"G3", 3, 3, 0, {}},
        {"G4", 4, 3, 0, {{1, -1}, {2, -1}}},
        {"G5", 5, 3, 0, {{1, -2}, {2, -1}}},
        {"G6", 6, 3, 0, {{1, -3}, {3, 1}}},
        {"G7", 7, 3, 0, {{1, -4}, {2, 2}, {3, 2}}},
        // fifth kind
        {"H2", 2, 4, 0, {{1, 2}}},
        {"H3", 3, 4, 0, {{1, 1}}},
        {"H4", 4, 4, 0, {{2, -2}}},
        {"H5", 5, 4, 0, {{1, -1}, {2, -3}}},
        {"H6", 6, 4, 0, {{1, -2}, {2, -3}, {3, 2}}},
        // the X^{3d} coefficient is -(3)(2)(-5)/6 = 5 by the generic
        // third-term formula; both coefficient routes agree
        {"H7", 7, 4, 0, {{1, -3}, {2, -2}, {3, 5}}},
        {"H8", 8, 4, 0, {{1, -4}, {3, 8}, {4, -2}}},
        {"H9", 9, 4, 0, {{1, -5}, {2, 3}, {3, 10}, {4, -7}}},
        // characteristic-3 reductions
        {"D4@3", 4, 0, 3, {{1, 2}, {2, 2}}},
        {"D5@3", 5, 0, 3, {{1, 1}, {2, 2}}},
        {"D7@3", 7, 0, 3, {{1, 2}, {2, 2}, {3, 2}}},
        {"E4@3", 4, 1, 3, {{2, 1}}},
        {"E5@3", 5, 1, 3, {{1, 2}}},
        {"E6@3", 6, 1, 3, {{1, 1}, {3, 2}}},
        {"E7@3", 7, 1, 3, {{2, 1}, {3, 2}}},
        {"E10@3", 10, 1, 3, {{2, 1}, {3, 1}, {5, 2}}},
        {"E13@3", 13, 1, 3, {{2, 1}, {5, 1}, {6, 1}}},
        // terms sit at i = 1, 6, 7 (the i = 2..5 binomials all vanish mod 3),
        // matching the divisibility conditions drawn on d, 6d and 7d
        {"E14@3", 14, 1, 3, {{1, 2}, {6, 1}, {7, 2}}},
        {"E15@3", 15, 1, 3, {{1, 1}, {3, 2}, {7, 1}}},
        {"E19@3", 19, 1, 3, {{2, 1}, {3, 1}, {5, 2}, {9, 2}}},
        // characteristic-5 reductions
        {"E7@5", 7, 1, 5, {{1, 4}, {3, 1}}},
        {"G6@5", 6, 3, 5, {{1, 2}, {3, 1}}},
        {"G11@5", 11, 3, 5, {{1, 2}, {3, 1}, {5, 4}}},
        // kinds m >= 5
        {"D5m5@7", 5, 5, 7, {{2, 2}}},   // (m-5) = 0, (5-2m) = -5
        {"D5m6@7", 5, 6, 7, {{1, 1}}},   // (m-5) = 1, (5-2m) = -7 = 0 mod 7
        {"D4m5@7", 4, 5, 7, {{1, 1}, {2, 4}}},
        {"D2m6@11", 2, 6, 11, {{1, 4}}},
        {"D3m8@11", 3, 8, 11, {{1, 5}}},
    };
    return t;
}

// One DO parameter triple from the known families, with representative
// Frobenius twists already folded into k and d.
struct DoFamilyCase {
    std::int64_t p;
    long k, m, d;
};

// Representatives of every classified DO family: base entries, the p^l
// scaling of k where the family has one, the p^n scaling of d, and the
// alpha range for d = p^n (p^alpha + 1) shapes.
inline std::vector<DoFamilyCase> appendix_representatives() {
    std::vector<DoFamilyCase> out;
    auto pa1 = [](std::int64_t p, int alpha) {
        std::int64_t r = 1;
        for (int t = 0; t < alpha; ++t) r *= p;
        return r + 1;
    };
    auto push_forms = [&](std::int64_t p, long k, long m, bool half) {
        for (int n = 0; n <= 1; ++n) {
            std::int64_t pn = n == 0 ? 1 : p;
            for (int alpha = 0; alpha <= 3; ++alpha) {
                std::int64_t d = pn * pa1(p, alpha);
                if (half) d /= 2;
                out.push_back({p, k, m, static_cast<long>(d)});
            }
        }
    };
    auto push_fixed = [&](std::int64_t p, long k, long m, long base) {
        for (int n = 0; n <= 1; ++n)
            out.push_back({p, k, m, static_cast<long>(base * (n == 0 ? 1 : p))});
    };

    for (int ell = 0; ell <= 1; ++ell) {
        long s3 = ell == 0 ? 1 : 3;
        push_forms(3, 2 * s3, 0, false);
        push_fixed(3, 4 * s3, 0, 2);
        push_fixed(3, 5 * s3, 0, 2);
        push_fixed(3, 7 * s3, 0, 2);
    }
    // p = 3, second kind
    push_forms(3, 2, 1, false);
    push_forms(3, 3, 1, false);
    push_forms(3, 4, 1, true);
    push_forms(3, 5, 1, false);
    push_forms(3, 6, 1, false);
    push_fixed(3, 7, 1, 2);
    push_fixed(3, 10, 1, 2);
    push_fixed(3, 13, 1, 2);
    push_fixed(3, 15, 1, 4);
    push_fixed(3, 19, 1, 2);
    // p = 3, third kind = shifted second kind
    push_forms(3, 3, 2, false);
    push_forms(3, 4, 2, false);
    push_forms(3, 5, 2, true);
    push_forms(3, 6, 2, false);
    push_forms(3, 7, 2, false);
    push_fixed(3, 8, 2, 2);
    push_fixed(3, 11, 2, 2);
    push_fixed(3, 14, 2, 2);
    push_fixed(3, 16, 2, 4);
    push_fixed(3, 20, 2, 2);
    // p = 5
    for (int ell = 0; ell <= 1; ++ell) {
        long s5 = ell == 0 ? 1 : 5;
        push_forms(5, 2 * s5, 0, false);
        push_forms(5, 3 * s5, 0, false);
    }
    push_forms(5, 2, 1, false);
    push_forms(5, 3, 1, false);
    push_fixed(5, 7, 1, 2);
    push_forms(5, 3, 2, false);
    push_forms(5, 4, 2, false);
    push_fixed(5, 8, 2, 2);
    push_forms(5, 2, 3, false);
    push_fixed(5, 6, 3, 2);
    push_fixed(5, 11, 3, 2);
    push_forms(5, 2, 4, false);
    push_forms(5, 3, 4, false);
    push_forms(5, 4, 4, true);
    // p = 7: monomial families only
    for (int ell = 0; ell <= 1; ++ell) {
        long s7 = ell == 0 ? 1 : 7;
        push_forms(7, 2 * s7, 0, false);
        push_forms(7, 3 * s7, 0, false);
    }
    push_forms(7, 2, 1, false);
    push_forms(7, 3, 1, false);
    push_forms(7, 3, 2, false);
    push_forms(7, 4, 2, false);
    push_forms(7, 2, 3, false);
    push_forms(7, 2, 4, false);
    push_forms(7, 3, 4, false);
    push_forms(7, 4, 4, true);
    push_forms(7, 2, 5, false);
    push_forms(7, 3, 5, false);
    push_forms(7, 5, 5, true);   // m = 5 (mod 7)
    push_forms(7, 2, 6, false);
    push_forms(7, 3, 6, false);
    push_forms(7, 5, 6, false);  // 2m = 5 (mod 7)
    return out;
}

// Planarity verdict by definition, independent of the library kernels:
// evaluates f naively and checks each difference map for collisions with
// pairwise comparisons. Quadratic in q per epsilon; keep q tiny.
inline bool planar_by_definition(const planarium::UniPoly& f) {
    const auto& F = f.field;
    auto all = F.enumerate();
    for (std::uint64_t ei = 1; ei < F.q(); ++ei) {
        const auto& eps = all[ei];
        std::vector<planarium::Elem> vals;
        vals.reserve(F.q());
        for (const auto& x : all)
            vals.push_back(planarium::poly_eval(f, F.add(x, eps)));
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j) {
                auto di = F.sub(vals[i], planarium::poly_eval(f, all[i]));
                auto dj = F.sub(vals[j], planarium::poly_eval(f, all[j]));
                if (di == dj) return false;
            }
    }
    return true;
}

}  // namespace testdata
