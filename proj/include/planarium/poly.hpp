#pragma once

// Univariate and bivariate polynomial algebra over a FieldCtx: Horner
// evaluation, reduction modulo X^q - X, the difference function
// f(X+Y) - f(X) - f(Y), and exact division by known factors.

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "planarium/errors.hpp"
#include "planarium/ffcore.hpp"
#include "planarium/intmath.hpp"

namespace planarium {

// Dense coefficients, index = exponent. Canonical form keeps no trailing
// zeros; the zero polynomial has an empty coefficient list.
struct UniPoly {
    FieldCtx field;
    std::vector<Elem> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    long degree() const { return static_cast<long>(coeffs.size()) - 1; }

    void trim() {
        while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    }

    bool operator==(const UniPoly& o) const {
        return field == o.field && coeffs == o.coeffs;
    }
};

inline UniPoly make_unipoly(const FieldCtx& F,
                            const std::vector<std::pair<long, Elem>>& terms) {
    UniPoly f{F, {}};
    for (const auto& [n, c] : terms) {
        F.check(c);
        if (n < 0) fail("BadPolynomial", "negative exponent");
        if (static_cast<long>(f.coeffs.size()) <= n) f.coeffs.resize(n + 1, F.zero());
        f.coeffs[n] = F.add(f.coeffs[n], c);
    }
    f.trim();
    return f;
}

inline void require_same_field(const FieldCtx& a, const FieldCtx& b) {
    if (!(a == b)) fail("FieldMismatch", "operands belong to different fields");
}

inline Elem poly_eval(const UniPoly& f, const Elem& x) {
    f.field.check(x);
    Elem acc = f.field.zero();
    for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it)
        acc = f.field.add(f.field.mul(acc, x), *it);
    return acc;
}

// Unique representative of degree < q inducing the same function: exponent
// n >= 1 folds to ((n-1) mod (q-1)) + 1, exponent 0 stays put.
inline UniPoly reduce_qmap(const UniPoly& f) {
    const auto& F = f.field;
    UniPoly r{F, {}};
    auto fold = [&](long n) -> long {
        if (n == 0 || n < static_cast<long>(F.q())) return n;
        return static_cast<long>((static_cast<std::uint64_t>(n) - 1) % (F.q() - 1)) + 1;
    };
    for (long n = 0; n < static_cast<long>(f.coeffs.size()); ++n) {
        if (f.coeffs[n].is_zero()) continue;
        long m = fold(n);
        if (static_cast<long>(r.coeffs.size()) <= m) r.coeffs.resize(m + 1, F.zero());
        r.coeffs[m] = F.add(r.coeffs[m], f.coeffs[n]);
    }
    r.trim();
    return r;
}

// f(x) == g(x) for every x in F_q, by exhaustive evaluation.
inline bool functions_equal(const UniPoly& f, const UniPoly& g) {
    require_same_field(f.field, g.field);
    for (std::uint64_t i = 0; i < f.field.q(); ++i) {
        Elem x = f.field.elem_at(i);
        if (!(poly_eval(f, x) == poly_eval(g, x))) return false;
    }
    return true;
}

// Sparse bivariate polynomial; stored coefficients are nonzero.
struct BiPoly {
    FieldCtx field;
    std::map<std::pair<long, long>, Elem> terms;  // (i, j) -> coeff of X^i Y^j

    bool is_zero() const { return terms.empty(); }

    long total_degree() const {
        long d = 0;
        for (const auto& [ij, c] : terms) d = std::max(d, ij.first + ij.second);
        return d;
    }
};

inline void bipoly_set(BiPoly& F, long i, long j, const Elem& c) {
    if (c.is_zero())
        F.terms.erase({i, j});
    else
        F.terms[{i, j}] = c;
}

inline void bipoly_add_term(BiPoly& F, long i, long j, const Elem& c) {
    auto it = F.terms.find({i, j});
    Elem s = it == F.terms.end() ? c : F.field.add(it->second, c);
    bipoly_set(F, i, j, s);
}

inline BiPoly bipoly_const(const FieldCtx& F, const Elem& c) {
    BiPoly r{F, {}};
    bipoly_add_term(r, 0, 0, c);
    return r;
}

inline BiPoly bipoly_sub(const BiPoly& A, const BiPoly& B) {
    require_same_field(A.field, B.field);
    BiPoly r = A;
    for (const auto& [ij, c] : B.terms) bipoly_add_term(r, ij.first, ij.second, A.field.neg(c));
    return r;
}

inline BiPoly bipoly_mul(const BiPoly& A, const BiPoly& B) {
    require_same_field(A.field, B.field);
    BiPoly r{A.field, {}};
    for (const auto& [ab, ca] : A.terms)
        for (const auto& [bb, cb] : B.terms)
            bipoly_add_term(r, ab.first + bb.first, ab.second + bb.second, A.field.mul(ca, cb));
    return r;
}

inline bool bipoly_equal(const BiPoly& A, const BiPoly& B) {
    return A.field == B.field && A.terms == B.terms;
}

inline Elem bivar_eval(const BiPoly& F, const Elem& x, const Elem& y) {
    F.field.check(x);
    F.field.check(y);
    Elem acc = F.field.zero();
    for (const auto& [ij, c] : F.terms) {
        Elem t = F.field.mul(c, F.field.pow(x, static_cast<std::uint64_t>(ij.first)));
        t = F.field.mul(t, F.field.pow(y, static_cast<std::uint64_t>(ij.second)));
        acc = F.field.add(acc, t);
    }
    return acc;
}

// Substitute Y = y0 and collect in X.
inline UniPoly bipoly_substitute_y(const BiPoly& F, const Elem& y0) {
    F.field.check(y0);
    std::vector<std::pair<long, Elem>> terms;
    for (const auto& [ij, c] : F.terms)
        terms.emplace_back(ij.first,
                           F.field.mul(c, F.field.pow(y0, static_cast<std::uint64_t>(ij.second))));
    return make_unipoly(F.field, terms);
}

// Difference function Delta_f(X,Y) = f(X+Y) - f(X) - f(Y), expanded by the
// binomial theorem. Only defined for constant-free f; the boundary rows
// Delta(x,0) and Delta(0,y) then vanish identically.
inline BiPoly difference_poly(const UniPoly& f) {
    const auto& F = f.field;
    if (!f.coeffs.empty() && !f.coeffs[0].is_zero())
        fail("NonzeroConstantTerm", "difference function requires a zero constant term");
    BiPoly d{F, {}};
    for (long n = 1; n < static_cast<long>(f.coeffs.size()); ++n) {
        const Elem& c = f.coeffs[n];
        if (c.is_zero()) continue;
        for (long j = 1; j < n; ++j) {
            std::int64_t b = binomial_mod_p(n, j, F.p());
            if (b == 0) continue;
            bipoly_add_term(d, n - j, j, F.mul(c, F.from_int(b)));
        }
    }
    return d;
}

namespace detail {

// Division by a single divisor in lex order (X before Y). Each step cancels
// the leading term of the remainder; a non-divisible leading term means the
// division is not exact.
inline BiPoly bipoly_divide_exact(const BiPoly& F, const BiPoly& g) {
    if (g.is_zero()) fail("InexactDivision", "division by the zero polynomial");
    BiPoly rem = F;
    BiPoly quot{F.field, {}};
    const auto& lead = *g.terms.rbegin();  // lex-largest term of g
    while (!rem.is_zero()) {
        const auto& rl = *rem.terms.rbegin();
        long di = rl.first.first - lead.first.first;
        long dj = rl.first.second - lead.first.second;
        if (di < 0 || dj < 0)
            fail("InexactDivision", "factor does not divide the polynomial exactly");
        Elem qc = F.field.div(rl.second, lead.second);
        bipoly_add_term(quot, di, dj, qc);
        BiPoly t{F.field, {}};
        bipoly_add_term(t, di, dj, qc);
        rem = bipoly_sub(rem, bipoly_mul(t, g));
    }
    return quot;
}

}  // namespace detail

// Exact cofactor of F by the given factors, verified by multiplying back.
inline BiPoly bipoly_divide_monomial_factors(const BiPoly& F, const std::vector<BiPoly>& factors) {
    BiPoly q = F;
    for (const auto& g : factors) {
        require_same_field(q.field, g.field);
        q = detail::bipoly_divide_exact(q, g);
    }
    BiPoly back = q;
    for (const auto& g : factors) back = bipoly_mul(back, g);
    if (!bipoly_equal(back, F))
        fail("InexactDivision", "multiplying the cofactor back does not reproduce the polynomial");
    return q;
}

// ---- textual I/O ---------------------------------------------------------

// Univariate: "c0 + c1*X + c2*X^2 + ...", elements as "c0,c1,...".
inline std::string unipoly_to_string(const UniPoly& f) {
    const auto& F = f.field;
    if (f.is_zero()) return F.format_elem(F.zero());
    std::ostringstream os;
    for (long n = 0; n < static_cast<long>(f.coeffs.size()); ++n) {
        if (n) os << " + ";
        os << F.format_elem(f.coeffs[n]);
        if (n == 1)
            os << "*X";
        else if (n > 1)
            os << "*X^" << n;
    }
    return os.str();
}

// Accepts the writer's dense form as well as sparse "c*X^n" term lists.
inline UniPoly unipoly_from_string(const FieldCtx& F, const std::string& text) {
    std::vector<std::pair<long, Elem>> terms;
    std::string term;
    std::istringstream is(text);
    long position = 0;
    while (std::getline(is, term, '+')) {
        // trim spaces
        auto b = term.find_first_not_of(" \t");
        auto e = term.find_last_not_of(" \t");
        if (b == std::string::npos) { ++position; continue; }
        term = term.substr(b, e - b + 1);
        long n;
        std::string celem;
        auto star = term.find('*');
        if (star == std::string::npos) {
            if (term == "X") {
                n = 1;
                celem = "1";
            } else if (term.rfind("X^", 0) == 0) {
                n = std::stol(term.substr(2));
                celem = "1";
            } else {
                n = position;  // dense positional form
                celem = term;
            }
        } else {
            celem = term.substr(0, star);
            std::string xs = term.substr(star + 1);
            if (xs == "X")
                n = 1;
            else if (xs.rfind("X^", 0) == 0)
                n = std::stol(xs.substr(2));
            else
                fail("BadPolynomial", "cannot parse term '" + term + "'");
        }
        terms.emplace_back(n, F.parse_elem(celem));
        ++position;
    }
    return make_unipoly(F, terms);
}

// Bivariate: "(i,j):elem" triples joined by "; ".
inline std::string bipoly_to_string(const BiPoly& F) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [ij, c] : F.terms) {
        if (!first) os << "; ";
        first = false;
        os << '(' << ij.first << ',' << ij.second << "):" << F.field.format_elem(c);
    }
    return os.str();
}

inline BiPoly bipoly_from_string(const FieldCtx& F, const std::string& text) {
    BiPoly r{F, {}};
    std::string trip;
    std::istringstream is(text);
    while (std::getline(is, trip, ';')) {
        auto b = trip.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        auto open = trip.find('(');
        auto comma = trip.find(',', open);
        auto close = trip.find(')', comma);
        auto colon = trip.find(':', close);
        if (open == std::string::npos || comma == std::string::npos ||
            close == std::string::npos || colon == std::string::npos)
            fail("BadPolynomial", "cannot parse bivariate term '" + trip + "'");
        long i = std::stol(trip.substr(open + 1, comma - open - 1));
        long j = std::stol(trip.substr(comma + 1, close - comma - 1));
        bipoly_add_term(r, i, j, F.parse_elem(trip.substr(colon + 1)));
    }
    return r;
}

}  // namespace planarium
