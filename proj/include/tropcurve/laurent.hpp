// laurent.hpp: complex Laurent polynomials on the torus (C*)^2, their
// logarithmic derivatives, the logarithmic Gauss map and the inflection
// eliminant.
//
// The log-derivative D_z = z d/dz acts on the coefficient map by
// multiplying the (j,k) entry by j, so all operators here are exact
// support-level operations with no division.
#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "tropcurve/tropical.hpp"

namespace tropcurve {

using cdouble = std::complex<double>;

struct TorusPoint {
    cdouble z{};
    cdouble w{};
};

struct ComplexLaurentPoly {
    std::map<LatticePoint, cdouble> coeffs;  // nonzero entries only

    std::vector<LatticePoint> support() const {
        std::vector<LatticePoint> s;
        for (const auto& [p, c] : coeffs) s.push_back(p);
        return s;
    }
    LatticePolygon newton_polygon() const {
        if (coeffs.empty()) throw std::invalid_argument("Laurent polynomial: empty support");
        return convex_hull(support());
    }
};

inline cdouble pow_int(cdouble base, long long e) {
    if (e == 0) return 1.0;
    if (e < 0) return 1.0 / pow_int(base, -e);
    cdouble acc = 1.0, b = base;
    for (long long n = e; n > 0; n >>= 1) {
        if (n & 1) acc *= b;
        b *= b;
    }
    return acc;
}

inline cdouble eval(const ComplexLaurentPoly& f, const TorusPoint& p) {
    cdouble s = 0.0;
    for (const auto& [m, c] : f.coeffs) s += c * pow_int(p.z, m.j) * pow_int(p.w, m.k);
    return s;
}

// Sum of term magnitudes at p; the natural scale for relative residuals.
inline double eval_scale(const ComplexLaurentPoly& f, const TorusPoint& p) {
    double s = 0.0;
    for (const auto& [m, c] : f.coeffs)
        s += std::abs(c) * std::abs(pow_int(p.z, m.j)) * std::abs(pow_int(p.w, m.k));
    return s;
}

enum class Axis { Z, W };

// D_z f = z df/dz (axis Z) or D_w f = w df/dw (axis W).
inline ComplexLaurentPoly log_derivative(const ComplexLaurentPoly& f, Axis axis) {
    ComplexLaurentPoly g;
    for (const auto& [m, c] : f.coeffs) {
        long long mult = axis == Axis::Z ? m.j : m.k;
        if (mult != 0) g.coeffs[m] = c * static_cast<double>(mult);
    }
    return g;
}

struct SingularPointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// gamma_f(p) = (D_z f(p) : D_w f(p)), normalized so the larger-magnitude
// entry is 1.
inline std::pair<cdouble, cdouble> log_gauss(const ComplexLaurentPoly& f, const TorusPoint& p) {
    ComplexLaurentPoly dz = log_derivative(f, Axis::Z), dw = log_derivative(f, Axis::W);
    cdouble a = eval(dz, p), b = eval(dw, p);
    double scale = eval_scale(dz, p) + eval_scale(dw, p);
    if (std::abs(a) <= 1e-12 * std::max(scale, 1e-300) &&
        std::abs(b) <= 1e-12 * std::max(scale, 1e-300))
        throw SingularPointError("log_gauss: singular point of the curve (both log-derivatives "
                                 "vanish)");
    if (std::abs(a) >= std::abs(b)) return {1.0, b / a};
    return {a / b, 1.0};
}

namespace detail {

// Multiply-accumulate with cancellation mass, so that identically-zero
// results of the eliminant (e.g. for binomial curves) are recognized as
// such instead of surviving as roundoff dust.
struct PolyAccumulator {
    std::map<LatticePoint, std::pair<cdouble, double>> terms;  // (sum, mass)

    void add_product(const ComplexLaurentPoly& a, const ComplexLaurentPoly& b,
                     const ComplexLaurentPoly& c, double factor) {
        for (const auto& [ma, ca] : a.coeffs)
            for (const auto& [mb, cb] : b.coeffs)
                for (const auto& [mc, cc] : c.coeffs) {
                    LatticePoint m{ma.j + mb.j + mc.j, ma.k + mb.k + mc.k};
                    cdouble v = factor * ca * cb * cc;
                    auto& slot = terms[m];
                    slot.first += v;
                    slot.second += std::abs(v);
                }
    }

    ComplexLaurentPoly finish(double rel_cancel_tol = 1e-12) const {
        ComplexLaurentPoly out;
        for (const auto& [m, sv] : terms)
            if (std::abs(sv.first) > rel_cancel_tol * sv.second && sv.first != 0.0)
                out.coeffs[m] = sv.first;
        return out;
    }
};

}  // namespace detail

// The inflection eliminant
//   h = (D_w f)^2 D_z D_z f - 2 (D_z f)(D_w f) D_z D_w f + (D_z f)^2 D_w D_w f.
// Zeros of h on smooth points of V_f are the critical points of the
// logarithmic Gauss map (the inflection condition of f(e^u, e^v) in the
// flat log coordinates). Identically-zero h comes back as an empty map.
inline ComplexLaurentPoly inflection_poly(const ComplexLaurentPoly& f) {
    ComplexLaurentPoly dz = log_derivative(f, Axis::Z);
    ComplexLaurentPoly dw = log_derivative(f, Axis::W);
    ComplexLaurentPoly dzz = log_derivative(dz, Axis::Z);
    ComplexLaurentPoly dzw = log_derivative(dz, Axis::W);
    ComplexLaurentPoly dww = log_derivative(dw, Axis::W);
    detail::PolyAccumulator acc;
    acc.add_product(dw, dw, dzz, 1.0);
    acc.add_product(dz, dw, dzw, -2.0);
    acc.add_product(dz, dz, dww, 1.0);
    return acc.finish();
}

// --- parsing -----------------------------------------------------------------

namespace detail {

// Complex literal: real or pure-imaginary outside parentheses ("2", "-1.5i",
// "i"); a full a+bi form must be parenthesized, e.g. "(1-2i)*z*w".
inline cdouble parse_complex_literal(Cursor& cur) {
    cur.skip_ws();
    if (cur.accept('(')) {
        double re = 0.0, im = 0.0;
        cur.skip_ws();
        bool neg = cur.accept('-');
        if (!neg) cur.accept('+');
        if (cur.peek() == 'i') {
            ++cur.i;
            im = neg ? -1.0 : 1.0;
        } else {
            Rational first = parse_rational_literal(cur);
            double v = (neg ? -1.0 : 1.0) * first.to_double();
            cur.skip_ws();
            if (cur.peek() == 'i') {
                ++cur.i;
                im = v;
            } else {
                re = v;
                cur.skip_ws();
                if (cur.peek() == '+' || cur.peek() == '-') {
                    bool neg2 = cur.s[cur.i] == '-';
                    ++cur.i;
                    cur.skip_ws();
                    double v2 = 1.0;
                    if (cur.peek() != 'i') v2 = parse_rational_literal(cur).to_double();
                    if (!cur.accept('i')) throw ParseError("expected 'i' in complex literal", cur.i);
                    im = neg2 ? -v2 : v2;
                }
            }
        }
        if (!cur.accept(')')) throw ParseError("expected ')' after complex literal", cur.i);
        return {re, im};
    }
    if (cur.peek() == 'i') {
        ++cur.i;
        return {0.0, 1.0};
    }
    Rational v = parse_rational_literal(cur);
    cur.skip_ws();
    if (cur.peek() == 'i') {
        ++cur.i;
        return {0.0, v.to_double()};
    }
    return {v.to_double(), 0.0};
}

}  // namespace detail

// Same grammar as the tropical parser, with complex coefficients and the
// variables named z/w (x/y accepted as synonyms). Duplicate monomials add.
inline ComplexLaurentPoly parse_laurent_poly(const std::string& text) {
    detail::Cursor cur{text};
    ComplexLaurentPoly poly;
    bool negate = cur.accept('-');
    for (;;) {
        cdouble coeff{1.0, 0.0};
        bool saw = false;
        char c = cur.peek();
        if (c != 'x' && c != 'y' && c != 'z' && c != 'w') {
            coeff = detail::parse_complex_literal(cur);
            saw = true;
        }
        LatticePoint mono{0, 0};
        for (;;) {
            cur.skip_ws();
            size_t save = cur.i;
            bool star = cur.accept('*');
            char v = cur.peek();
            if (v == 'x' || v == 'y' || v == 'z' || v == 'w') {
                ++cur.i;
                long long e = 1;
                if (cur.accept('^')) e = detail::parse_exponent(cur);
                if (v == 'x' || v == 'z') mono.j += e;
                else mono.k += e;
                saw = true;
            } else {
                if (star) throw ParseError("expected variable after '*'", cur.i);
                cur.i = save;
                break;
            }
        }
        if (!saw) throw ParseError("expected term", cur.i);
        if (negate) coeff = -coeff;
        poly.coeffs[mono] += coeff;
        if (poly.coeffs[mono] == 0.0) poly.coeffs.erase(mono);
        if (cur.done()) break;
        if (cur.accept('+')) negate = cur.accept('-');
        else if (cur.accept('-')) negate = true;
        else throw ParseError("expected '+' between terms", cur.i);
        if (cur.done()) throw ParseError("dangling '+' at end of input", cur.i);
    }
    if (poly.coeffs.empty()) throw ParseError("empty support (all terms cancelled)", 0);
    return poly;
}

}  // namespace tropcurve
