// tropical.hpp: max-plus numbers and tropical polynomials in two variables.
//
// Convention fixed project-wide: tropical sum is max, tropical product is +,
// with -infinity as the bottom element. Polynomials store only the finite
// coefficients; a monomial absent from the map has coefficient -infinity.
#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropcurve/lattice.hpp"
#include "tropcurve/scalar.hpp"

namespace tropcurve {

// R union {-infinity} with max-plus arithmetic. -infinity is neutral for
// the sum and absorbing for the product.
template <class K>
struct TropicalNumber {
    bool finite = false;
    K value{};

    static TropicalNumber bottom() { return {}; }
    static TropicalNumber of(const K& v) { return {true, v}; }

    friend TropicalNumber operator+(const TropicalNumber& a, const TropicalNumber& b) {
        if (!a.finite) return b;
        if (!b.finite) return a;
        return {true, a.value < b.value ? b.value : a.value};
    }
    friend TropicalNumber operator*(const TropicalNumber& a, const TropicalNumber& b) {
        if (!a.finite || !b.finite) return bottom();
        return {true, a.value + b.value};
    }
    friend bool operator==(const TropicalNumber& a, const TropicalNumber& b) {
        if (a.finite != b.finite) return false;
        return !a.finite || a.value == b.value;
    }
};

template <class K>
struct Point2 {
    K x{};
    K y{};
    friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
};

// Finite support in Z^2 with finite coefficients; monomials not present
// are tropically -infinity.
template <class K>
struct TropicalPolynomial {
    std::map<LatticePoint, K> coeffs;

    std::vector<LatticePoint> support() const {
        std::vector<LatticePoint> s;
        s.reserve(coeffs.size());
        for (const auto& [p, c] : coeffs) s.push_back(p);
        return s;
    }

    LatticePolygon newton_polygon() const {
        if (coeffs.empty()) throw std::invalid_argument("tropical polynomial: empty support");
        return convex_hull(support());
    }
};

template <class K>
struct TropEvalResult {
    K value{};
    std::set<LatticePoint> argmax;
};

// max over the support of (j*x + k*y + a_jk), with the set of support points
// attaining it. Exact for Rational; within scalar_traits<double>::tol for
// floating coefficients.
template <class K>
TropEvalResult<K> trop_eval(const TropicalPolynomial<K>& p, const Point2<K>& at) {
    using T = scalar_traits<K>;
    if (p.coeffs.empty()) throw std::invalid_argument("trop_eval: empty support");
    bool first = true;
    K best{};
    K scale{};
    for (const auto& [q, a] : p.coeffs) {
        K v = T::from_int(q.j) * at.x + T::from_int(q.k) * at.y + a;
        K mag = T::abs(v);
        if (first || scale < mag) scale = mag;
        if (first || best < v) best = v;
        first = false;
    }
    TropEvalResult<K> r;
    r.value = best;
    for (const auto& [q, a] : p.coeffs) {
        K v = T::from_int(q.j) * at.x + T::from_int(q.k) * at.y + a;
        if (T::sign(best - v, scale) == 0) r.argmax.insert(q);
    }
    return r;
}

// --- parsing ----------------------------------------------------------------

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

namespace detail {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r')) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
};

inline long long parse_exponent(Cursor& cur) {
    cur.skip_ws();
    bool paren = cur.accept('(');
    cur.skip_ws();
    size_t start = cur.i;
    if (cur.i < cur.s.size() && (cur.s[cur.i] == '-' || cur.s[cur.i] == '+')) ++cur.i;
    size_t digits = cur.i;
    while (cur.i < cur.s.size() && isdigit(static_cast<unsigned char>(cur.s[cur.i]))) ++cur.i;
    if (cur.i == digits) throw ParseError("expected integer exponent", start);
    long long e = std::stoll(cur.s.substr(start, cur.i - start));
    if (paren && !cur.accept(')')) throw ParseError("expected ')' after exponent", cur.i);
    return e;
}

// Numeric literal: decimal or p/q.
inline Rational parse_rational_literal(Cursor& cur) {
    cur.skip_ws();
    size_t start = cur.i;
    if (cur.i < cur.s.size() && (cur.s[cur.i] == '-' || cur.s[cur.i] == '+')) ++cur.i;
    size_t digits = cur.i;
    while (cur.i < cur.s.size() &&
           (isdigit(static_cast<unsigned char>(cur.s[cur.i])) || cur.s[cur.i] == '.'))
        ++cur.i;
    if (cur.i == digits) throw ParseError("expected numeric literal", start);
    std::string head = cur.s.substr(start, cur.i - start);
    if (cur.i < cur.s.size() && cur.s[cur.i] == '/') {
        ++cur.i;
        size_t dstart = cur.i;
        if (cur.i < cur.s.size() && cur.s[cur.i] == '-') ++cur.i;
        while (cur.i < cur.s.size() && isdigit(static_cast<unsigned char>(cur.s[cur.i]))) ++cur.i;
        if (cur.i == dstart) throw ParseError("expected denominator", dstart);
        long long q = std::stoll(cur.s.substr(dstart, cur.i - dstart));
        Rational num = Rational::parse(head);
        if (!num.is_integer()) throw ParseError("decimal numerator in p/q literal", start);
        return Rational(num.num(), q);
    }
    try {
        return Rational::parse(head);
    } catch (const std::exception&) {
        throw ParseError("bad numeric literal '" + head + "'", start);
    }
}

// One monomial: [coeff] ['*'] [x[^e]] ['*'] [y[^e]]. A missing coefficient
// means the tropical multiplicative unit 0.
inline std::pair<LatticePoint, Rational> parse_trop_term(Cursor& cur) {
    Rational coeff(0);
    bool saw_anything = false;
    char c = cur.peek();
    if (c != 'x' && c != 'y') {
        coeff = parse_rational_literal(cur);
        saw_anything = true;
    }
    LatticePoint mono{0, 0};
    for (;;) {
        cur.skip_ws();
        size_t save = cur.i;
        bool star = cur.accept('*');
        char v = cur.peek();
        if (v == 'x' || v == 'y') {
            ++cur.i;
            long long e = 1;
            if (cur.accept('^')) e = parse_exponent(cur);
            if (v == 'x') mono.j += e; else mono.k += e;
            saw_anything = true;
        } else {
            if (star) throw ParseError("expected variable after '*'", cur.i);
            cur.i = save;
            break;
        }
    }
    if (!saw_anything) throw ParseError("expected term", cur.i);
    return {mono, coeff};
}

}  // namespace detail

// Grammar: terms joined by '+' (max-plus sum); each term is
//   <coeff> | <coeff>*x^<j> | <coeff>*x^<j>*y^<k>
// with '*' optional, exponent 1 omissible, negative exponents in
// parentheses, coefficients decimal or p/q. '-' before a term negates its
// coefficient. Duplicate monomials combine by max.
inline TropicalPolynomial<Rational> parse_tropical_poly(const std::string& text) {
    detail::Cursor cur{text};
    TropicalPolynomial<Rational> poly;
    bool negate = cur.accept('-');
    for (;;) {
        auto [mono, coeff] = detail::parse_trop_term(cur);
        if (negate) coeff = -coeff;
        auto it = poly.coeffs.find(mono);
        if (it == poly.coeffs.end()) poly.coeffs[mono] = coeff;
        else if (it->second < coeff) it->second = coeff;
        if (cur.done()) break;
        if (cur.accept('+')) negate = cur.accept('-');
        else if (cur.accept('-')) negate = true;
        else throw ParseError("expected '+' between terms", cur.i);
        if (cur.done()) throw ParseError("dangling '+' at end of input", cur.i);
    }
    if (poly.coeffs.empty()) throw ParseError("empty support", 0);
    return poly;
}

using TropicalPolynomialQ = TropicalPolynomial<Rational>;
using TropicalPolynomialD = TropicalPolynomial<double>;

}  // namespace tropcurve
