// scalar.hpp: the coefficient field abstraction.
//
// The tropical stack is generic over the coefficient scalar. Rational gives
// exact subdivisions (the default for parsed input and patchworking
// liftings); double is used when coefficients arrive as floating logs of
// magnitudes, and carries a fixed 1e-9 comparison tolerance.
#pragma once

#include <cmath>
#include <cstdlib>

#include "tropcurve/rational.hpp"

namespace tropcurve {

template <class K>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static int sign(const Rational& v, const Rational& /*scale*/) { return v.sign(); }
    static bool eq(const Rational& a, const Rational& b) { return a == b; }
    static double to_double(const Rational& v) { return v.to_double(); }
    static Rational from_int(long long n) { return Rational(n); }
    static Rational abs(const Rational& v) { return v.sign() < 0 ? -v : v; }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static constexpr double tol = 1e-9;
    // Sign with the documented tolerance, relative to the magnitude of the
    // terms that produced the value.
    static int sign(double v, double scale) {
        double cut = tol * std::max(1.0, std::fabs(scale));
        if (v > cut) return 1;
        if (v < -cut) return -1;
        return 0;
    }
    static bool eq(double a, double b) {
        return std::fabs(a - b) <= tol * std::max(1.0, std::max(std::fabs(a), std::fabs(b)));
    }
    static double to_double(double v) { return v; }
    static double from_int(long long n) { return static_cast<double>(n); }
    static double abs(double v) { return std::fabs(v); }
};

}  // namespace tropcurve
