// Independent certification of the inflection eliminant: follow the curve
// V_f through a point by multiplicative offsets, evaluate an affine chart
// of the Gauss map at five parameter values, and compare the
// finite-difference first derivative against the second. The quotient is
// tiny exactly at critical points of the Gauss map. Nothing here touches
// inflection_poly; only f itself and its log-derivatives are used.
#pragma once

#include <limits>
#include <optional>

#include "tropcurve/laurent.hpp"

namespace testutil {

using namespace tropcurve;

inline std::optional<double> gauss_fd_quotient(const ComplexLaurentPoly& f, TorusPoint p,
                                               double delta = 5e-3) {
    ComplexLaurentPoly dzp = log_derivative(f, Axis::Z), dwp = log_derivative(f, Axis::W);
    const cdouble a0 = eval(dzp, p), b0 = eval(dwp, p);
    const bool param_by_u = std::abs(b0) >= std::abs(a0);  // solve the steeper coordinate
    const bool chart_ba = std::abs(a0) >= std::abs(b0);

    // Point of V_f at parameter offset s (log units), via a predicted step
    // and 1-D Newton in the dependent coordinate, polished to the
    // evaluation floor.
    auto on_curve = [&](double s) -> std::optional<TorusPoint> {
        TorusPoint q = p;
        cdouble slope =
            param_by_u ? -a0 / b0 : -b0 / a0;  // d(log dependent)/d(log parameter) at p
        if (param_by_u) {
            q.z = p.z * std::exp(s);
            q.w = p.w * std::exp(slope * s);
        } else {
            q.w = p.w * std::exp(s);
            q.z = p.z * std::exp(slope * s);
        }
        for (int it = 0; it < 60; ++it) {
            cdouble fv = eval(f, q);
            cdouble g = param_by_u ? eval(dwp, q) : eval(dzp, q);
            if (std::abs(g) == 0.0) return std::nullopt;
            cdouble step = -fv / g;
            if (std::abs(step) > 1.0) step /= std::abs(step);
            if (param_by_u) q.w *= std::exp(step);
            else q.z *= std::exp(step);
            if (std::abs(step) < 1e-16) break;
        }
        if (std::abs(eval(f, q)) > 1e-9 * std::max(eval_scale(f, q), 1e-300)) return std::nullopt;
        return q;
    };

    auto chart = [&](const TorusPoint& q) -> std::optional<cdouble> {
        cdouble a = eval(dzp, q), b = eval(dwp, q);
        if (chart_ba) {
            if (std::abs(a) == 0.0) return std::nullopt;
            return b / a;
        }
        if (std::abs(b) == 0.0) return std::nullopt;
        return a / b;
    };

    const double s[5] = {-2 * delta, -delta, 0.0, delta, 2 * delta};
    cdouble psi[5];
    for (int i = 0; i < 5; ++i) {
        std::optional<TorusPoint> q = (i == 2) ? std::optional<TorusPoint>(p) : on_curve(s[i]);
        if (!q) return std::nullopt;
        auto v = chart(*q);
        if (!v) return std::nullopt;
        psi[i] = *v;
    }
    cdouble d1 = (8.0 * (psi[3] - psi[1]) - (psi[4] - psi[0])) / (12.0 * delta);
    cdouble d2 = (psi[3] - 2.0 * psi[2] + psi[1]) / (delta * delta);
    if (std::abs(d2) == 0.0) return std::nullopt;
    return std::abs(d1) / std::abs(d2);
}

}  // namespace testutil
