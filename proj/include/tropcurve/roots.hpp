// roots.hpp: simultaneous root finding for univariate complex polynomials.
//
// Aberth-Ehrlich iteration with initial moduli read off the upper convex
// hull of (i, log|c_i|) (the tropical roots of the coefficient sequence),
// angles perturbed off symmetry axes. The hull-based start matters here:
// resultants of rescaled curve systems have coefficients spanning many
// orders of magnitude, and a single starting circle stalls on them.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "tropcurve/laurent.hpp"

namespace tropcurve {

struct RootsError : std::runtime_error {
    std::vector<double> residuals;
    RootsError(const std::string& msg, std::vector<double> res)
        : std::runtime_error(msg), residuals(std::move(res)) {}
};

struct RootWithMult {
    cdouble value;
    int mult = 1;
};

namespace detail {

// p and p'/p at z, evaluated through the reversed polynomial when |z| > 1
// so that high degrees do not overflow. Returns the Newton correction
// N = p/p' and the relative backward-error residual.
struct EvalResult {
    cdouble newton;
    double rel_residual;
    bool derivative_ok;
};

inline EvalResult eval_newton(const std::vector<cdouble>& c, cdouble z) {
    const int n = static_cast<int>(c.size()) - 1;
    EvalResult r{};
    if (std::abs(z) <= 1.0) {
        cdouble p = 0.0, dp = 0.0;
        double scale = 0.0;
        for (int i = n; i >= 0; --i) {
            dp = dp * z + p;
            p = p * z + c[i];
            scale = scale * std::abs(z) + std::abs(c[i]);
        }
        r.rel_residual = std::abs(p) / std::max(scale, 1e-300);
        r.derivative_ok = std::abs(dp) > 0.0;
        r.newton = r.derivative_ok ? p / dp : cdouble(0.0);
        return r;
    }
    // p(z) = z^n q(u) with u = 1/z and q(u) = c_n + c_{n-1} u + ... + c_0 u^n;
    // then N = p/p' = z q / (n q - u q').
    cdouble u = 1.0 / z;
    cdouble q = 0.0, dq = 0.0;
    double scale = 0.0;
    for (int i = 0; i <= n; ++i) {
        dq = dq * u + q;
        q = q * u + c[i];
        scale = scale * std::abs(u) + std::abs(c[i]);
    }
    r.rel_residual = std::abs(q) / std::max(scale, 1e-300);
    cdouble denom = static_cast<double>(n) * q - u * dq;
    r.derivative_ok = std::abs(denom) > 0.0;
    r.newton = r.derivative_ok ? z * q / denom : cdouble(0.0);
    return r;
}

// Initial guesses from the upper hull of (i, log|c_i|): one circle of
// moduli per hull segment.
inline std::vector<cdouble> tropical_initial_guesses(const std::vector<cdouble>& c) {
    const int n = static_cast<int>(c.size()) - 1;
    std::vector<std::pair<int, double>> pts;
    for (int i = 0; i <= n; ++i)
        if (c[i] != 0.0) pts.push_back({i, std::log(std::abs(c[i]))});
    std::vector<std::pair<int, double>> hull;  // upper hull, increasing i
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            if ((b.second - a.second) * (p.first - a.first) <=
                (p.second - a.second) * (b.first - a.first))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    std::vector<cdouble> guesses;
    guesses.reserve(n);
    for (size_t s = 0; s + 1 < hull.size(); ++s) {
        int i1 = hull[s].first, i2 = hull[s + 1].first;
        double radius = std::exp((hull[s].second - hull[s + 1].second) / (i2 - i1));
        radius = std::clamp(radius, 1e-150, 1e150);
        int m = i2 - i1;
        for (int k = 0; k < m; ++k) {
            double theta =
                2.0 * std::numbers::pi * (k + 0.5) / m + 0.79 * (static_cast<double>(s) + 1.0);
            guesses.push_back(std::polar(radius, theta));
        }
    }
    return guesses;
}

}  // namespace detail

// All roots of c[0] + c[1] z + ... + c[n] z^n, coefficients in ascending
// order. Leading coefficients below 1e-14 of the largest are stripped;
// exact zero trailing coefficients contribute roots at the origin. Nearby
// converged iterates (within 1e-5 relative) merge into one root with
// multiplicity.
inline std::vector<RootWithMult> univariate_roots(std::vector<cdouble> coeffs) {
    for (const auto& c : coeffs)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw std::invalid_argument("univariate_roots: non-finite coefficient");
    double cmax = 0.0;
    for (const auto& c : coeffs) cmax = std::max(cmax, std::abs(c));
    if (cmax == 0.0) throw std::invalid_argument("univariate_roots: zero polynomial");
    while (!coeffs.empty() && std::abs(coeffs.back()) <= 1e-14 * cmax) coeffs.pop_back();

    int zero_roots = 0;
    while (!coeffs.empty() && coeffs.front() == 0.0) {
        coeffs.erase(coeffs.begin());
        ++zero_roots;
    }
    std::vector<RootWithMult> out;
    if (zero_roots > 0) out.push_back({cdouble(0.0), zero_roots});
    const int n = static_cast<int>(coeffs.size()) - 1;
    if (n < 1) {
        if (out.empty())
            throw std::invalid_argument("univariate_roots: degree must be at least 1");
        return out;
    }

    std::vector<cdouble> roots;
    if (n == 1) {
        roots = {-coeffs[0] / coeffs[1]};
    } else if (n == 2) {
        // Stable quadratic: q = -(b + sign * sqrt(disc)) / 2 with the sign
        // that avoids cancellation.
        cdouble a = coeffs[2], b = coeffs[1], c0 = coeffs[0];
        cdouble disc = std::sqrt(b * b - 4.0 * a * c0);
        cdouble q = (std::real(std::conj(b) * disc) >= 0.0) ? -(b + disc) / 2.0
                                                            : -(b - disc) / 2.0;
        roots = {q / a, std::abs(q) > 0.0 ? c0 / q : cdouble(0.0)};
    } else {
        roots = detail::tropical_initial_guesses(coeffs);
        while (static_cast<int>(roots.size()) < n)
            roots.push_back(std::polar(1.0, 0.37 * (roots.size() + 1)));
        std::vector<bool> done(n, false);
        const int max_sweeps = 500;
        for (int sweep = 0; sweep < max_sweeps; ++sweep) {
            bool all_done = true;
            for (int i = 0; i < n; ++i) {
                if (done[i]) continue;
                auto ev = detail::eval_newton(coeffs, roots[i]);
                if (ev.rel_residual <= 1e-14) {
                    done[i] = true;
                    continue;
                }
                all_done = false;
                cdouble repulsion = 0.0;
                for (int j = 0; j < n; ++j)
                    if (j != i) {
                        cdouble d = roots[i] - roots[j];
                        if (std::abs(d) > 0.0) repulsion += 1.0 / d;
                    }
                cdouble step;
                if (ev.derivative_ok) {
                    cdouble denom = 1.0 - ev.newton * repulsion;
                    step = std::abs(denom) > 1e-300 ? ev.newton / denom : ev.newton;
                } else {
                    step = std::polar(1e-3 * (1.0 + std::abs(roots[i])), 0.91 * (i + 1));
                }
                roots[i] -= step;
            }
            if (all_done) break;
        }
        std::vector<double> residuals(n);
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            residuals[i] = detail::eval_newton(coeffs, roots[i]).rel_residual;
            worst = std::max(worst, residuals[i]);
        }
        if (worst > 1e-10)
            throw RootsError("univariate_roots: iteration did not converge", residuals);
    }

    // Cluster-merge for multiple roots: single-link within 1e-5 relative.
    std::vector<int> label(roots.size());
    for (size_t i = 0; i < roots.size(); ++i) label[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (label[x] != x) x = label[x] = label[label[x]];
        return x;
    };
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j) {
            double r = std::abs(roots[i] - roots[j]);
            if (r <= 1e-5 * (1.0 + std::max(std::abs(roots[i]), std::abs(roots[j]))))
                label[find(static_cast<int>(i))] = find(static_cast<int>(j));
        }
    std::map<int, std::vector<cdouble>> clusters;
    for (size_t i = 0; i < roots.size(); ++i) clusters[find(static_cast<int>(i))].push_back(roots[i]);
    for (const auto& [rep, members] : clusters) {
        cdouble mean = 0.0;
        for (const auto& r : members) mean += r;
        mean /= static_cast<double>(members.size());
        out.push_back({mean, static_cast<int>(members.size())});
    }
    return out;
}

// Flat list, each root repeated per multiplicity.
inline std::vector<cdouble> univariate_roots_flat(const std::vector<cdouble>& coeffs) {
    std::vector<cdouble> flat;
    for (const auto& r : univariate_roots(coeffs))
        for (int i = 0; i < r.mult; ++i) flat.push_back(r.value);
    return flat;
}

}  // namespace tropcurve
