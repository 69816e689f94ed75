// Shared test utilities: small constructors and randomized lifting
// generators with rejection so every sample is genuinely strictly convex
// and smooth.
#pragma once

#include <random>
#include <vector>

#include "tropcurve/curve.hpp"
#include "tropcurve/tropical.hpp"

namespace testutil {

using namespace tropcurve;

inline TropicalPolynomial<Rational> make_poly(
    std::initializer_list<std::pair<LatticePoint, Rational>> terms) {
    TropicalPolynomial<Rational> p;
    for (const auto& [m, c] : terms) p.coeffs[m] = c;
    return p;
}

inline std::vector<LatticePoint> dilated_triangle_points(long long d) {
    std::vector<LatticePoint> pts;
    for (long long j = 0; j <= d; ++j)
        for (long long k = 0; k + j <= d; ++k) pts.push_back({j, k});
    return pts;
}

// Heights -(j^2 + jk + k^2): strictly convex on every lattice polygon and
// induces the staircase triangulation (squares split along the NW-SE
// diagonal). The workhorse smooth lifting for dilated triangles.
inline TropicalPolynomial<Rational> staircase_poly(long long d) {
    TropicalPolynomial<Rational> p;
    for (const auto& q : dilated_triangle_points(d))
        p.coeffs[q] = Rational(-(q.j * q.j + q.j * q.k + q.k * q.k));
    return p;
}

// Random strictly convex lifting on dDelta whose subdivision is a
// unimodular triangulation: a random positive-definite quadratic form plus
// a small rational jitter, rejection-sampled against the exact predicates.
inline TropicalPolynomial<Rational> random_smooth_lifting(std::mt19937& rng, long long d) {
    const auto pts = dilated_triangle_points(d);
    std::uniform_int_distribution<long long> form(1, 3), jitter(0, 15);
    for (int attempt = 0; attempt < 200; ++attempt) {
        long long a = form(rng), c = form(rng);
        long long bmax = 2 * a < 2 * c ? 2 * a - 1 : 2 * c - 1;  // b^2 < 4ac for integer b
        std::uniform_int_distribution<long long> bdist(-bmax, bmax);
        long long b = bmax >= 0 ? bdist(rng) : 0;
        TropicalPolynomial<Rational> p;
        for (const auto& q : pts)
            p.coeffs[q] = Rational(-(a * q.j * q.j + b * q.j * q.k + c * q.k * q.k)) +
                          Rational(jitter(rng), 64);
        auto sub = regular_subdivision(p);
        if (is_smooth(sub) && is_strictly_convex_on_support(p, sub)) return p;
    }
    throw std::runtime_error("random_smooth_lifting: rejection sampling failed");
}

}  // namespace testutil

#include "tropcurve/patchwork.hpp"

namespace testutil {

inline PatchworkFamily family_from(const TropicalPolynomial<Rational>& p,
                                   const std::map<LatticePoint, int>& sign_overrides = {}) {
    PatchworkFamily fam;
    for (const auto& [m, c] : p.coeffs) {
        fam.support.push_back(m);
        fam.lifting.push_back(c);
        auto it = sign_overrides.find(m);
        fam.signs.push_back(it == sign_overrides.end() ? +1 : it->second);
    }
    return fam;
}

// 1 + z + w + t*zw (sign at (1,1) configurable).
inline PatchworkFamily square_family(int sign11 = +1) {
    PatchworkFamily fam;
    fam.support = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    fam.lifting = {Rational(0), Rational(0), Rational(0), Rational(1)};
    fam.signs = {+1, +1, +1, sign11};
    return fam;
}

inline PatchworkFamily line_family() {
    PatchworkFamily fam;
    fam.support = {{0, 0}, {1, 0}, {0, 1}};
    fam.lifting = {Rational(0), Rational(0), Rational(0)};
    fam.signs = {+1, +1, +1};
    return fam;
}

inline PatchworkFamily staircase_family(long long d,
                                        const std::map<LatticePoint, int>& sign_overrides = {}) {
    return family_from(staircase_poly(d), sign_overrides);
}

// Support {(1,0),(0,1),(1,1),(1,2)} with lifting (0,0,1,0): the smallest
// smooth curve whose bounded edge has same-parity opposite vertices.
inline PatchworkFamily slab_family(const std::map<LatticePoint, int>& sign_overrides = {}) {
    PatchworkFamily fam;
    fam.support = {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
    fam.lifting = {Rational(0), Rational(0), Rational(1, 4), Rational(0)};
    for (const auto& m : fam.support) {
        auto it = sign_overrides.find(m);
        fam.signs.push_back(it == sign_overrides.end() ? +1 : it->second);
    }
    return fam;
}

}  // namespace testutil
