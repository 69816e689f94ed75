// lattice.hpp: exact 2D lattice geometry.
//
// Integer points and vectors, primitive directions, convex hulls and
// lattice-point counts. Everything here is integer/rational arithmetic;
// downstream subdivision code relies on these predicates being exact.
#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropcurve/rational.hpp"

namespace tropcurve {

// Exponent pair (j,k) of a monomial z^j w^k.
struct LatticePoint {
    long long j = 0;
    long long k = 0;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

struct LatticeVector {
    long long dj = 0;
    long long dk = 0;
    friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
};

inline LatticeVector operator-(const LatticePoint& a, const LatticePoint& b) {
    return {a.j - b.j, a.k - b.k};
}
inline LatticePoint operator+(const LatticePoint& p, const LatticeVector& v) {
    return {p.j + v.dj, p.k + v.dk};
}
inline LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    return {a.dj + b.dj, a.dk + b.dk};
}
inline LatticeVector operator-(const LatticeVector& v) { return {-v.dj, -v.dk}; }
inline LatticeVector operator*(long long c, const LatticeVector& v) { return {c * v.dj, c * v.dk}; }

inline long long cross(const LatticeVector& a, const LatticeVector& b) {
    return a.dj * b.dk - a.dk * b.dj;
}
inline long long dot(const LatticeVector& a, const LatticeVector& b) {
    return a.dj * b.dj + a.dk * b.dk;
}

// Rotate by -90 degrees: (x,y) -> (y,-x). Maps the ccw boundary direction of
// a subdivision cell to the dual curve-edge direction.
inline LatticeVector rotate_cw(const LatticeVector& v) { return {v.dk, -v.dj}; }
inline LatticeVector rotate_ccw(const LatticeVector& v) { return {-v.dk, v.dj}; }

inline std::string to_string(const LatticePoint& p) {
    return "(" + std::to_string(p.j) + "," + std::to_string(p.k) + ")";
}

// v / gcd(|dj|,|dk|), same direction. The zero vector has no direction.
inline LatticeVector primitive_vector(const LatticeVector& v) {
    if (v.dj == 0 && v.dk == 0)
        throw std::invalid_argument("primitive_vector: no primitive direction for the zero vector");
    long long g = std::gcd(std::llabs(v.dj), std::llabs(v.dk));
    return {v.dj / g, v.dk / g};
}

// Number of lattice points on the closed segment [a,b] minus one.
inline long long lattice_length(const LatticePoint& a, const LatticePoint& b) {
    LatticeVector d = b - a;
    if (d.dj == 0 && d.dk == 0) return 0;
    return std::gcd(std::llabs(d.dj), std::llabs(d.dk));
}

// Bounded convex lattice polygon; vertices counterclockwise, no three
// consecutive collinear. Degenerate hulls (segment, point) are kept with
// 2 or 1 entries and flagged by dimension().
struct LatticePolygon {
    std::vector<LatticePoint> vertices;

    int dimension() const {
        if (vertices.size() <= 1) return 0;
        if (vertices.size() == 2) return 1;
        return 2;
    }

    // Shoelace / 2; zero for degenerate hulls.
    Rational area() const {
        if (vertices.size() < 3) return Rational(0);
        long long twice = 0;
        for (size_t i = 0; i < vertices.size(); ++i) {
            const LatticePoint& a = vertices[i];
            const LatticePoint& b = vertices[(i + 1) % vertices.size()];
            twice += a.j * b.k - a.k * b.j;
        }
        return Rational(twice, 2);
    }

    bool contains(const LatticePoint& q) const {
        if (vertices.empty()) return false;
        if (vertices.size() == 1) return q == vertices[0];
        if (vertices.size() == 2)
            return cross(vertices[1] - vertices[0], q - vertices[0]) == 0 &&
                   dot(q - vertices[0], q - vertices[1]) <= 0;
        for (size_t i = 0; i < vertices.size(); ++i) {
            const LatticePoint& a = vertices[i];
            const LatticePoint& b = vertices[(i + 1) % vertices.size()];
            if (cross(b - a, q - a) < 0) return false;
        }
        return true;
    }

    bool on_boundary(const LatticePoint& q) const {
        if (vertices.size() <= 2) return contains(q);
        for (size_t i = 0; i < vertices.size(); ++i) {
            const LatticePoint& a = vertices[i];
            const LatticePoint& b = vertices[(i + 1) % vertices.size()];
            if (cross(b - a, q - a) == 0 && dot(q - a, q - b) <= 0) return true;
        }
        return false;
    }
};

// Monotone-chain hull; returns extreme points only, counterclockwise,
// starting from the lexicographically smallest point.
inline LatticePolygon convex_hull(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.empty()) throw std::invalid_argument("convex_hull: empty point set");
    if (pts.size() <= 2) return LatticePolygon{pts};

    auto build = [&](auto begin, auto end) {
        std::vector<LatticePoint> chain;
        for (auto it = begin; it != end; ++it) {
            while (chain.size() >= 2 &&
                   cross(chain.back() - chain[chain.size() - 2], *it - chain[chain.size() - 2]) <= 0)
                chain.pop_back();
            chain.push_back(*it);
        }
        return chain;
    };
    std::vector<LatticePoint> lower = build(pts.begin(), pts.end());
    std::vector<LatticePoint> upper = build(pts.rbegin(), pts.rend());
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    if (lower.size() == 2 && lower[0] == lower[1]) lower.pop_back();  // collinear input
    // Collinear input collapses to its two extreme points.
    if (lower.size() > 2) {
        bool flat = true;
        for (size_t i = 2; i < lower.size() && flat; ++i)
            flat = cross(lower[1] - lower[0], lower[i] - lower[0]) == 0;
        if (flat) {
            LatticePoint lo = lower[0], hi = lower[0];
            for (const auto& p : lower) { lo = std::min(lo, p); hi = std::max(hi, p); }
            return LatticePolygon{{lo, hi}};
        }
    }
    return LatticePolygon{lower};
}

struct PolygonStats {
    LatticePolygon hull;
    int dimension = 0;
    Rational area;               // Euclidean (shoelace / 2)
    long long boundary_count = 0;  // lattice points on the hull boundary
    long long interior_count = 0;  // lattice points strictly inside
};

// Hull, area and lattice point counts. Interior points are counted by
// direct enumeration over the bounding box so that Pick's identity stays
// an independent cross-check in the tests.
inline PolygonStats polygon_stats(const std::vector<LatticePoint>& points) {
    if (points.empty()) throw std::invalid_argument("polygon_stats: at least one point required");
    PolygonStats st;
    st.hull = convex_hull(points);
    st.dimension = st.hull.dimension();
    st.area = st.hull.area();
    if (st.dimension == 0) {
        st.boundary_count = 1;
        return st;
    }
    if (st.dimension == 1) {
        st.boundary_count = lattice_length(st.hull.vertices[0], st.hull.vertices[1]) + 1;
        return st;
    }
    const auto& vs = st.hull.vertices;
    for (size_t i = 0; i < vs.size(); ++i)
        st.boundary_count += lattice_length(vs[i], vs[(i + 1) % vs.size()]);

    long long jmin = vs[0].j, jmax = vs[0].j, kmin = vs[0].k, kmax = vs[0].k;
    for (const auto& v : vs) {
        jmin = std::min(jmin, v.j); jmax = std::max(jmax, v.j);
        kmin = std::min(kmin, v.k); kmax = std::max(kmax, v.k);
    }
    if ((jmax - jmin + 1) * (kmax - kmin + 1) > 4'000'000)
        throw std::invalid_argument("polygon_stats: bounding box too large to enumerate");
    for (long long j = jmin; j <= jmax; ++j)
        for (long long k = kmin; k <= kmax; ++k) {
            LatticePoint q{j, k};
            if (st.hull.contains(q) && !st.hull.on_boundary(q)) ++st.interior_count;
        }
    return st;
}

// All lattice points of the closed polygon (used to validate patchworking
// supports against conv(B)).
inline std::vector<LatticePoint> lattice_points_of(const LatticePolygon& poly) {
    if (poly.vertices.empty()) return {};
    long long jmin = poly.vertices[0].j, jmax = jmin, kmin = poly.vertices[0].k, kmax = kmin;
    for (const auto& v : poly.vertices) {
        jmin = std::min(jmin, v.j); jmax = std::max(jmax, v.j);
        kmin = std::min(kmin, v.k); kmax = std::max(kmax, v.k);
    }
    std::vector<LatticePoint> out;
    for (long long j = jmin; j <= jmax; ++j)
        for (long long k = kmin; k <= kmax; ++k)
            if (poly.contains({j, k})) out.push_back({j, k});
    return out;
}

}  // namespace tropcurve
