// subdivision.hpp: regular subdivisions of the Newton polygon.
//
// The subdivision induced by a tropical polynomial is the projection of the
// upper faces of the lifted support {(j,k,a_jk)} (upper hull = max-plus
// convention). Cells carry their extreme points only; support points lying
// in the relative interior of a face are not cell vertices, which is exactly
// what distinguishes a non-strictly-convex lifting.
#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

#include "tropcurve/tropical.hpp"

namespace tropcurve {

template <class K>
struct RegularSubdivision {
    LatticePolygon newton;
    std::vector<LatticePolygon> cells;

    struct InteriorEdge {
        std::array<LatticePoint, 2> segment;  // Delta_E, endpoints sorted
        std::array<int, 2> cells;             // the two adjacent cell indices
    };
    struct BoundaryEdge {
        std::array<LatticePoint, 2> segment;
        int cell;
    };
    std::vector<InteriorEdge> interior_edges;
    std::vector<BoundaryEdge> boundary_edges;
};

namespace detail {

// Orientation of the lifted point (q,hq) against the plane through the
// lifted triple (p0,h0),(p1,h1),(p2,h2), where p0p1p2 is ccw in the plane.
// Positive = strictly above.
template <class K>
int lifted_side(const LatticePoint& p0, const K& h0, const LatticePoint& p1, const K& h1,
                const LatticePoint& p2, const K& h2, const LatticePoint& q, const K& hq) {
    using T = scalar_traits<K>;
    LatticeVector a = p1 - p0, b = p2 - p0, c = q - p0;
    K A = h1 - h0, B = h2 - h0, C = hq - h0;
    K t1 = A * T::from_int(cross(b, c));
    K t2 = B * T::from_int(cross(a, c));
    K t3 = C * T::from_int(cross(a, b));
    K det = t1 - t2 + t3;
    K scale = T::abs(t1) + T::abs(t2) + T::abs(t3);
    return T::sign(det, scale);
}

inline std::vector<LatticePoint> canonical_cell_key(const LatticePolygon& poly) {
    std::vector<LatticePoint> key = poly.vertices;
    std::sort(key.begin(), key.end());
    return key;
}

}  // namespace detail

// Projection of the upper faces of the lifted support. O(n^4) plane
// enumeration with exact predicates; supports here are small (tens of
// points at most).
template <class K>
RegularSubdivision<K> regular_subdivision(const TropicalPolynomial<K>& poly) {
    const auto pts = poly.support();
    RegularSubdivision<K> sub;
    sub.newton = convex_hull(pts);
    if (sub.newton.dimension() != 2)
        throw std::invalid_argument("regular_subdivision: degenerate Newton polygon");

    auto height = [&](const LatticePoint& p) { return poly.coeffs.at(p); };

    std::map<std::vector<LatticePoint>, LatticePolygon> found;
    const size_t n = pts.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                LatticePoint p0 = pts[i], p1 = pts[j], p2 = pts[k];
                long long orient = cross(p1 - p0, p2 - p0);
                if (orient == 0) continue;
                if (orient < 0) std::swap(p1, p2);
                bool is_upper = true;
                std::vector<LatticePoint> on = {p0, p1, p2};
                for (size_t m = 0; m < n && is_upper; ++m) {
                    const LatticePoint& q = pts[m];
                    if (q == p0 || q == p1 || q == p2) continue;
                    int s = detail::lifted_side(p0, height(p0), p1, height(p1), p2, height(p2), q,
                                                height(q));
                    if (s > 0) is_upper = false;
                    else if (s == 0) on.push_back(q);
                }
                if (!is_upper) continue;
                LatticePolygon cell = convex_hull(on);
                found.emplace(detail::canonical_cell_key(cell), cell);
            }

    for (auto& [key, cell] : found) sub.cells.push_back(cell);

    // Collect cell sides; a side shared by two cells is an interior edge of
    // the subdivision, a side owned by one cell lies on the Newton polygon
    // boundary.
    std::map<std::array<LatticePoint, 2>, std::vector<int>> sides;
    for (size_t ci = 0; ci < sub.cells.size(); ++ci) {
        const auto& vs = sub.cells[ci].vertices;
        for (size_t s = 0; s < vs.size(); ++s) {
            LatticePoint a = vs[s], b = vs[(s + 1) % vs.size()];
            if (b < a) std::swap(a, b);
            sides[{a, b}].push_back(static_cast<int>(ci));
        }
    }
    for (const auto& [seg, owners] : sides) {
        if (owners.size() == 2) {
            sub.interior_edges.push_back({seg, {owners[0], owners[1]}});
        } else if (owners.size() == 1) {
            sub.boundary_edges.push_back({seg, owners[0]});
        } else {
            throw std::logic_error("regular_subdivision: side shared by >2 cells");
        }
    }
    return sub;
}

// True iff every cell is a lattice triangle of Euclidean area 1/2 (the
// dual tropical curve is then smooth).
template <class K>
bool is_smooth(const RegularSubdivision<K>& sub) {
    for (const auto& cell : sub.cells)
        if (cell.vertices.size() != 3 || !(cell.area() == Rational(1, 2))) return false;
    return true;
}

// True iff every support point is a vertex of some cell, i.e. the lifting
// is strictly convex on the support.
template <class K>
bool is_strictly_convex_on_support(const TropicalPolynomial<K>& poly,
                                   const RegularSubdivision<K>& sub) {
    for (const auto& [p, c] : poly.coeffs) {
        bool vertex = false;
        for (const auto& cell : sub.cells) {
            for (const auto& v : cell.vertices)
                if (v == p) { vertex = true; break; }
            if (vertex) break;
        }
        if (!vertex) return false;
    }
    return true;
}

}  // namespace tropcurve
