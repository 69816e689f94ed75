// curve.hpp: embedded tropical plane curves dual to regular subdivisions.
//
// One curve vertex per 2-cell (the point where all of that cell's monomials
// attain the max simultaneously), one bounded edge per interior edge of the
// subdivision, one ray per boundary edge. Vertex coordinates are solved
// exactly in the coefficient field, so midpoints of bounded edges are exact
// reference values for the verification harness.
#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tropcurve/subdivision.hpp"

namespace tropcurve {

struct NotSmoothError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class K>
struct CurveEdge {
    std::array<int, 2> endpoints{};  // endpoint 0 is the (y,x)-smaller vertex
    LatticeVector u{};               // primitive, from endpoint 0 to endpoint 1
    long long weight = 1;            // lattice length of the dual segment
    std::array<LatticePoint, 2> dual{};  // v1, v2: endpoints of Delta_E
    // v3, v4: vertices of the two adjacent triangles away from Delta_E;
    // present only when both adjacent cells are triangles.
    std::optional<std::array<LatticePoint, 2>> opposite;
};

struct CurveRay {
    int base = 0;
    LatticeVector dir{};  // primitive, pointing away from the base vertex
    long long weight = 1;
    std::array<LatticePoint, 2> dual{};
};

template <class K>
struct TropicalCurve {
    std::vector<Point2<K>> vertices;
    std::vector<CurveEdge<K>> bounded_edges;
    std::vector<CurveRay> rays;
    bool smooth = false;
    RegularSubdivision<K> subdivision;
};

namespace detail {

// Vertex of the curve dual to a 2-cell: solve the 2x2 system given by the
// argmax equalities of the cell's first three (non-collinear) vertices.
template <class K>
Point2<K> cell_vertex(const TropicalPolynomial<K>& poly, const LatticePolygon& cell) {
    const LatticePoint &q0 = cell.vertices[0], &q1 = cell.vertices[1], &q2 = cell.vertices[2];
    using T = scalar_traits<K>;
    const K a0 = poly.coeffs.at(q0), a1 = poly.coeffs.at(q1), a2 = poly.coeffs.at(q2);
    const K m00 = T::from_int(q0.j - q1.j), m01 = T::from_int(q0.k - q1.k);
    const K m10 = T::from_int(q0.j - q2.j), m11 = T::from_int(q0.k - q2.k);
    const K r0 = a1 - a0, r1 = a2 - a0;
    const K det = m00 * m11 - m01 * m10;
    return {(r0 * m11 - m01 * r1) / det, (m00 * r1 - r0 * m10) / det};
}

// Order used for edge orientation: by y first, then x.
template <class K>
bool point_yx_less(const Point2<K>& a, const Point2<K>& b) {
    if (a.y < b.y) return true;
    if (b.y < a.y) return false;
    return a.x < b.x;
}

}  // namespace detail

template <class K>
TropicalCurve<K> dual_curve(const TropicalPolynomial<K>& poly) {
    TropicalCurve<K> curve;
    curve.subdivision = regular_subdivision(poly);
    const auto& sub = curve.subdivision;
    curve.smooth = is_smooth(sub);

    for (const auto& cell : sub.cells) curve.vertices.push_back(detail::cell_vertex(poly, cell));

    for (const auto& ie : sub.interior_edges) {
        CurveEdge<K> e;
        e.endpoints = {ie.cells[0], ie.cells[1]};
        if (detail::point_yx_less(curve.vertices[e.endpoints[1]], curve.vertices[e.endpoints[0]]))
            std::swap(e.endpoints[0], e.endpoints[1]);
        e.dual = ie.segment;
        e.weight = lattice_length(ie.segment[0], ie.segment[1]);
        LatticeVector seg = ie.segment[1] - ie.segment[0];
        LatticeVector n = primitive_vector(rotate_cw(seg));
        // Fix the sign of u from the actual endpoint coordinates; it must be
        // perpendicular to the dual segment, which rotate gives for free.
        const Point2<K>&p0 = curve.vertices[e.endpoints[0]], &p1 = curve.vertices[e.endpoints[1]];
        using T = scalar_traits<K>;
        K along = T::from_int(n.dj) * (p1.x - p0.x) + T::from_int(n.dk) * (p1.y - p0.y);
        K scale = T::abs(p1.x - p0.x) + T::abs(p1.y - p0.y) + T::from_int(1);
        e.u = T::sign(along, scale) >= 0 ? n : -n;

        const LatticePolygon &ca = sub.cells[ie.cells[0]], &cb = sub.cells[ie.cells[1]];
        if (ca.vertices.size() == 3 && cb.vertices.size() == 3) {
            auto third = [&](const LatticePolygon& c) {
                for (const auto& v : c.vertices)
                    if (v != ie.segment[0] && v != ie.segment[1]) return v;
                throw std::logic_error("dual_curve: degenerate triangle cell");
            };
            e.opposite = std::array<LatticePoint, 2>{third(ca), third(cb)};
        }
        curve.bounded_edges.push_back(e);
    }

    for (const auto& be : sub.boundary_edges) {
        CurveRay r;
        r.base = be.cell;
        r.dual = be.segment;
        r.weight = lattice_length(be.segment[0], be.segment[1]);
        LatticeVector seg = be.segment[1] - be.segment[0];
        LatticeVector n = primitive_vector(rotate_cw(seg));
        // Outward normal of the Newton polygon along this side: the cell lies
        // inside, so point away from any cell vertex off the side.
        const auto& cell = sub.cells[be.cell];
        LatticePoint inner = cell.vertices[0];
        for (const auto& v : cell.vertices)
            if (cross(seg, v - be.segment[0]) != 0) { inner = v; break; }
        if (dot(n, inner - be.segment[0]) > 0) n = -n;
        r.dir = n;
        curve.rays.push_back(r);
    }
    return curve;
}

struct BalancingViolation {
    int vertex;
    LatticeVector sum;
};

// Empty iff at every vertex the weighted primitive directions, oriented
// away from the vertex, sum to zero.
template <class K>
std::vector<BalancingViolation> check_balancing(const TropicalCurve<K>& curve) {
    std::vector<LatticeVector> sums(curve.vertices.size(), LatticeVector{0, 0});
    for (const auto& e : curve.bounded_edges) {
        sums[e.endpoints[0]] = sums[e.endpoints[0]] + e.weight * e.u;
        sums[e.endpoints[1]] = sums[e.endpoints[1]] + e.weight * (-e.u);
    }
    for (const auto& r : curve.rays) sums[r.base] = sums[r.base] + r.weight * r.dir;
    std::vector<BalancingViolation> bad;
    for (size_t v = 0; v < sums.size(); ++v)
        if (!(sums[v] == LatticeVector{0, 0})) bad.push_back({static_cast<int>(v), sums[v]});
    return bad;
}

template <class K>
struct ParabolicLocus {
    struct Item {
        Point2<K> midpoint;
        int edge;
    };
    std::vector<Item> points;
};

// Midpoints of all bounded edges. Defined for smooth curves only.
template <class K>
ParabolicLocus<K> parabolic_locus(const TropicalCurve<K>& curve) {
    if (!curve.smooth)
        throw NotSmoothError("parabolic_locus: curve is not smooth (subdivision has a cell that "
                             "is not a unit triangle)");
    using T = scalar_traits<K>;
    ParabolicLocus<K> locus;
    const K two = T::from_int(2);
    for (size_t i = 0; i < curve.bounded_edges.size(); ++i) {
        const auto& e = curve.bounded_edges[i];
        const Point2<K>&a = curve.vertices[e.endpoints[0]], &b = curve.vertices[e.endpoints[1]];
        locus.points.push_back({{(a.x + b.x) / two, (a.y + b.y) / two}, static_cast<int>(i)});
    }
    return locus;
}

// One oriented step of a cycle: bounded-edge index plus +1 when traversed
// from endpoint 0 to endpoint 1, -1 the other way.
struct CycleStep {
    int edge;
    int direction;
};
using Cycle = std::vector<CycleStep>;

// Fundamental cycles of a spanning forest of the graph on curve vertices
// restricted to bounded edges; size = first Betti number.
template <class K>
std::vector<Cycle> cycle_basis(const TropicalCurve<K>& curve) {
    const int n = static_cast<int>(curve.vertices.size());
    std::vector<int> parent(n, -1), parent_edge(n, -1), depth(n, 0), comp(n, -1);
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge index)
    for (size_t i = 0; i < curve.bounded_edges.size(); ++i) {
        const auto& e = curve.bounded_edges[i];
        adj[e.endpoints[0]].push_back({e.endpoints[1], static_cast<int>(i)});
        adj[e.endpoints[1]].push_back({e.endpoints[0], static_cast<int>(i)});
    }
    std::vector<bool> tree_edge(curve.bounded_edges.size(), false);
    for (int root = 0; root < n; ++root) {
        if (comp[root] >= 0) continue;
        std::vector<int> stack = {root};
        comp[root] = root;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, ei] : adj[v]) {
                if (comp[w] >= 0) continue;
                comp[w] = root;
                parent[w] = v;
                parent_edge[w] = ei;
                depth[w] = depth[v] + 1;
                tree_edge[ei] = true;
                stack.push_back(w);
            }
        }
    }

    auto step_up = [&](int v, Cycle& path) {
        int ei = parent_edge[v];
        const auto& e = curve.bounded_edges[ei];
        path.push_back({ei, e.endpoints[0] == v ? +1 : -1});  // traverse v -> parent
        return parent[v];
    };

    std::vector<Cycle> basis;
    for (size_t i = 0; i < curve.bounded_edges.size(); ++i) {
        if (tree_edge[i]) continue;
        const auto& e = curve.bounded_edges[i];
        int a = e.endpoints[0], b = e.endpoints[1];
        // Cycle: non-tree edge a->b, then tree path b..a.
        Cycle cyc = {{static_cast<int>(i), +1}};
        Cycle up_a;
        int x = b, y = a;
        while (depth[x] > depth[y]) x = step_up(x, cyc);
        while (depth[y] > depth[x]) y = step_up(y, up_a);
        while (x != y) {
            x = step_up(x, cyc);
            y = step_up(y, up_a);
        }
        for (auto it = up_a.rbegin(); it != up_a.rend(); ++it)
            cyc.push_back({it->edge, -it->direction});
        basis.push_back(cyc);
    }
    return basis;
}

using TropicalCurveQ = TropicalCurve<Rational>;
using TropicalCurveD = TropicalCurve<double>;

}  // namespace tropcurve
