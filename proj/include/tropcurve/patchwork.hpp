// patchwork.hpp: patchworking families, their tropicalization, twisted-edge
// classification, twist admissibility and sign synthesis.
//
// A family is f_t = sum_j sign_j * magnitude_j * t^{a_j} z^j w^k with a
// strictly convex lifting a on the full lattice-point set of its Newton
// polygon. Twist classification per bounded edge follows the sign rule on
// the dual segment's endpoints (v1, v2) and the opposite vertices (v3, v4)
// of the two adjacent triangles:
//   distinct parity of v3, v4:  twisted iff s1*s2*s3*s4 > 0
//   same parity:                twisted iff s3*s4 < 0
#pragma once

#include <cmath>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "tropcurve/curve.hpp"
#include "tropcurve/laurent.hpp"

namespace tropcurve {

struct FamilyValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PatchworkFamily {
    std::vector<LatticePoint> support;
    std::vector<Rational> lifting;     // a_j
    std::vector<int> signs;            // +1 / -1
    std::vector<Rational> magnitudes;  // |beta_j| limits; empty means all 1

    std::map<LatticePoint, int> sign_map() const {
        std::map<LatticePoint, int> m;
        for (size_t i = 0; i < support.size(); ++i) m[support[i]] = signs[i];
        return m;
    }

    Rational magnitude(size_t i) const {
        return magnitudes.empty() ? Rational(1) : magnitudes[i];
    }

    // Checks the structural invariants and throws FamilyValidationError with
    // a precise message: sizes, sign/magnitude ranges, support = full
    // lattice-point set of conv(B), lifting strictly convex on the support.
    void validate() const;
};

inline TropicalPolynomial<Rational> tropicalization(const PatchworkFamily& fam) {
    TropicalPolynomial<Rational> p;
    for (size_t i = 0; i < fam.support.size(); ++i) p.coeffs[fam.support[i]] = fam.lifting[i];
    return p;
}

inline void PatchworkFamily::validate() const {
    if (support.empty()) throw FamilyValidationError("family: empty support");
    if (lifting.size() != support.size())
        throw FamilyValidationError("family: lifting and support lengths differ");
    if (signs.size() != support.size())
        throw FamilyValidationError("family: signs and support lengths differ");
    if (!magnitudes.empty() && magnitudes.size() != support.size())
        throw FamilyValidationError("family: magnitudes and support lengths differ");
    for (int s : signs)
        if (s != 1 && s != -1) throw FamilyValidationError("family: signs must be +1 or -1");
    for (const auto& m : magnitudes)
        if (!(Rational(0) < m)) throw FamilyValidationError("family: magnitudes must be positive");

    std::set<LatticePoint> seen(support.begin(), support.end());
    if (seen.size() != support.size())
        throw FamilyValidationError("family: duplicate support points");

    LatticePolygon newton = convex_hull(support);
    if (newton.dimension() != 2)
        throw FamilyValidationError("family: Newton polygon is degenerate (not 2-dimensional)");
    std::string missing;
    for (const auto& q : lattice_points_of(newton))
        if (!seen.count(q)) missing += (missing.empty() ? "" : ", ") + to_string(q);
    if (!missing.empty())
        throw FamilyValidationError(
            "family: support must contain every lattice point of its Newton polygon; missing " +
            missing);

    auto sub = regular_subdivision(tropicalization(*this));
    if (!is_strictly_convex_on_support(tropicalization(*this), sub)) {
        std::string bad;
        std::set<LatticePoint> vertex_points;
        for (const auto& c : sub.cells)
            vertex_points.insert(c.vertices.begin(), c.vertices.end());
        for (const auto& q : support)
            if (!vertex_points.count(q)) bad += (bad.empty() ? "" : ", ") + to_string(q);
        throw FamilyValidationError(
            "family: lifting is not strictly convex on the support; non-extremal at " + bad);
    }
}

// f_t at a concrete t > 1: real coefficients sign * magnitude * t^{a}.
inline ComplexLaurentPoly instantiate(const PatchworkFamily& fam, double t) {
    if (!(t > 1.0)) throw std::invalid_argument("instantiate: t must be > 1");
    ComplexLaurentPoly f;
    const double logt = std::log(t);
    for (size_t i = 0; i < fam.support.size(); ++i) {
        double logmag = fam.lifting[i].to_double() * logt + std::log(fam.magnitude(i).to_double());
        if (std::fabs(logmag) > 700.0)
            throw std::overflow_error(
                "instantiate: coefficient magnitude exceeds the representable range at " +
                to_string(fam.support[i]) + "; use a smaller t or rescale the lifting");
        f.coeffs[fam.support[i]] = static_cast<double>(fam.signs[i]) * std::exp(logmag);
    }
    return f;
}

enum class Twist { Twisted, Untwisted };

// The sign rule quoted at the top of this header. The edge must carry its
// opposite vertices, i.e. both adjacent cells are triangles.
template <class K>
Twist classify_twist(const CurveEdge<K>& edge, const std::map<LatticePoint, int>& sign) {
    if (!edge.opposite)
        throw std::invalid_argument(
            "classify_twist: edge has no opposite vertices (adjacent cells are not triangles)");
    auto lookup = [&](const LatticePoint& p) {
        auto it = sign.find(p);
        if (it == sign.end())
            throw std::invalid_argument("classify_twist: no sign for lattice point " +
                                        to_string(p));
        return it->second;
    };
    const LatticePoint &v1 = edge.dual[0], &v2 = edge.dual[1];
    const LatticePoint &v3 = (*edge.opposite)[0], &v4 = (*edge.opposite)[1];
    bool same_parity = ((v3.j - v4.j) % 2 == 0) && ((v3.k - v4.k) % 2 == 0);
    if (same_parity)
        return lookup(v3) * lookup(v4) < 0 ? Twist::Twisted : Twist::Untwisted;
    int prod = lookup(v1) * lookup(v2) * lookup(v3) * lookup(v4);
    return prod > 0 ? Twist::Twisted : Twist::Untwisted;
}

struct TwistSet {
    std::set<int> edges;  // indices into TropicalCurve::bounded_edges
};

// All bounded edges classified Twisted under the family's signs. The curve
// must be the dual of the family's tropicalization.
template <class K>
TwistSet twist_set(const PatchworkFamily& fam, const TropicalCurve<K>& curve) {
    if (!curve.smooth) throw NotSmoothError("twist_set: curve is not smooth");
    TwistSet T;
    auto sign = fam.sign_map();
    for (size_t i = 0; i < curve.bounded_edges.size(); ++i)
        if (classify_twist(curve.bounded_edges[i], sign) == Twist::Twisted)
            T.edges.insert(static_cast<int>(i));
    return T;
}

struct AdmissibilityResult {
    bool admissible = true;
    int violating_cycle = -1;  // index into cycle_basis(curve) when not admissible
};

// Eq.-style condition: along every basis cycle, the primitive vectors of
// the cycle's T-edges sum to (0,0) mod 2. Linearity mod 2 extends this to
// all cycles.
template <class K>
AdmissibilityResult check_twist_admissible(const TropicalCurve<K>& curve, const TwistSet& T) {
    if (!curve.smooth) throw NotSmoothError("twist admissibility: curve is not smooth");
    auto basis = cycle_basis(curve);
    for (size_t c = 0; c < basis.size(); ++c) {
        long long sj = 0, sk = 0;
        for (const auto& step : basis[c]) {
            if (!T.edges.count(step.edge)) continue;
            const auto& u = curve.bounded_edges[step.edge].u;
            sj += u.dj;
            sk += u.dk;
        }
        if (sj % 2 != 0 || sk % 2 != 0) return {false, static_cast<int>(c)};
    }
    return {true, -1};
}

template <class K>
bool is_twist_admissible(const TropicalCurve<K>& curve, const TwistSet& T) {
    return check_twist_admissible(curve, T).admissible;
}

namespace detail {

// Dense GF(2) elimination; free variables are set to 0. Returns nothing when
// the system is inconsistent.
inline std::optional<std::vector<uint8_t>> gf2_solve(size_t nvars,
                                                     std::vector<std::vector<uint8_t>> rows,
                                                     std::vector<uint8_t> rhs) {
    std::vector<int> pivot_of_col(nvars, -1);
    size_t rank = 0;
    for (size_t col = 0; col < nvars && rank < rows.size(); ++col) {
        size_t pr = rank;
        while (pr < rows.size() && rows[pr][col] == 0) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[pr], rows[rank]);
        std::swap(rhs[pr], rhs[rank]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && rows[r][col]) {
                for (size_t cidx = 0; cidx < nvars; ++cidx) rows[r][cidx] ^= rows[rank][cidx];
                rhs[r] ^= rhs[rank];
            }
        }
        pivot_of_col[col] = static_cast<int>(rank);
        ++rank;
    }
    for (size_t r = rank; r < rows.size(); ++r)
        if (rhs[r]) return std::nullopt;
    std::vector<uint8_t> x(nvars, 0);
    for (size_t col = 0; col < nvars; ++col)
        if (pivot_of_col[col] >= 0) x[col] = rhs[pivot_of_col[col]];
    return x;
}

}  // namespace detail

// A sign map on the lattice points of the Newton polygon whose twisted-edge
// set is exactly T, by solving the per-edge parity conditions over GF(2)
// with sigma_v = (-1)^{eps_v}:
//   distinct-parity edge:  eps1+eps2+eps3+eps4 = 0 for twisted, 1 otherwise
//   same-parity edge:      eps3+eps4          = 1 for twisted, 0 otherwise
// Columns are ordered by descending lexicographic lattice point, and free
// variables are fixed to 0, which makes the output deterministic. Returns
// nothing when T is not realizable.
template <class K>
std::optional<std::map<LatticePoint, int>> synthesize_signs(const TropicalCurve<K>& curve,
                                                            const TwistSet& T) {
    if (!curve.smooth) throw NotSmoothError("synthesize_signs: curve is not smooth");
    std::vector<LatticePoint> vars = lattice_points_of(curve.subdivision.newton);
    std::sort(vars.begin(), vars.end(), [](const LatticePoint& a, const LatticePoint& b) {
        return b < a;  // descending
    });
    std::map<LatticePoint, size_t> col;
    for (size_t i = 0; i < vars.size(); ++i) col[vars[i]] = i;

    std::vector<std::vector<uint8_t>> rows;
    std::vector<uint8_t> rhs;
    for (size_t i = 0; i < curve.bounded_edges.size(); ++i) {
        const auto& e = curve.bounded_edges[i];
        if (!e.opposite)
            throw std::logic_error("synthesize_signs: smooth curve edge without triangles");
        const LatticePoint &v3 = (*e.opposite)[0], &v4 = (*e.opposite)[1];
        bool same_parity = ((v3.j - v4.j) % 2 == 0) && ((v3.k - v4.k) % 2 == 0);
        std::vector<uint8_t> row(vars.size(), 0);
        bool twisted = T.edges.count(static_cast<int>(i)) > 0;
        if (same_parity) {
            row[col.at(v3)] ^= 1;
            row[col.at(v4)] ^= 1;
            rhs.push_back(twisted ? 1 : 0);
        } else {
            row[col.at(e.dual[0])] ^= 1;
            row[col.at(e.dual[1])] ^= 1;
            row[col.at(v3)] ^= 1;
            row[col.at(v4)] ^= 1;
            rhs.push_back(twisted ? 0 : 1);
        }
        rows.push_back(std::move(row));
    }
    auto sol = detail::gf2_solve(vars.size(), std::move(rows), std::move(rhs));
    if (!sol) return std::nullopt;
    std::map<LatticePoint, int> sign;
    for (size_t i = 0; i < vars.size(); ++i) sign[vars[i]] = (*sol)[i] ? -1 : +1;
    return sign;
}

}  // namespace tropcurve
