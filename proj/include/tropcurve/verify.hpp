// verify.hpp: empirical certification of the accumulation theorem and the
// twist rule. For each t in a grid: compute the log-inflection points of the
// instantiated family, map them by Log_t, assign to the nearest midpoint of
// the limit curve's parabolic locus, and check the 2-per-midpoint counts,
// Hausdorff convergence, and the conjugation type of each cluster against
// the sign-rule prediction.
#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "tropcurve/patchwork.hpp"
#include "tropcurve/solve.hpp"

namespace tropcurve {

inline Point2<double> log_map(const TorusPoint& p, double alpha) {
    if (!(alpha > 1.0)) throw std::invalid_argument("log_map: alpha must be > 1");
    double la = std::log(alpha);
    return {std::log(std::abs(p.z)) / la, std::log(std::abs(p.w)) / la};
}

inline double hausdorff_distance(const std::vector<Point2<double>>& a,
                                 const std::vector<Point2<double>>& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("hausdorff_distance: empty point set");
    auto directed = [](const std::vector<Point2<double>>& from,
                       const std::vector<Point2<double>>& to) {
        double worst = 0.0;
        for (const auto& p : from) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& q : to)
                best = std::min(best, std::hypot(p.x - q.x, p.y - q.y));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(directed(a, b), directed(b, a));
}

enum class ConjType { RealPair, ConjugatePair, Anomalous };

inline const char* to_string(ConjType t) {
    switch (t) {
        case ConjType::RealPair: return "real-pair";
        case ConjType::ConjugatePair: return "conjugate-pair";
        default: return "anomalous";
    }
}

struct MidpointRow {
    int edge = -1;
    Point2<double> midpoint{};
    int count = 0;              // total multiplicity assigned to this midpoint
    double max_distance = 0.0;  // to the mapped points
    ConjType conj = ConjType::Anomalous;
    bool predicted_twisted = false;
    bool match = false;  // RealPair <=> predicted twisted
};

struct VerifyRow {
    double t = 0.0;
    std::vector<Point2<double>> mapped;
    std::vector<MidpointRow> midpoints;
    int unassigned = 0;
    double hausdorff = 0.0;
    bool pass = false;
    std::vector<std::string> failures;
};

struct VerificationReport {
    double radius = 0.0;
    double tol = 0.0;
    std::vector<VerifyRow> rows;
    bool pass = false;
    std::vector<std::string> failures;
};

struct VerifyOptions {
    std::vector<double> t_grid;  // strictly increasing, all > 1
    double radius = -1.0;        // <= 0: quarter of the shortest bounded edge
    double tol = 1e-6;           // real/conjugate classification tolerance
    // Hausdorff distances below this floor count as converged: beyond it the
    // measured distance is solver position noise in Log coordinates, and
    // exact families pin the mapped set onto the midpoints outright.
    double hausdorff_floor = 1e-6;
};

namespace detail {

struct VerifySetup {
    TropicalCurve<Rational> curve;
    ParabolicLocus<Rational> locus;
    std::vector<Point2<double>> midpoints;
    std::vector<bool> predicted;  // per bounded edge index: twisted?
    double radius;
};

inline VerifySetup verify_setup(const PatchworkFamily& fam, double radius) {
    fam.validate();
    VerifySetup s{dual_curve(tropicalization(fam)), {}, {}, {}, 0.0};
    if (!s.curve.smooth)
        throw NotSmoothError("verify: the family's tropical limit curve is not smooth");
    s.locus = parabolic_locus(s.curve);
    for (const auto& item : s.locus.points)
        s.midpoints.push_back({item.midpoint.x.to_double(), item.midpoint.y.to_double()});
    auto sign = fam.sign_map();
    for (const auto& e : s.curve.bounded_edges)
        s.predicted.push_back(classify_twist(e, sign) == Twist::Twisted);
    if (radius > 0.0) {
        s.radius = radius;
    } else {
        double shortest = std::numeric_limits<double>::infinity();
        for (const auto& e : s.curve.bounded_edges) {
            const auto &a = s.curve.vertices[e.endpoints[0]], &b = s.curve.vertices[e.endpoints[1]];
            shortest = std::min(shortest, std::hypot(a.x.to_double() - b.x.to_double(),
                                                     a.y.to_double() - b.y.to_double()));
        }
        s.radius = std::isfinite(shortest) ? shortest / 4.0 : 0.25;
    }
    return s;
}

inline VerifyRow verify_row(const PatchworkFamily& fam, const VerifySetup& setup, double t,
                            double tol) {
    VerifyRow row;
    row.t = t;
    ComplexLaurentPoly f = instantiate(fam, t);
    SolveOptions sopts;
    const double lnt = std::log(t);
    for (const auto& m : setup.midpoints) sopts.centers.push_back({m.x * lnt, m.y * lnt});
    CriticalSet crit = critical_points(f, sopts);

    std::vector<std::vector<int>> assigned(setup.midpoints.size());
    for (size_t pi = 0; pi < crit.points.size(); ++pi) {
        const auto& p = crit.points[pi];
        Point2<double> m = log_map({p.z, p.w}, t);
        row.mapped.push_back(m);
        // Nearest midpoint; equidistant ties fail loudly.
        int best = -1;
        double best_d = std::numeric_limits<double>::infinity(), second = best_d;
        for (size_t mi = 0; mi < setup.midpoints.size(); ++mi) {
            double d = std::hypot(m.x - setup.midpoints[mi].x, m.y - setup.midpoints[mi].y);
            if (d < best_d) {
                second = best_d;
                best_d = d;
                best = static_cast<int>(mi);
            } else {
                second = std::min(second, d);
            }
        }
        if (best < 0 || best_d > setup.radius) {
            ++row.unassigned;
            std::ostringstream os;
            os << "mapped point (" << m.x << ", " << m.y << ") is farther than the radius "
               << setup.radius << " from every midpoint";
            row.failures.push_back(os.str());
            continue;
        }
        if (setup.midpoints.size() > 1 && !(best_d + 1e-12 < second)) {
            std::ostringstream os;
            os << "mapped point (" << m.x << ", " << m.y
               << ") is equidistant from two midpoints; assignment is ambiguous";
            row.failures.push_back(os.str());
            ++row.unassigned;
            continue;
        }
        assigned[best].push_back(static_cast<int>(pi));
    }

    for (size_t mi = 0; mi < setup.midpoints.size(); ++mi) {
        MidpointRow mr;
        mr.edge = setup.locus.points[mi].edge;
        mr.midpoint = setup.midpoints[mi];
        mr.predicted_twisted = setup.predicted[mr.edge];
        for (int pi : assigned[mi]) {
            mr.count += crit.points[pi].mult;
            Point2<double> m = row.mapped[pi];
            mr.max_distance = std::max(
                mr.max_distance,
                std::hypot(m.x - setup.midpoints[mi].x, m.y - setup.midpoints[mi].y));
        }
        if (mr.count != 2) {
            std::ostringstream os;
            os << "midpoint (" << mr.midpoint.x << ", " << mr.midpoint.y << ") holds " << mr.count
               << " points, expected exactly 2";
            row.failures.push_back(os.str());
        }
        if (assigned[mi].size() == 2) {
            const auto &p = crit.points[assigned[mi][0]], &q = crit.points[assigned[mi][1]];
            bool pr = is_real_point({p.z, p.w}, tol), qr = is_real_point({q.z, q.w}, tol);
            if (pr && qr) {
                mr.conj = ConjType::RealPair;
            } else if (!pr && !qr &&
                       std::abs(p.z - std::conj(q.z)) <=
                           tol * std::max(std::abs(p.z), std::abs(q.z)) &&
                       std::abs(p.w - std::conj(q.w)) <=
                           tol * std::max(std::abs(p.w), std::abs(q.w))) {
                mr.conj = ConjType::ConjugatePair;
            } else {
                mr.conj = ConjType::Anomalous;
                row.failures.push_back("cluster at midpoint has anomalous conjugation structure");
            }
            mr.match = (mr.conj == ConjType::RealPair) == mr.predicted_twisted &&
                       mr.conj != ConjType::Anomalous;
            if (!mr.match && mr.conj != ConjType::Anomalous) {
                std::ostringstream os;
                os << "edge " << mr.edge << ": observed "
                   << (mr.conj == ConjType::RealPair ? "twisted" : "untwisted") << ", predicted "
                   << (mr.predicted_twisted ? "twisted" : "untwisted");
                row.failures.push_back(os.str());
            }
        }
        row.midpoints.push_back(mr);
    }

    if (!row.mapped.empty() && !setup.midpoints.empty())
        row.hausdorff = hausdorff_distance(row.mapped, setup.midpoints);
    row.pass = row.failures.empty();
    return row;
}

}  // namespace detail

// Full certification over a t-grid: per-t cluster counts and conjugation
// types, Hausdorff distance to the parabolic locus, and monotone decrease of
// that distance along the grid (families that land exactly on the midpoints
// satisfy the floor clause instead).
inline VerificationReport verify_theorem(const PatchworkFamily& fam, const VerifyOptions& opts) {
    if (opts.t_grid.empty()) throw std::invalid_argument("verify_theorem: empty t grid");
    for (size_t i = 0; i < opts.t_grid.size(); ++i) {
        if (!(opts.t_grid[i] > 1.0))
            throw std::invalid_argument("verify_theorem: every t must exceed 1");
        if (i > 0 && !(opts.t_grid[i] > opts.t_grid[i - 1]))
            throw std::invalid_argument("verify_theorem: t grid must be strictly increasing");
    }
    auto setup = detail::verify_setup(fam, opts.radius);
    VerificationReport report;
    report.radius = setup.radius;
    report.tol = opts.tol;
    for (double t : opts.t_grid)
        report.rows.push_back(detail::verify_row(fam, setup, t, opts.tol));

    if (!setup.midpoints.empty()) {
        for (size_t i = 1; i < report.rows.size(); ++i) {
            double prev = report.rows[i - 1].hausdorff, cur = report.rows[i].hausdorff;
            if (!(cur < prev || cur <= opts.hausdorff_floor)) {
                std::ostringstream os;
                os << "Hausdorff distance did not decrease from t=" << report.rows[i - 1].t
                   << " (" << prev << ") to t=" << report.rows[i].t << " (" << cur << ")";
                report.failures.push_back(os.str());
            }
        }
        if (!report.rows.empty() && report.rows.back().hausdorff > setup.radius) {
            std::ostringstream os;
            os << "final Hausdorff distance " << report.rows.back().hausdorff
               << " exceeds the clustering radius " << setup.radius;
            report.failures.push_back(os.str());
        }
    }
    report.pass = report.failures.empty() &&
                  std::all_of(report.rows.begin(), report.rows.end(),
                              [](const VerifyRow& r) { return r.pass; });
    return report;
}

struct TwistComparison {
    int edge = -1;
    bool predicted_twisted = false;
    ConjType observed = ConjType::Anomalous;
    bool match = false;
};

// Single-t observed-vs-predicted comparison per bounded edge.
inline std::vector<TwistComparison> verify_twists(const PatchworkFamily& fam, double t,
                                                  double tol = 1e-6) {
    auto setup = detail::verify_setup(fam, -1.0);
    VerifyRow row = detail::verify_row(fam, setup, t, tol);
    std::vector<TwistComparison> out;
    for (const auto& mr : row.midpoints) {
        if (std::count_if(row.midpoints.begin(), row.midpoints.end(),
                          [&](const MidpointRow& x) { return x.edge == mr.edge; }) != 1)
            throw std::logic_error("verify_twists: duplicate edge rows");
        out.push_back({mr.edge, mr.predicted_twisted, mr.conj, mr.match});
    }
    return out;
}

// Plain-text table for reports; deterministic formatting.
inline std::string report_table(const VerificationReport& report) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(6);
    os << "radius " << report.radius << ", tol " << report.tol << "\n";
    for (const auto& row : report.rows) {
        os << "t = " << row.t << "  points " << row.mapped.size() << "  hausdorff "
           << row.hausdorff << "  " << (row.pass ? "pass" : "FAIL") << "\n";
        for (const auto& mr : row.midpoints) {
            os << "  midpoint (" << mr.midpoint.x << ", " << mr.midpoint.y << ")  edge "
               << mr.edge << "  count " << mr.count << "  maxdist " << mr.max_distance << "  "
               << to_string(mr.conj) << "  predicted "
               << (mr.predicted_twisted ? "twisted" : "untwisted") << "  "
               << (mr.match ? "match" : "MISMATCH") << "\n";
        }
        for (const auto& fmsg : row.failures) os << "  ! " << fmsg << "\n";
    }
    for (const auto& fmsg : report.failures) os << "! " << fmsg << "\n";
    os << (report.pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace tropcurve
