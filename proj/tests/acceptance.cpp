// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its tolerances in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <vector>

#include "gauss_oracle.hpp"
#include "helpers.hpp"
#include "tropcurve/verify.hpp"

using namespace tropcurve;
using testutil::line_family;
using testutil::slab_family;
using testutil::square_family;
using testutil::staircase_family;
using testutil::staircase_poly;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
    if (!ok) ++failures;
}

struct Check {
    bool ok = true;
    std::ostringstream why;
    void require(bool cond, const std::string& msg) {
        if (!cond) {
            if (!ok) why << "; ";
            ok = false;
            why << msg;
        }
    }
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

// --- criterion 1: square family accumulation --------------------------------

void criterion1() {
    Timer timer;
    Check c;
    const std::vector<double> lnts = {5.0, 10.0, 20.0, 40.0};
    std::vector<double> hausdorff;
    for (double lnt : lnts) {
        double t = std::exp(lnt);
        auto s = critical_points(instantiate(square_family(), t));
        c.require(s.points.size() == 2,
                  "expected 2 critical points at ln t = " + fmt(lnt) + ", got " +
                      std::to_string(s.points.size()));
        double r = std::exp(-lnt / 2.0);  // closed form z = +- t^{-1/2}
        std::vector<Point2<double>> mapped;
        for (const auto& p : s.points) {
            double dz = std::min(std::abs(p.z - r), std::abs(p.z + r));
            c.require(dz <= 1e-8 * r, "critical point off the closed form at ln t = " + fmt(lnt));
            mapped.push_back(log_map({p.z, p.w}, t));
        }
        double maxnorm = 0.0;
        for (const auto& m : mapped)
            maxnorm = std::max(maxnorm, std::max(std::abs(m.x + 0.5), std::abs(m.y + 0.5)));
        if (lnt == 20.0) c.require(maxnorm <= 0.10, "max-norm at e^20 is " + fmt(maxnorm));
        if (lnt == 40.0) c.require(maxnorm <= 0.05, "max-norm at e^40 is " + fmt(maxnorm));
        hausdorff.push_back(hausdorff_distance(mapped, {{-0.5, -0.5}}));
    }
    // This family pins the mapped points onto the midpoint exactly, so the
    // distance sequence sits at the convergence floor; decreasing otherwise.
    for (size_t i = 1; i < hausdorff.size(); ++i)
        c.require(hausdorff[i] < hausdorff[i - 1] || hausdorff[i] <= 1e-9,
                  "Hausdorff distance not decreasing at step " + std::to_string(i));
    // Supplementary: a magnitude-weighted variant keeps the distance strictly
    // positive and decreasing, exercising the non-degenerate convergence path.
    auto weighted = square_family();
    weighted.magnitudes = {Rational(1), Rational(2), Rational(1), Rational(1)};
    VerifyOptions vopts;
    for (double lnt : lnts) vopts.t_grid.push_back(std::exp(lnt));
    auto rep = verify_theorem(weighted, vopts);
    c.require(rep.pass, "weighted square family failed verification");
    for (size_t i = 1; i < rep.rows.size(); ++i)
        c.require(rep.rows[i].hausdorff < rep.rows[i - 1].hausdorff &&
                      rep.rows[i - 1].hausdorff > 1e-6,
                  "weighted family distance not strictly decreasing");
    double secs = timer.seconds();
    c.require(secs < 1.0, "runtime " + fmt(secs) + "s exceeds 1s");
    report(1, c.ok,
           c.ok ? "square family: 2 points per t, Log_t within 0.10/0.05 of (-1/2,-1/2), "
                  "Hausdorff converging (exact family at floor; weighted variant strictly "
                  "decreasing), " +
                      fmt(secs) + "s"
                : c.why.str());
}

// --- criterion 2: twist dichotomy on the square -----------------------------

void criterion2() {
    Timer timer;
    Check c;
    const double t = std::exp(20.0);
    auto plus = verify_twists(square_family(), t);
    c.require(plus.size() == 1 && plus[0].observed == ConjType::RealPair &&
                  plus[0].predicted_twisted && plus[0].match,
              "all-plus square family: expected a matching real pair");
    auto minus = verify_twists(square_family(-1), t);
    c.require(minus.size() == 1 && minus[0].observed == ConjType::ConjugatePair &&
                  !minus[0].predicted_twisted && minus[0].match,
              "flipped square family: expected a matching conjugate pair");
    double secs = timer.seconds();
    c.require(secs < 1.0, "runtime " + fmt(secs) + "s exceeds 1s");
    report(2, c.ok,
           c.ok ? "twist dichotomy: all-plus real pair, flipped conjugate pair, both match the "
                  "sign rule, " +
                      fmt(secs) + "s"
                : c.why.str());
}

// --- criterion 3: 2-dilated family ------------------------------------------

void criterion3() {
    Timer timer;
    Check c;
    VerifyOptions opts;
    opts.t_grid = {std::exp(20.0)};
    auto rep = verify_theorem(staircase_family(2), opts);
    c.require(std::abs(rep.radius - 0.25) < 1e-12, "default radius is min edge length / 4");
    const auto& row = rep.rows[0];
    c.require(row.mapped.size() == 6, "expected 6 critical points, got " +
                                          std::to_string(row.mapped.size()));
    c.require(row.midpoints.size() == 3, "expected 3 midpoints");
    for (const auto& mr : row.midpoints) {
        c.require(mr.count == 2, "midpoint cluster count != 2");
        c.require(mr.max_distance <= rep.radius, "cluster outside radius");
        c.require(mr.predicted_twisted && mr.conj == ConjType::RealPair && mr.match,
                  "edge not twisted as predicted");
    }
    c.require(rep.pass, "verification report failed");
    double secs = timer.seconds();
    c.require(secs < 10.0, "runtime " + fmt(secs) + "s exceeds 10s");
    report(3, c.ok,
           c.ok ? "2-dilated family at e^20: 6 points, 2 per midpoint within radius 0.25, all 3 "
                  "edges twisted as predicted, " +
                      fmt(secs) + "s"
                : c.why.str());
}

// --- criterion 4: count law --------------------------------------------------

void criterion4() {
    Check c;
    const double t = std::exp(20.0);
    struct Case {
        PatchworkFamily fam;
        const char* name;
    };
    std::vector<Case> cases = {{line_family(), "unit triangle"},
                               {square_family(), "unit square"},
                               {staircase_family(2), "2-dilated triangle"},
                               {staircase_family(3), "3-dilated triangle"}};
    std::string counts;
    for (auto& [fam, name] : cases) {
        auto stats = polygon_stats(fam.support);
        long long expected =
            (Rational(6) * stats.area - Rational(stats.boundary_count)).num();
        auto curve = dual_curve(tropicalization(fam));
        c.require(2 * static_cast<long long>(curve.bounded_edges.size()) == expected,
                  std::string(name) + ": 6*area - boundary != 2 * bounded edges");
        auto s = critical_points(instantiate(fam, t));
        c.require(s.total_multiplicity() == expected,
                  std::string(name) + ": found " + std::to_string(s.total_multiplicity()) +
                      " critical points, expected " + std::to_string(expected));
        counts += (counts.empty() ? "" : "/") + std::to_string(expected);
    }
    report(4, c.ok,
           c.ok ? "count law |rho V_t| = 6 area - boundary = " + counts +
                      " matches 2 x bounded edges"
                : c.why.str());
}

// --- criterion 5: exhaustive corollary equivalence ---------------------------

void criterion5() {
    Timer timer;
    Check c;
    auto curve = dual_curve(staircase_poly(3));
    const int n = static_cast<int>(curve.bounded_edges.size());
    c.require(n == 9, "degree-3 curve should have 9 bounded edges");
    int admissible = 0, synthesized = 0;
    for (int mask = 0; mask < (1 << n); ++mask) {
        TwistSet T;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) T.edges.insert(i);
        bool adm = is_twist_admissible(curve, T);
        auto sign = synthesize_signs(curve, T);
        if (adm != sign.has_value()) {
            c.require(false, "admissibility and synthesizability disagree on mask " +
                                 std::to_string(mask));
            break;
        }
        if (adm) ++admissible;
        if (sign) {
            ++synthesized;
            auto fam = staircase_family(3);
            for (size_t i = 0; i < fam.support.size(); ++i)
                fam.signs[i] = sign->at(fam.support[i]);
            if (twist_set(fam, curve).edges != T.edges) {
                c.require(false, "round-trip mismatch on mask " + std::to_string(mask));
                break;
            }
        }
    }
    c.require(admissible == 128, "expected 128 admissible subsets (one Z/2 x Z/2 constraint), "
                                 "got " + std::to_string(admissible));
    double secs = timer.seconds();
    c.require(secs < 5.0, "runtime " + fmt(secs) + "s exceeds 5s");
    report(5, c.ok,
           c.ok ? "all 512 twist subsets: synthesize succeeds iff admissible (128 cases), every "
                  "success round-trips, " +
                      fmt(secs) + "s"
                : c.why.str());
}

// --- criterion 6: finite-difference certification of the eliminant -----------

void criterion6() {
    Check c;
    const double t = std::exp(5.0);
    std::vector<std::pair<PatchworkFamily, const char*>> fams;
    fams.push_back({square_family(), "square"});
    fams.push_back({square_family(-1), "square flipped"});
    auto weighted = square_family();
    weighted.magnitudes = {Rational(1), Rational(2), Rational(1), Rational(1)};
    fams.push_back({weighted, "square weighted"});
    fams.push_back({staircase_family(2), "2-dilated"});
    fams.push_back({staircase_family(3), "3-dilated"});
    fams.push_back({slab_family(), "slab"});
    fams.push_back({slab_family({{{1, 0}, -1}}), "slab flipped"});

    int checked = 0;
    double worst = 0.0;
    for (const auto& [fam, name] : fams) {
        auto f = instantiate(fam, t);
        auto s = critical_points(f);
        for (const auto& p : s.points) {
            auto q = testutil::gauss_fd_quotient(f, {p.z, p.w});
            if (!q) {
                c.require(false, std::string(name) + ": oracle could not follow the curve");
                continue;
            }
            worst = std::max(worst, *q);
            c.require(*q < 1e-5, std::string(name) + ": quotient " + fmt(*q) + " >= 1e-5");
            ++checked;
        }
    }
    c.require(checked == 2 + 2 + 2 + 6 + 18 + 2 + 2, "unexpected total critical point count");

    // Non-critical control points on the square family's curve.
    auto f = instantiate(square_family(), t);
    auto crit = critical_points(f);
    std::mt19937 rng(1234321);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    int tested = 0;
    double smallest = 1e300;
    while (tested < 20) {
        cdouble z = std::polar(1.0, angle(rng));
        cdouble w = -(1.0 + z) / (1.0 + t * z);
        if (std::abs(w) < 1e-6) continue;
        bool near = false;
        for (const auto& p : crit.points)
            near |= std::abs(z - p.z) < 1e-2 * (1.0 + std::abs(p.z));
        if (near) continue;
        auto q = testutil::gauss_fd_quotient(f, {z, w});
        if (!q) continue;
        smallest = std::min(smallest, *q);
        c.require(*q > 1e-2, "non-critical quotient " + fmt(*q) + " <= 1e-2");
        ++tested;
    }
    report(6, c.ok,
           c.ok ? "eliminant certified: quotient < 1e-5 at all " + std::to_string(checked) +
                      " critical points (worst " + fmt(worst) +
                      "), > 1e-2 at 20 random curve points (smallest " + fmt(smallest) + ")"
                : c.why.str());
}

// --- criterion 7: structural suite -------------------------------------------

void criterion7() {
    Check c;
    std::mt19937 rng(777);
    int samples = 0;
    for (int iter = 0; iter < 50; ++iter) {
        long long d = 1 + iter % 4;
        auto poly = testutil::random_smooth_lifting(rng, d);
        auto curve = dual_curve(poly);
        c.require(check_balancing(curve).empty(), "balancing violated");
        auto stats = polygon_stats(poly.support());
        c.require(Rational((long long)curve.bounded_edges.size()) ==
                      Rational(3) * stats.area - Rational(stats.boundary_count, 2),
                  "bounded edge count != 3 area - boundary/2");
        c.require(stats.area == Rational(stats.interior_count) +
                                    Rational(stats.boundary_count, 2) - Rational(1),
                  "Pick's identity violated");
        ++samples;
    }
    c.require(samples == 50, "expected 50 samples");
    report(7, c.ok,
           c.ok ? "50 random strictly convex liftings on d-dilated triangles (d <= 4): "
                  "balancing, edge count 3A - B/2, Pick's identity"
                : c.why.str());
}

// --- criterion 8: conjugation closure ----------------------------------------

void criterion8() {
    Check c;
    const double t = std::exp(20.0);
    std::vector<std::pair<PatchworkFamily, const char*>> fams;
    fams.push_back({square_family(), "square"});
    fams.push_back({square_family(-1), "square flipped"});
    fams.push_back({staircase_family(2), "2-dilated"});
    fams.push_back({staircase_family(2, {{{1, 1}, -1}}), "2-dilated flipped"});
    fams.push_back({staircase_family(3), "3-dilated"});
    fams.push_back({staircase_family(3, {{{1, 1}, -1}}), "3-dilated flipped"});
    fams.push_back({slab_family(), "slab"});
    fams.push_back({slab_family({{{1, 0}, -1}}), "slab flipped"});
    for (const auto& [fam, name] : fams) {
        auto s = critical_points(instantiate(fam, t));
        auto pairing = conj_pairs(s, 1e-6);
        c.require(pairing.anomalies.empty(), std::string(name) + ": anomalous points");
        c.require(pairing.real_points.size() + 2 * pairing.pairs.size() == s.points.size(),
                  std::string(name) + ": set not conjugation-closed");
        VerifyOptions opts;
        opts.t_grid = {t};
        auto rep = verify_theorem(fam, opts);
        for (const auto& mr : rep.rows[0].midpoints)
            c.require(mr.conj != ConjType::Anomalous,
                      std::string(name) + ": anomalous 2-cluster");
    }
    report(8, c.ok,
           c.ok ? "conjugation closure on 8 real families at e^20: sets conj-invariant, every "
                  "2-cluster real or conjugate"
                : c.why.str());
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (failures == 0) std::printf("all acceptance criteria passed\n");
    else std::printf("%d acceptance criteria failed\n", failures);
    return failures;
}
