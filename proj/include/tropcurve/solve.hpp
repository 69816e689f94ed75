// solve.hpp: numerical computation of the log-inflection points of a curve,
// i.e. the common torus zeros of f and its inflection eliminant h.
//
// The coefficient magnitudes of degenerating families span far more range
// than double precision, so the system is never solved in raw coordinates
// alone. For each solve center (m1,m2) in log space the substitution
// z -> e^{m1} z, w -> e^{m2} w recenters one cluster of solutions at unit
// modulus; in that frame the two dominant monomials have magnitude one and
// the Sylvester-resultant elimination is well conditioned. Solve centers
// default to the bounded-edge midpoints of the tropical curve of
// (j,k) -> log|c_jk|, which is where the solutions accumulate.
#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropcurve/curve.hpp"
#include "tropcurve/laurent.hpp"
#include "tropcurve/roots.hpp"

namespace tropcurve {

struct DegenerateGaussError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SharedComponentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CriticalPoint {
    cdouble z{};
    cdouble w{};
    int mult = 1;
    double resid_f = 0.0;  // relative residuals in the solve frame
    double resid_h = 0.0;
    double pos_err = 0.0;  // certified relative position uncertainty
};

struct CriticalSet {
    std::vector<CriticalPoint> points;
    int dropped = 0;  // candidates whose refinement diverged
    std::vector<std::string> notes;

    int total_multiplicity() const {
        int n = 0;
        for (const auto& p : points) n += p.mult;
        return n;
    }
};

struct SolveOptions {
    std::vector<std::array<double, 2>> centers;  // log-space; auto-derived when empty
    double dedup_radius = 1e-8;                  // relative, per coordinate
    double residual_bound = 1e-9;
    // Acceptance window around each solve center, in log units. Points beyond
    // it belong to another center's cluster or run off along a tentacle of
    // the curve, where the relative eliminant residual degenerates to zero
    // and would admit fake solutions.
    double log_window = 6.0;
    int max_newton = 80;
};

// Real iff both coordinates have relatively negligible imaginary part.
inline bool is_real_point(const TorusPoint& p, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("is_real_point: tol must be positive");
    return std::abs(p.z.imag()) <= tol * std::abs(p.z) &&
           std::abs(p.w.imag()) <= tol * std::abs(p.w);
}

namespace detail {

// Dense polynomial on a grid of nonnegative exponents; constructing it from
// a Laurent polynomial shifts both exponents to start at zero, which also
// strips pure monomial common factors (they carry no torus zeros).
struct GridPoly {
    int nz = 0, nw = 0;              // degrees
    std::vector<cdouble> c;          // c[i*(nw+1)+j] = coeff of z^i w^j

    static GridPoly from(const ComplexLaurentPoly& p) {
        if (p.coeffs.empty()) throw std::invalid_argument("GridPoly: empty polynomial");
        long long jmin = INT64_MAX, jmax = INT64_MIN, kmin = INT64_MAX, kmax = INT64_MIN;
        for (const auto& [m, v] : p.coeffs) {
            jmin = std::min(jmin, m.j); jmax = std::max(jmax, m.j);
            kmin = std::min(kmin, m.k); kmax = std::max(kmax, m.k);
        }
        GridPoly g;
        g.nz = static_cast<int>(jmax - jmin);
        g.nw = static_cast<int>(kmax - kmin);
        g.c.assign(static_cast<size_t>(g.nz + 1) * (g.nw + 1), cdouble(0.0));
        for (const auto& [m, v] : p.coeffs)
            g.c[static_cast<size_t>(m.j - jmin) * (g.nw + 1) + (m.k - kmin)] = v;
        return g;
    }

    cdouble at(int i, int j) const { return c[static_cast<size_t>(i) * (nw + 1) + j]; }

    std::vector<cdouble> w_coeffs_at(cdouble z) const {
        std::vector<cdouble> out(nw + 1, cdouble(0.0));
        for (int j = 0; j <= nw; ++j) {
            cdouble acc = 0.0;
            for (int i = nz; i >= 0; --i) acc = acc * z + at(i, j);
            out[j] = acc;
        }
        return out;
    }

    struct EvalAll {
        cdouble v{}, dz{}, dw{};  // value and log-derivative values z f_z, w f_w
        double scale = 0.0;       // sum of term magnitudes
    };

    EvalAll eval_all(cdouble z, cdouble w) const {
        std::vector<cdouble> zp(nz + 1), wp(nw + 1);
        zp[0] = 1.0;
        for (int i = 1; i <= nz; ++i) zp[i] = zp[i - 1] * z;
        wp[0] = 1.0;
        for (int j = 1; j <= nw; ++j) wp[j] = wp[j - 1] * w;
        EvalAll r;
        for (int i = 0; i <= nz; ++i)
            for (int j = 0; j <= nw; ++j) {
                cdouble t = at(i, j) * zp[i] * wp[j];
                if (t == 0.0) continue;
                r.v += t;
                r.dz += static_cast<double>(i) * t;
                r.dw += static_cast<double>(j) * t;
                r.scale += std::abs(t);
            }
        return r;
    }

    GridPoly transposed() const {
        GridPoly g;
        g.nz = nw;
        g.nw = nz;
        g.c.assign(c.size(), cdouble(0.0));
        for (int i = 0; i <= nz; ++i)
            for (int j = 0; j <= nw; ++j) g.c[static_cast<size_t>(j) * (g.nw + 1) + i] = at(i, j);
        return g;
    }
};

inline cdouble lu_determinant(std::vector<std::vector<cdouble>> m) {
    const size_t n = m.size();
    cdouble det = 1.0;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < n; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        if (std::abs(m[piv][col]) == 0.0) return 0.0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            cdouble factor = m[r][col] / m[col][col];
            for (size_t cc = col; cc < n; ++cc) m[r][cc] -= factor * m[col][cc];
        }
    }
    return det;
}

// Sylvester determinant of A(w), B(w) whose coefficients are evaluated at a
// fixed z sample.
inline cdouble sylvester_det(const std::vector<cdouble>& a, const std::vector<cdouble>& b) {
    const int na = static_cast<int>(a.size()) - 1, nb = static_cast<int>(b.size()) - 1;
    const int n = na + nb;
    if (n == 0) return cdouble(1.0);
    std::vector<std::vector<cdouble>> m(n, std::vector<cdouble>(n, cdouble(0.0)));
    for (int r = 0; r < nb; ++r)
        for (int i = 0; i <= na; ++i) m[r][r + i] = a[na - i];
    for (int r = 0; r < na; ++r)
        for (int i = 0; i <= nb; ++i) m[nb + r][r + i] = b[nb - i];
    return lu_determinant(std::move(m));
}

// The frame polynomial f(e^{m1} z, e^{m2} w), scale-normalized so its
// largest coefficient has magnitude 1. Exponent arithmetic happens in log
// space; terms that underflow even after normalization are genuinely
// negligible in this frame and are dropped.
inline ComplexLaurentPoly frame_poly(const ComplexLaurentPoly& f, double m1, double m2) {
    double top = -std::numeric_limits<double>::infinity();
    for (const auto& [m, v] : f.coeffs)
        top = std::max(top, std::log(std::abs(v)) + m1 * m.j + m2 * m.k);
    ComplexLaurentPoly out;
    for (const auto& [m, v] : f.coeffs) {
        double lm = std::log(std::abs(v)) + m1 * m.j + m2 * m.k - top;
        if (lm < -700.0) continue;
        out.coeffs[m] = std::polar(std::exp(lm), std::arg(v));
    }
    return out;
}

inline ComplexLaurentPoly normalize_coeffs(const ComplexLaurentPoly& p) {
    double top = 0.0;
    for (const auto& [m, v] : p.coeffs) top = std::max(top, std::abs(v));
    if (top == 0.0) return p;
    ComplexLaurentPoly out;
    for (const auto& [m, v] : p.coeffs) out.coeffs[m] = v / top;
    return out;
}

struct FrameCandidate {
    cdouble z{}, w{};
    int mult = 1;
    double rf = 0.0, rh = 0.0;
    double pos_err = 0.0;  // relative position uncertainty, log coordinates
};

inline bool newton_polish(const GridPoly& F, const GridPoly& H, cdouble& z, cdouble& w,
                          double& rf, double& rh, double& pos_err, const SolveOptions& opts) {
    auto residuals = [&](cdouble zz, cdouble ww, GridPoly::EvalAll& ef, GridPoly::EvalAll& eh) {
        ef = F.eval_all(zz, ww);
        eh = H.eval_all(zz, ww);
        double a = std::abs(ef.v) / std::max(ef.scale, 1e-300);
        double b = std::abs(eh.v) / std::max(eh.scale, 1e-300);
        return std::max(a, b);
    };
    GridPoly::EvalAll ef, eh;
    double err = residuals(z, w, ef, eh);
    bool floored = false;
    for (int iter = 0; iter < opts.max_newton; ++iter) {
        rf = std::abs(ef.v) / std::max(ef.scale, 1e-300);
        rh = std::abs(eh.v) / std::max(eh.scale, 1e-300);
        // Iterate all the way to the evaluation floor: with a nearly
        // degenerate Jacobian, stopping at residual r leaves the stiff
        // coordinate wrong by about r/|det J|.
        if (rf <= 3e-15 && rh <= 3e-15) {
            floored = true;
            break;
        }
        cdouble det = ef.dz * eh.dw - ef.dw * eh.dz;
        double jscale = std::abs(ef.dz) * std::abs(eh.dw) + std::abs(ef.dw) * std::abs(eh.dz);
        if (std::abs(det) <= 1e-14 * std::max(jscale, 1e-300)) break;
        cdouble du = (-ef.v * eh.dw + ef.dw * eh.v) / det;
        cdouble dv = (-ef.dz * eh.v + ef.v * eh.dz) / det;
        double norm = std::max(std::abs(du), std::abs(dv));
        if (norm > 2.0) {  // log-space trust region
            du *= 2.0 / norm;
            dv *= 2.0 / norm;
        }
        bool improved = false;
        for (double damp : {1.0, 0.5, 0.25, 0.125}) {
            cdouble zn = z * std::exp(damp * du), wn = w * std::exp(damp * dv);
            GridPoly::EvalAll nf, nh;
            double nerr = residuals(zn, wn, nf, nh);
            if (nerr < err) {
                z = zn; w = wn; ef = nf; eh = nh; err = nerr;
                improved = true;
                break;
            }
        }
        if (!improved) break;
    }
    rf = std::abs(ef.v) / std::max(ef.scale, 1e-300);
    rh = std::abs(eh.v) / std::max(eh.scale, 1e-300);
    // First-order position uncertainty from the evaluation noise floor: the
    // ill-conditioned coordinate of a near-degenerate Jacobian cannot be
    // located better than this, which matters when merging duplicates.
    cdouble det = ef.dz * eh.dw - ef.dw * eh.dz;
    if (std::abs(det) > 0.0) {
        double nf = std::max(1e-15, rf) * ef.scale, nh = std::max(1e-15, rh) * eh.scale;
        double uz = (std::abs(eh.dw) * nf + std::abs(ef.dw) * nh) / std::abs(det);
        double uw = (std::abs(eh.dz) * nf + std::abs(ef.dz) * nh) / std::abs(det);
        pos_err = std::max(uz, uw);
    } else {
        pos_err = 1.0;
    }
    if (pos_err > 1e-3) return false;  // position not certifiable
    // Only the evaluation floor certifies a genuine solution. Near-solutions
    // on tentacles and along degenerating edges stall orders of magnitude
    // higher (the eliminant is relatively suppressed there but not zero).
    return floored || (rf <= 1e-12 && rh <= 1e-12);
}

struct FramePass {
    std::vector<FrameCandidate> found;
    int dropped = 0;
    bool resultant_degenerate = false;
    std::string note;
};

inline FramePass run_frame(const ComplexLaurentPoly& f, double m1, double m2,
                           const SolveOptions& opts) {
    FramePass pass;
    ComplexLaurentPoly ft = frame_poly(f, m1, m2);
    if (ft.coeffs.size() < 3 || ft.newton_polygon().dimension() != 2) {
        pass.note = "frame degenerated to fewer than three independent monomials";
        return pass;
    }
    ComplexLaurentPoly ht = normalize_coeffs(inflection_poly(ft));
    if (ht.coeffs.empty()) {
        pass.note = "inflection eliminant vanished inside the frame";
        return pass;
    }
    GridPoly F = GridPoly::from(ft), H = GridPoly::from(ht);
    if (F.nw == 0 && H.nw == 0) {
        pass.note = "no w-dependence in the frame";
        return pass;
    }

    // Shared-component probe: when f and h share a component, every curve
    // point above a random z is already a solution of the 2x2 system, so a
    // Newton polish started there converges without moving. For generic
    // input the solutions are isolated and the polish must travel to one of
    // them. Probe a few angles and flag the frame when every probe point
    // refines in place.
    int shared_samples = 0;
    for (double angle : {0.37, 1.91, 3.79}) {
        cdouble zp = std::polar(1.0, angle);
        bool shares = false;
        try {
            for (const auto& wr : univariate_roots(F.w_coeffs_at(zp))) {
                if (std::abs(wr.value) < 1e-2 || std::abs(wr.value) > 1e2) continue;
                cdouble z = zp, w = wr.value;
                double rf = 0.0, rh = 0.0, perr = 0.0;
                newton_polish(F, H, z, w, rf, rh, perr, opts);
                double travel = std::abs(z - zp) + std::abs(w - wr.value);
                if (std::max(rf, rh) <= 1e-11 && travel < 0.05) shares = true;
            }
        } catch (const std::exception&) {
        }
        if (shares) ++shared_samples;
    }
    if (shared_samples == 3) {
        pass.resultant_degenerate = true;
        return pass;
    }

    const double wlo = std::exp(-opts.log_window), whi = std::exp(opts.log_window);
    auto in_window = [&](cdouble v) {
        double a = std::abs(v);
        return a >= wlo && a <= whi;
    };

    // Candidate generation by resultant elimination. The elimination is run
    // in both variable orders: a cluster that straddles a vertical edge of
    // the tropical curve keeps both of its points at nearly the same z, so
    // only the w-projection separates them (and vice versa).
    auto eliminate = [&](const GridPoly& A, const GridPoly& B, bool swapped,
                         std::vector<std::pair<FrameCandidate, int>>& out) {
        const int degree_bound = A.nw * B.nz + B.nw * A.nz;
        const int nsamp = degree_bound + 1;
        const double theta0 = 0.5;
        std::vector<cdouble> dets(nsamp);
        for (int s = 0; s < nsamp; ++s) {
            cdouble zs = std::polar(1.0, theta0 + 2.0 * std::numbers::pi * s / nsamp);
            dets[s] = sylvester_det(A.w_coeffs_at(zs), B.w_coeffs_at(zs));
        }
        std::vector<cdouble> R(nsamp, cdouble(0.0));
        for (int k = 0; k < nsamp; ++k) {
            cdouble acc = 0.0;
            for (int s = 0; s < nsamp; ++s)
                acc += dets[s] * std::polar(1.0, -2.0 * std::numbers::pi * k * s / nsamp);
            R[k] = acc / static_cast<double>(nsamp) * std::polar(1.0, -theta0 * k);
        }
        double rmax = 0.0;
        for (const auto& v : R) rmax = std::max(rmax, std::abs(v));
        if (rmax == 0.0) return;
        while (R.size() > 1 && std::abs(R.back()) <= 1e-11 * rmax) R.pop_back();
        if (R.size() <= 1) return;  // constant resultant: no common zeros

        std::vector<RootWithMult> first;
        try {
            first = univariate_roots(R);
        } catch (const RootsError&) {
            return;
        }
        for (const auto& fr : first) {
            if (!in_window(fr.value)) continue;
            std::vector<RootWithMult> second;
            try {
                second = univariate_roots(A.w_coeffs_at(fr.value));
            } catch (const std::exception&) {
                ++pass.dropped;
                continue;
            }
            for (const auto& sr : second) {
                if (!in_window(sr.value)) continue;
                FrameCandidate cand;
                cand.z = swapped ? sr.value : fr.value;
                cand.w = swapped ? fr.value : sr.value;
                cand.mult = sr.mult;
                auto eh = H.eval_all(cand.z, cand.w);
                if (std::abs(eh.v) > 1e-2 * std::max(eh.scale, 1e-300)) continue;
                out.push_back({cand, sr.mult});
            }
        }
    };

    std::vector<std::pair<FrameCandidate, int>> candidates;
    eliminate(F, H, false, candidates);
    eliminate(F.transposed(), H.transposed(), true, candidates);
    const size_t resultant_candidates = candidates.size();

    // Unit-torus grid seeds. The frame normalization puts the cluster at
    // O(1) modulus, so a coarse multiplicative grid reaches it through
    // Newton alone even when the frame polynomial still spans too many
    // orders of magnitude for the resultant to be meaningful.
    for (int a = 0; a < 12; ++a)
        for (int b = 0; b < 12; ++b) {
            FrameCandidate seed;
            seed.z = std::polar(1.0, 2.0 * std::numbers::pi * (a + 0.37) / 12.0);
            seed.w = std::polar(1.0, 2.0 * std::numbers::pi * (b + 0.61) / 12.0);
            candidates.push_back({seed, 1});
        }
    // Near-real seeds: solutions of real families concentrate around real
    // sign configurations.
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            FrameCandidate seed;
            seed.z = std::polar(1.0, std::numbers::pi * a + 0.02);
            seed.w = std::polar(1.0, std::numbers::pi * b - 0.03);
            candidates.push_back({seed, 1});
        }

    for (size_t ci = 0; ci < candidates.size(); ++ci) {
        auto& [cand, mult] = candidates[ci];
        const bool from_resultant = ci < resultant_candidates;
        if (!newton_polish(F, H, cand.z, cand.w, cand.rf, cand.rh, cand.pos_err, opts)) {
            if (from_resultant) ++pass.dropped;
            continue;
        }
        if (!in_window(cand.z) || !in_window(cand.w)) {
            if (from_resultant) ++pass.dropped;
            continue;
        }
        cand.mult = mult;
        pass.found.push_back(cand);
    }
    return pass;
}

// Two computed points are the same solution when each coordinate agrees
// within the dedup radius, widened by the points' own certified position
// uncertainty (an ill-conditioned coordinate jitters between re-solves).
inline bool same_point(const CriticalPoint& a, const CriticalPoint& b, double rel) {
    double slack = std::min(1e-4, std::max(rel, 30.0 * (a.pos_err + b.pos_err)));
    return std::abs(a.z - b.z) <= slack * std::max(std::abs(a.z), std::abs(b.z)) &&
           std::abs(a.w - b.w) <= slack * std::max(std::abs(a.w), std::abs(b.w));
}

}  // namespace detail

// The set of log-inflection points of V_f: common torus zeros of f and its
// inflection eliminant, found per solve frame, Newton-polished and merged.
inline CriticalSet critical_points(const ComplexLaurentPoly& f, const SolveOptions& opts = {}) {
    if (f.newton_polygon().dimension() != 2)
        throw std::invalid_argument("critical_points: Newton polygon must be 2-dimensional");
    ComplexLaurentPoly h = inflection_poly(f);
    if (h.coeffs.empty())
        throw DegenerateGaussError(
            "critical_points: inflection eliminant vanishes identically (the Gauss map is "
            "constant on a component)");

    std::vector<std::array<double, 2>> centers = opts.centers;
    CriticalSet result;
    if (centers.empty()) {
        // Solve centers from the tropical curve of the coefficient log
        // magnitudes: one per bounded-edge midpoint.
        try {
            TropicalPolynomial<double> lnpoly;
            for (const auto& [m, v] : f.coeffs) lnpoly.coeffs[m] = std::log(std::abs(v));
            auto curve = dual_curve(lnpoly);
            for (const auto& e : curve.bounded_edges) {
                const auto &a = curve.vertices[e.endpoints[0]], &b = curve.vertices[e.endpoints[1]];
                centers.push_back({(a.x + b.x) / 2.0, (a.y + b.y) / 2.0});
            }
        } catch (const std::exception& e) {
            result.notes.push_back(std::string("auto-centering unavailable: ") + e.what());
        }
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (const auto& [m, v] : f.coeffs) {
            lo = std::min(lo, std::log(std::abs(v)));
            hi = std::max(hi, std::log(std::abs(v)));
        }
        // A raw-coordinate pass is still well conditioned for moderate
        // coefficient spans and catches anything far from the midpoints.
        if (centers.empty() || hi - lo <= 25.0) centers.push_back({0.0, 0.0});
    }

    int degenerate_passes = 0;
    std::vector<CriticalPoint> merged;
    for (const auto& ctr : centers) {
        auto pass = detail::run_frame(f, ctr[0], ctr[1], opts);
        result.dropped += pass.dropped;
        if (!pass.note.empty()) result.notes.push_back(pass.note);
        if (pass.resultant_degenerate) ++degenerate_passes;
        // Merge into the global list. The same solution reappears across
        // candidates and frames; keep the best-conditioned copy and the
        // largest multiplicity tag (duplicates come from re-finding, not
        // from geometric multiplicity).
        for (const auto& cand : pass.found) {
            CriticalPoint p;
            p.z = cand.z * std::exp(ctr[0]);
            p.w = cand.w * std::exp(ctr[1]);
            p.mult = cand.mult;
            p.resid_f = cand.rf;
            p.resid_h = cand.rh;
            p.pos_err = cand.pos_err;
            bool taken = false;
            for (auto& q : merged)
                if (detail::same_point(p, q, opts.dedup_radius)) {
                    q.mult = std::max(q.mult, p.mult);
                    if (p.pos_err < q.pos_err) {
                        q.z = p.z; q.w = p.w;
                        q.resid_f = p.resid_f;
                        q.resid_h = p.resid_h;
                        q.pos_err = p.pos_err;
                    }
                    taken = true;
                    break;
                }
            if (!taken) merged.push_back(p);
        }
    }
    if (degenerate_passes == static_cast<int>(centers.size()))
        throw SharedComponentError(
            "critical_points: the resultant of f and its eliminant vanishes identically "
            "(f and h share a component; non-generic input)");

    // For real input the critical set is conjugation-invariant, so imaginary
    // parts below a point's own certified position uncertainty are noise:
    // snap them to the real axis and re-merge. Genuine conjugate pairs keep
    // imaginary parts comparable to the coordinate magnitude, far above any
    // uncertainty handled here.
    bool real_input = true;
    for (const auto& [m, c] : f.coeffs) real_input &= c.imag() == 0.0;
    if (real_input) {
        for (auto& p : merged) {
            double snap = std::min(1e-4, std::max(1e-12, 30.0 * p.pos_err));
            if (std::abs(p.z.imag()) <= snap * std::abs(p.z) &&
                std::abs(p.w.imag()) <= snap * std::abs(p.w)) {
                p.z = cdouble(p.z.real(), 0.0);
                p.w = cdouble(p.w.real(), 0.0);
            }
        }
        std::vector<CriticalPoint> snapped;
        for (const auto& p : merged) {
            bool taken = false;
            for (auto& q : snapped)
                if (detail::same_point(p, q, opts.dedup_radius)) {
                    q.mult = std::max(q.mult, p.mult);
                    if (p.pos_err < q.pos_err) q = p;
                    taken = true;
                    break;
                }
            if (!taken) snapped.push_back(p);
        }
        merged = std::move(snapped);
    }

    std::sort(merged.begin(), merged.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
        if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
        if (a.z.imag() != b.z.imag()) return a.z.imag() < b.z.imag();
        if (a.w.real() != b.w.real()) return a.w.real() < b.w.real();
        return a.w.imag() < b.w.imag();
    });
    result.points = std::move(merged);
    return result;
}

// Conjugation structure of a critical set: indices of real points, matched
// conjugate pairs, and non-real points with no conjugate partner.
struct ConjPairing {
    std::vector<int> real_points;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> anomalies;
};

inline ConjPairing conj_pairs(const CriticalSet& s, double tol) {
    ConjPairing out;
    std::vector<bool> used(s.points.size(), false);
    auto conj_match = [&](const CriticalPoint& a, const CriticalPoint& b) {
        return std::abs(a.z - std::conj(b.z)) <= tol * std::max(std::abs(a.z), std::abs(b.z)) &&
               std::abs(a.w - std::conj(b.w)) <= tol * std::max(std::abs(a.w), std::abs(b.w));
    };
    for (size_t i = 0; i < s.points.size(); ++i) {
        if (used[i]) continue;
        if (is_real_point({s.points[i].z, s.points[i].w}, tol)) {
            used[i] = true;
            out.real_points.push_back(static_cast<int>(i));
            continue;
        }
        bool matched = false;
        for (size_t j = i + 1; j < s.points.size() && !matched; ++j) {
            if (used[j] || is_real_point({s.points[j].z, s.points[j].w}, tol)) continue;
            if (conj_match(s.points[i], s.points[j])) {
                used[i] = used[j] = true;
                out.pairs.push_back({static_cast<int>(i), static_cast<int>(j)});
                matched = true;
            }
        }
        if (!matched) {
            used[i] = true;
            out.anomalies.push_back(static_cast<int>(i));
        }
    }
    return out;
}

}  // namespace tropcurve
