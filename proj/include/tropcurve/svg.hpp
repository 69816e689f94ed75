// svg.hpp: static SVG figures. Tropical curves with their parabolic points,
// and verification overlays with mapped critical points and a sampled
// amoeba cloud. Output is deterministic: fixed precision, no timestamps.
#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "tropcurve/curve.hpp"
#include "tropcurve/roots.hpp"
#include "tropcurve/verify.hpp"

namespace tropcurve {

class SvgCanvas {
  public:
    SvgCanvas(double xmin, double xmax, double ymin, double ymax, int pixels = 640)
        : xmin_(xmin), ymin_(ymin) {
        double span = std::max(std::max(xmax - xmin, ymax - ymin), 1e-9);
        scale_ = pixels / span;
        width_ = static_cast<int>(std::lround((xmax - xmin) * scale_)) + 1;
        height_ = static_cast<int>(std::lround((ymax - ymin) * scale_)) + 1;
        ymax_ = ymax;
    }

    void line(double x1, double y1, double x2, double y2, const std::string& stroke,
              double width_px) {
        body_ << "<line x1=\"" << fx(x1) << "\" y1=\"" << fy(y1) << "\" x2=\"" << fx(x2)
              << "\" y2=\"" << fy(y2) << "\" stroke=\"" << stroke << "\" stroke-width=\""
              << fmt(width_px) << "\"/>\n";
    }

    void circle(double x, double y, double r_px, const std::string& fill,
                double opacity = 1.0) {
        body_ << "<circle cx=\"" << fx(x) << "\" cy=\"" << fy(y) << "\" r=\"" << fmt(r_px)
              << "\" fill=\"" << fill << "\"";
        if (opacity < 1.0) body_ << " fill-opacity=\"" << fmt(opacity) << "\"";
        body_ << "/>\n";
    }

    void cross(double x, double y, double half_px, const std::string& stroke) {
        double cx = px(x), cy = py(y);
        body_ << "<path d=\"M " << fmt(cx - half_px) << " " << fmt(cy - half_px) << " L "
              << fmt(cx + half_px) << " " << fmt(cy + half_px) << " M " << fmt(cx - half_px)
              << " " << fmt(cy + half_px) << " L " << fmt(cx + half_px) << " "
              << fmt(cy - half_px) << "\" stroke=\"" << stroke << "\" stroke-width=\"1.5\"/>\n";
    }

    std::string finish() const {
        std::ostringstream os;
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_ << "\" height=\""
           << height_ << "\" viewBox=\"0 0 " << width_ << " " << height_ << "\">\n"
           << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
           << body_.str() << "</svg>\n";
        return os.str();
    }

    double px(double x) const { return (x - xmin_) * scale_; }
    double py(double y) const { return (ymax_ - y) * scale_; }

  private:
    static std::string fmt(double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.2f", v);
        return buf;
    }
    std::string fx(double x) const { return fmt(px(x)); }
    std::string fy(double y) const { return fmt(py(y)); }

    double xmin_, ymin_, ymax_, scale_;
    int width_ = 0, height_ = 0;
    std::ostringstream body_;
};

namespace detail {

struct Window {
    double xmin, xmax, ymin, ymax;
    bool contains(double x, double y) const {
        return x >= xmin && x <= xmax && y >= ymin && y <= ymax;
    }
};

// 20% padding around the curve's vertices; a fixed margin when the curve is
// a single vertex.
template <class K>
Window curve_window(const TropicalCurve<K>& curve) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& v : curve.vertices) {
        double x = scalar_traits<K>::to_double(v.x), y = scalar_traits<K>::to_double(v.y);
        xmin = std::min(xmin, x); xmax = std::max(xmax, x);
        ymin = std::min(ymin, y); ymax = std::max(ymax, y);
    }
    double spanx = xmax - xmin, spany = ymax - ymin;
    double pad = 0.2 * std::max(std::max(spanx, spany), 1.0) + 1.0;
    return {xmin - pad, xmax + pad, ymin - pad, ymax + pad};
}

// Clip the ray base + s*dir to the window; returns false when it never
// enters.
inline bool clip_ray(double bx, double by, double dx, double dy, const Window& win, double& x2,
                     double& y2) {
    double tmax = 1e300;
    auto cut = [&](double b, double d, double lo, double hi) {
        if (d > 0) tmax = std::min(tmax, (hi - b) / d);
        else if (d < 0) tmax = std::min(tmax, (lo - b) / d);
    };
    cut(bx, dx, win.xmin, win.xmax);
    cut(by, dy, win.ymin, win.ymax);
    if (tmax <= 0) return false;
    x2 = bx + tmax * dx;
    y2 = by + tmax * dy;
    return true;
}

template <class K>
void draw_curve_into(SvgCanvas& canvas, const TropicalCurve<K>& curve, const Window& win) {
    auto xd = [&](const Point2<K>& p) { return scalar_traits<K>::to_double(p.x); };
    auto yd = [&](const Point2<K>& p) { return scalar_traits<K>::to_double(p.y); };
    for (const auto& e : curve.bounded_edges) {
        const auto &a = curve.vertices[e.endpoints[0]], &b = curve.vertices[e.endpoints[1]];
        canvas.line(xd(a), yd(a), xd(b), yd(b), "black", 1.0 + e.weight);
    }
    for (const auto& r : curve.rays) {
        const auto& base = curve.vertices[r.base];
        double x2, y2;
        if (clip_ray(xd(base), yd(base), r.dir.dj, r.dir.dk, win, x2, y2))
            canvas.line(xd(base), yd(base), x2, y2, "black", 1.0 + r.weight);
    }
    for (const auto& v : curve.vertices) canvas.circle(xd(v), yd(v), 3.0, "black");
}

}  // namespace detail

// Tropical curve with its parabolic points as filled disks.
template <class K>
std::string curve_svg(const TropicalCurve<K>& curve) {
    auto win = detail::curve_window(curve);
    SvgCanvas canvas(win.xmin, win.xmax, win.ymin, win.ymax);
    detail::draw_curve_into(canvas, curve, win);
    if (curve.smooth) {
        auto locus = parabolic_locus(curve);
        for (const auto& item : locus.points)
            canvas.circle(scalar_traits<K>::to_double(item.midpoint.x),
                          scalar_traits<K>::to_double(item.midpoint.y), 5.0, "crimson");
    }
    return canvas.finish();
}

// Amoeba point cloud in Log_t coordinates: solve f(z, .) = 0 along a grid of
// |z| radii and arguments. A figure aid only.
inline std::vector<Point2<double>> sample_amoeba(const ComplexLaurentPoly& f, double t,
                                                 double xmin, double xmax, int nradii = 200,
                                                 int nargs = 200) {
    std::vector<Point2<double>> cloud;
    const double lnt = std::log(t);
    detail::GridPoly F = detail::GridPoly::from(f);
    for (int i = 0; i < nradii; ++i) {
        double x = xmin + (xmax - xmin) * (i + 0.5) / nradii;
        for (int a = 0; a < nargs; ++a) {
            double theta = 2.0 * std::numbers::pi * a / nargs;
            cdouble z = std::polar(std::exp(x * lnt), theta);
            auto coeffs = F.w_coeffs_at(z);
            double top = 0.0;
            for (const auto& c : coeffs) top = std::max(top, std::abs(c));
            if (!(top > 0.0) || !std::isfinite(top)) continue;
            for (auto& c : coeffs) c /= top;
            try {
                for (const auto& r : univariate_roots(coeffs)) {
                    double aw = std::abs(r.value);
                    if (aw <= 0.0 || !std::isfinite(aw)) continue;
                    cloud.push_back({x, std::log(aw) / lnt});
                }
            } catch (const std::exception&) {
            }
        }
    }
    return cloud;
}

// Verification overlay: curve, parabolic disks, mapped critical points as
// crosses, and the amoeba cloud of the instantiated family.
template <class K>
std::string verify_svg(const TropicalCurve<K>& curve, const std::vector<Point2<double>>& mapped,
                       const std::vector<Point2<double>>& amoeba) {
    auto win = detail::curve_window(curve);
    SvgCanvas canvas(win.xmin, win.xmax, win.ymin, win.ymax);
    for (const auto& p : amoeba)
        if (win.contains(p.x, p.y)) canvas.circle(p.x, p.y, 0.8, "goldenrod", 0.35);
    detail::draw_curve_into(canvas, curve, win);
    if (curve.smooth) {
        auto locus = parabolic_locus(curve);
        for (const auto& item : locus.points)
            canvas.circle(scalar_traits<K>::to_double(item.midpoint.x),
                          scalar_traits<K>::to_double(item.midpoint.y), 5.0, "crimson");
    }
    for (const auto& p : mapped)
        if (win.contains(p.x, p.y)) canvas.cross(p.x, p.y, 5.0, "royalblue");
    return canvas.finish();
}

}  // namespace tropcurve
