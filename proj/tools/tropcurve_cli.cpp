// tropcurve: build tropical curves from liftings, classify patchworking
// twists, and certify the pairing of log-inflection points at bounded-edge
// midpoints.
//
// Subcommands:
//   curve   --input <poly.trop|family.json> [--svg out.svg] [--report out.json]
//           [--require-smooth]
//   twist   --input <family.json> [--synthesize twistset.json] [--report out.json]
//   verify  --input <family.json> [--t-grid e5,e10,e20] [--radius r] [--tol x]
//           [--report out.json] [--svg out.svg]
//
// Exit status: 0 when every requested check passes, 1 on failed checks,
// 2 on input errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tropcurve/io_json.hpp"
#include "tropcurve/svg.hpp"
#include "tropcurve/verify.hpp"

using namespace tropcurve;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << content;
}

std::pair<int, int> line_col(const std::string& text, size_t pos) {
    int line = 1, col = 1;
    for (size_t i = 0; i < pos && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        return c == '{';
    }
    return false;
}

struct LoadedInput {
    TropicalPolynomial<Rational> poly;
    std::optional<PatchworkFamily> family;
};

LoadedInput load_input(const std::string& path) {
    std::string text = read_file(path);
    LoadedInput in;
    if (looks_like_json(text)) {
        auto fam = family_from_json(nlohmann::json::parse(text));
        in.poly = tropicalization(fam);
        in.family = std::move(fam);
    } else {
        try {
            in.poly = parse_tropical_poly(text);
        } catch (const ParseError& e) {
            auto [line, col] = line_col(text, e.position);
            throw std::runtime_error("parse error at line " + std::to_string(line) + ", column " +
                                     std::to_string(col) + ": " + e.what());
        }
    }
    return in;
}

// "e5,e10,e20" shorthand (e<k> meaning exp(k)) or plain reals, comma separated.
std::vector<double> parse_t_grid(const std::string& s) {
    std::vector<double> grid;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (item.empty()) continue;
        try {
            grid.push_back(item[0] == 'e' ? std::exp(std::stod(item.substr(1)))
                                          : std::stod(item));
        } catch (const std::exception&) {
            throw std::runtime_error("bad t-grid entry '" + item + "'");
        }
    }
    if (grid.empty()) throw std::runtime_error("empty t-grid");
    for (size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 1.0)) throw std::runtime_error("t-grid values must exceed 1");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw std::runtime_error("t-grid must be strictly increasing");
    }
    return grid;
}

std::string rat_point(const Point2<Rational>& p) {
    return "(" + p.x.str() + ", " + p.y.str() + ")";
}

int cmd_curve(const std::string& input, const std::string& svg_path,
              const std::string& report_path, bool require_smooth) {
    auto in = load_input(input);
    auto curve = dual_curve(in.poly);
    const auto& sub = curve.subdivision;

    std::cout << "newton polygon: " << sub.newton.vertices.size() << " vertices, area "
              << sub.newton.area().str() << "\n";
    std::cout << "subdivision: " << sub.cells.size() << " cells ("
              << (curve.smooth ? "smooth" : "not smooth") << ")\n";
    for (const auto& cell : sub.cells) {
        std::cout << "  cell:";
        for (const auto& v : cell.vertices) std::cout << " " << to_string(v);
        std::cout << "\n";
    }
    std::cout << "curve: " << curve.vertices.size() << " vertices, "
              << curve.bounded_edges.size() << " bounded edge"
              << (curve.bounded_edges.size() == 1 ? "" : "s") << ", " << curve.rays.size()
              << " rays\n";
    for (size_t i = 0; i < curve.vertices.size(); ++i)
        std::cout << "  vertex " << i << ": " << rat_point(curve.vertices[i]) << "\n";
    for (size_t i = 0; i < curve.bounded_edges.size(); ++i) {
        const auto& e = curve.bounded_edges[i];
        std::cout << "  edge " << i << ": " << e.endpoints[0] << " -- " << e.endpoints[1]
                  << ", u (" << e.u.dj << "," << e.u.dk << "), weight " << e.weight << ", dual "
                  << to_string(e.dual[0]) << "-" << to_string(e.dual[1]) << "\n";
    }
    if (curve.smooth) {
        auto locus = parabolic_locus(curve);
        if (locus.points.empty()) {
            std::cout << "parabolic locus empty\n";
        } else {
            std::cout << "parabolic locus:\n";
            for (const auto& item : locus.points)
                std::cout << "  edge " << item.edge << ": " << rat_point(item.midpoint) << "\n";
        }
    } else {
        std::cout << "parabolic locus undefined (curve is not smooth)\n";
    }

    if (!svg_path.empty()) write_file(svg_path, curve_svg(curve));
    if (!report_path.empty()) {
        nlohmann::json j = curve_to_json(curve);
        write_file(report_path, j.dump(2) + "\n");
    }
    if (require_smooth && !curve.smooth) {
        std::cerr << "error: curve is not smooth (--require-smooth)\n";
        return 1;
    }
    return 0;
}

int cmd_twist(const std::string& input, const std::string& synth_path,
              const std::string& report_path) {
    auto in = load_input(input);
    auto curve = dual_curve(in.poly);
    if (!curve.smooth) {
        std::cerr << "error: twist analysis needs a smooth curve\n";
        return 1;
    }
    nlohmann::json report;

    if (!synth_path.empty()) {
        auto T = twist_set_from_json(nlohmann::json::parse(read_file(synth_path)));
        for (int e : T.edges)
            if (e < 0 || e >= static_cast<int>(curve.bounded_edges.size()))
                throw std::runtime_error("twist set names edge " + std::to_string(e) +
                                         " outside 0.." +
                                         std::to_string(curve.bounded_edges.size() - 1));
        auto adm = check_twist_admissible(curve, T);
        auto sign = synthesize_signs(curve, T);
        if (!sign) {
            std::cout << "not twist-admissible (cycle " << adm.violating_cycle
                      << ": sum mod 2 != 0)\n";
            return 1;
        }
        std::cout << "synthesized signs:\n";
        for (const auto& [p, s] : *sign)
            std::cout << "  " << to_string(p) << ": " << (s > 0 ? "+1" : "-1") << "\n";
        // Round-trip check: the synthesized signs realize exactly T.
        PatchworkFamily fam;
        for (const auto& [m, a] : in.poly.coeffs) {
            fam.support.push_back(m);
            fam.lifting.push_back(a);
            fam.signs.push_back(sign->at(m));
        }
        bool roundtrip = twist_set(fam, curve).edges == T.edges;
        std::cout << "round-trip: " << (roundtrip ? "verified" : "FAILED") << "\n";
        if (!report_path.empty()) {
            report["signs"] = nlohmann::json::array();
            for (const auto& [p, s] : *sign)
                report["signs"].push_back({{"point", to_json(p)}, {"sign", s}});
            report["round_trip"] = roundtrip;
            write_file(report_path, report.dump(2) + "\n");
        }
        return roundtrip ? 0 : 1;
    }

    if (!in.family) {
        std::cerr << "error: twist classification needs a family document with signs\n";
        return 2;
    }
    auto T = twist_set(*in.family, curve);
    for (size_t i = 0; i < curve.bounded_edges.size(); ++i)
        std::cout << "edge " << i << ": " << (T.edges.count(static_cast<int>(i)) ? "Twisted" : "Untwisted")
                  << "\n";
    auto adm = check_twist_admissible(curve, T);
    if (adm.admissible) {
        std::cout << "twist set is admissible\n";
    } else {
        std::cout << "not twist-admissible (cycle " << adm.violating_cycle
                  << ": sum mod 2 != 0)\n";
    }
    if (!report_path.empty()) {
        report["twisted_edges"] = std::vector<int>(T.edges.begin(), T.edges.end());
        report["admissible"] = adm.admissible;
        write_file(report_path, report.dump(2) + "\n");
    }
    return adm.admissible ? 0 : 1;
}

int cmd_verify(const std::string& input, const std::string& t_grid_str, double radius,
               double tol, const std::string& report_path, const std::string& svg_path) {
    auto in = load_input(input);
    if (!in.family) throw std::runtime_error("verify needs a family document");
    VerifyOptions opts;
    opts.t_grid = parse_t_grid(t_grid_str);
    opts.radius = radius;
    opts.tol = tol;
    auto report = verify_theorem(*in.family, opts);
    std::cout << report_table(report);
    if (!report_path.empty()) write_file(report_path, report_to_json(report).dump(2) + "\n");
    if (!svg_path.empty()) {
        auto curve = dual_curve(in.poly);
        double t = opts.t_grid.back();
        auto win = detail::curve_window(curve);
        auto cloud = sample_amoeba(instantiate(*in.family, t), t, win.xmin, win.xmax);
        write_file(svg_path, verify_svg(curve, report.rows.back().mapped, cloud));
    }
    return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tropical curves, patchworking twists, and log-inflection verification"};
    app.require_subcommand(1);

    std::string input, svg_path, report_path, synth_path, t_grid = "e5,e10,e20";
    double radius = -1.0, tol = 1e-6;
    bool require_smooth = false;

    auto* curve_cmd = app.add_subcommand("curve", "build the tropical curve of a lifting");
    curve_cmd->add_option("--input", input, "tropical polynomial or family document")->required();
    curve_cmd->add_option("--svg", svg_path, "write an SVG figure");
    curve_cmd->add_option("--report", report_path, "write a JSON report");
    curve_cmd->add_flag("--require-smooth", require_smooth, "fail when the curve is not smooth");

    auto* twist_cmd = app.add_subcommand("twist", "classify twisted edges / synthesize signs");
    twist_cmd->add_option("--input", input, "family document (or lifting for --synthesize)")
        ->required();
    twist_cmd->add_option("--synthesize", synth_path, "twist-set document to realize");
    twist_cmd->add_option("--report", report_path, "write a JSON report");

    auto* verify_cmd = app.add_subcommand("verify", "certify midpoint pairing over a t-grid");
    verify_cmd->add_option("--input", input, "family document")->required();
    verify_cmd->add_option("--t-grid", t_grid, "comma list; e5 means exp(5)");
    verify_cmd->add_option("--radius", radius, "cluster radius (default: min edge length / 4)");
    verify_cmd->add_option("--tol", tol, "real/conjugate tolerance");
    verify_cmd->add_option("--report", report_path, "write a JSON report");
    verify_cmd->add_option("--svg", svg_path, "write an SVG overlay");

    CLI11_PARSE(app, argc, argv);

    try {
        if (curve_cmd->parsed()) return cmd_curve(input, svg_path, report_path, require_smooth);
        if (twist_cmd->parsed()) return cmd_twist(input, synth_path, report_path);
        if (verify_cmd->parsed())
            return cmd_verify(input, t_grid, radius, tol, report_path, svg_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
