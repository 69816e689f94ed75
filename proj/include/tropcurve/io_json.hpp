// io_json.hpp: JSON input/output for curves, families, critical sets and
// verification reports. Exact rationals serialize as "p/q" strings (plain
// integers stay bare); floats are rejected on input so liftings stay exact.
#pragma once

#include <json.hpp>

#include "tropcurve/curve.hpp"
#include "tropcurve/patchwork.hpp"
#include "tropcurve/solve.hpp"
#include "tropcurve/verify.hpp"

namespace tropcurve {

inline nlohmann::json to_json(const Rational& r) {
    if (r.is_integer()) return r.num();
    return r.str();
}

inline Rational rational_from_json(const nlohmann::json& j, const std::string& what) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const std::exception& e) {
            throw FamilyValidationError(what + ": bad rational literal '" +
                                        j.get<std::string>() + "' (" + e.what() + ")");
        }
    }
    throw FamilyValidationError(what +
                                ": expected an integer or a \"p/q\" string (floating-point "
                                "values would lose exactness)");
}

inline nlohmann::json to_json(const LatticePoint& p) { return nlohmann::json::array({p.j, p.k}); }

template <class K>
nlohmann::json curve_to_json(const TropicalCurve<K>& curve) {
    nlohmann::json j;
    j["smooth"] = curve.smooth;
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : curve.vertices)
        j["vertices"].push_back({to_json(v.x), to_json(v.y)});
    j["edges"] = nlohmann::json::array();
    for (const auto& e : curve.bounded_edges) {
        nlohmann::json je;
        je["endpoints"] = {e.endpoints[0], e.endpoints[1]};
        je["u"] = {e.u.dj, e.u.dk};
        je["weight"] = e.weight;
        je["dual"] = {to_json(e.dual[0]), to_json(e.dual[1])};
        if (e.opposite)
            je["opposite"] = {to_json((*e.opposite)[0]), to_json((*e.opposite)[1])};
        j["edges"].push_back(je);
    }
    j["rays"] = nlohmann::json::array();
    for (const auto& r : curve.rays) {
        nlohmann::json jr;
        jr["base"] = r.base;
        jr["dir"] = {r.dir.dj, r.dir.dk};
        jr["weight"] = r.weight;
        jr["dual"] = {to_json(r.dual[0]), to_json(r.dual[1])};
        j["rays"].push_back(jr);
    }
    if (curve.smooth) {
        auto locus = parabolic_locus(curve);
        j["parabolic_points"] = nlohmann::json::array();
        for (const auto& item : locus.points)
            j["parabolic_points"].push_back(
                {{"edge", item.edge}, {"point", {to_json(item.midpoint.x), to_json(item.midpoint.y)}}});
    }
    return j;
}

// Family document: {"support": [[j,k],...], "lifting": [...], "signs": [...],
// "magnitudes": [...] (optional)}. Validates the structural invariants.
inline PatchworkFamily family_from_json(const nlohmann::json& j) {
    PatchworkFamily fam;
    if (!j.is_object() || !j.contains("support") || !j.contains("lifting") ||
        !j.contains("signs"))
        throw FamilyValidationError(
            "family document must contain 'support', 'lifting' and 'signs'");
    for (const auto& p : j.at("support")) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
            !p[1].is_number_integer())
            throw FamilyValidationError("support entries must be integer pairs [j, k]");
        fam.support.push_back({p[0].get<long long>(), p[1].get<long long>()});
    }
    for (const auto& a : j.at("lifting")) fam.lifting.push_back(rational_from_json(a, "lifting"));
    for (const auto& s : j.at("signs")) {
        if (!s.is_number_integer())
            throw FamilyValidationError("signs must be the integers +1 or -1");
        fam.signs.push_back(s.get<int>());
    }
    if (j.contains("magnitudes"))
        for (const auto& m : j.at("magnitudes"))
            fam.magnitudes.push_back(rational_from_json(m, "magnitudes"));
    fam.validate();
    return fam;
}

inline nlohmann::json family_to_json(const PatchworkFamily& fam) {
    nlohmann::json j;
    j["support"] = nlohmann::json::array();
    for (const auto& p : fam.support) j["support"].push_back(to_json(p));
    j["lifting"] = nlohmann::json::array();
    for (const auto& a : fam.lifting) j["lifting"].push_back(to_json(a));
    j["signs"] = fam.signs;
    if (!fam.magnitudes.empty()) {
        j["magnitudes"] = nlohmann::json::array();
        for (const auto& m : fam.magnitudes) j["magnitudes"].push_back(to_json(m));
    }
    return j;
}

// Twist-set document: {"edges": [indices]}.
inline TwistSet twist_set_from_json(const nlohmann::json& j) {
    TwistSet T;
    if (!j.is_object() || !j.contains("edges"))
        throw std::invalid_argument("twist-set document must contain 'edges'");
    for (const auto& e : j.at("edges")) {
        if (!e.is_number_integer())
            throw std::invalid_argument("twist-set edges must be integer indices");
        T.edges.insert(e.get<int>());
    }
    return T;
}

inline nlohmann::json critical_set_to_json(const CriticalSet& s) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : s.points)
        pts.push_back({{"z_re", p.z.real()},
                       {"z_im", p.z.imag()},
                       {"w_re", p.w.real()},
                       {"w_im", p.w.imag()},
                       {"mult", p.mult},
                       {"resid_f", p.resid_f},
                       {"resid_h", p.resid_h}});
    nlohmann::json j;
    j["points"] = pts;
    j["dropped"] = s.dropped;
    return j;
}

inline nlohmann::json report_to_json(const VerificationReport& report) {
    nlohmann::json j;
    j["radius"] = report.radius;
    j["tol"] = report.tol;
    j["pass"] = report.pass;
    j["failures"] = report.failures;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : report.rows) {
        nlohmann::json jr;
        jr["t"] = row.t;
        jr["hausdorff"] = row.hausdorff;
        jr["pass"] = row.pass;
        jr["unassigned"] = row.unassigned;
        jr["failures"] = row.failures;
        jr["mapped"] = nlohmann::json::array();
        for (const auto& m : row.mapped) jr["mapped"].push_back({m.x, m.y});
        jr["midpoints"] = nlohmann::json::array();
        for (const auto& mr : row.midpoints)
            jr["midpoints"].push_back({{"edge", mr.edge},
                                       {"midpoint", {mr.midpoint.x, mr.midpoint.y}},
                                       {"count", mr.count},
                                       {"max_distance", mr.max_distance},
                                       {"conj", to_string(mr.conj)},
                                       {"predicted_twisted", mr.predicted_twisted},
                                       {"match", mr.match}});
        j["rows"].push_back(jr);
    }
    return j;
}

}  // namespace tropcurve
