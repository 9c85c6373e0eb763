#pragma once

#include <json.hpp>

#include "specdyn/classification.hpp"
#include "specdyn/koopman.hpp"
#include "specdyn/spectrum.hpp"

namespace specdyn {

using json = nlohmann::json;

inline json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

inline json to_json(const SpectrumVerdict& v) {
    json j;
    j["in_spectrum"] = v.in_spectrum;
    j["x_param"] = v.x_param ? json(*v.x_param) : json(nullptr);
    j["margin"] = std::isfinite(v.margin) ? json(v.margin) : json(nullptr);
    return j;
}

inline json to_json(const Classification& c) {
    json j;
    j["verdict"] = to_string(c.kind);
    if (c.x_param) j["x_param"] = *c.x_param;
    if (c.step) j["step"] = *c.step;
    if (c.limit) j["limit_point"] = format_projective(*c.limit);
    return j;
}

inline json to_json(const FixedPointRecord& r) {
    json j;
    json loc = json::array();
    for (const cplx& c : r.location) loc.push_back(format_complex(c));
    j["location"] = loc;
    j["lambda"] = to_json(r.lambda);
    json eig = json::array();
    for (const cplx& c : r.eigenvalues) eig.push_back(to_json(c));
    j["eigenvalues"] = eig;
    j["type"] = to_string(r.type);
    j["residual"] = r.residual;
    if (!r.label.empty()) j["label"] = r.label;
    return j;
}

inline json to_json(const FixedPointReport& rep) {
    json j;
    j["records"] = json::array();
    for (const auto& r : rep.records) j["records"].push_back(to_json(r));
    j["families"] = json::array();
    for (const auto& f : rep.families)
        j["families"].push_back({{"name", f.name}, {"constraint", f.constraint}});
    return j;
}

inline json to_json(const LevelRep& rep) {
    json j;
    j["group"] = rep.group == Group::dihedral ? "dihedral" : "grigorchuk";
    j["level"] = rep.level;
    json gens = json::object();
    for (std::size_t i = 0; i < rep.names.size(); ++i) gens[rep.names[i]] = rep.perms[i];
    j["generators"] = gens;
    return j;
}

template <std::size_t N>
json points_to_json(const std::vector<HomogeneousPoint<N>>& pts) {
    json arr = json::array();
    for (const auto& p : pts) arr.push_back(format_projective(p));
    return arr;
}

} // namespace specdyn
