#include "json_report.hpp"

namespace polycx::cli {

json to_json(const Vec3& v) { return json::array({v.x.str(), v.y.str(), v.z.str()}); }

json to_json(const Isometry& g) {
  json rows = json::array();
  for (int r = 0; r < 3; ++r)
    rows.push_back(json::array({g.linear(r, 0).str(), g.linear(r, 1).str(), g.linear(r, 2).str()}));
  return {{"linear", rows}, {"translation", to_json(g.translation)}};
}

json to_json(const Violation& v, const ValidationReport&) {
  return {{"axiom", std::string(axiom_name(v.axiom))}, {"detail", v.detail}, {"witness", v.witness}};
}

json violations_json(const ValidationReport& r) {
  json out = json::array();
  for (const auto& v : r.violations) out.push_back(to_json(v, r));
  return out;
}

json to_json(const SystemCheck& c) {
  json j{{"ok", c.ok}};
  if (c.ok) return j;
  j["detail"] = c.detail;
  if (!c.I.empty() || !c.J.empty()) {
    j["I"] = c.I;
    j["J"] = c.J;
  } else {
    j["i"] = c.i;
    j["j"] = c.j;
  }
  if (c.witness) j["witness"] = cycle_string(*c.witness);
  return j;
}

json to_json(const Check& c) { return {{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}}; }

json to_json(const EntryVerification& v) {
  json checks = json::array();
  for (const auto& c : v.checks) checks.push_back(to_json(c));
  return {{"entry", v.entry},
          {"ok", v.ok()},
          {"flag_stabilizer_order", v.flag_stabilizer_order},
          {"r_values", v.r_values},
          {"checks", checks}};
}

json to_json(const AuditReport& r) {
  json classes = json::array(), values = json::array(), cands = json::array();
  for (auto c : r.edge_angle_classes) classes.push_back(std::string(angle_class_name(c)));
  for (const auto& v : r.edge_angle_values) values.push_back(v.str());
  for (const auto& c : r.candidates) {
    json gens = json::array();
    for (const auto& g : c.generators) gens.push_back(to_json(g));
    cands.push_back({{"generators", gens},
                     {"facets_in_window", c.facets.size()},
                     {"facet_r3", c.facet_r3},
                     {"facets_finite", c.facets_finite},
                     {"facets_at_base_vertex", c.facets_at_base_vertex}});
  }
  json j{{"verdict", std::string(verdict_name(r.verdict))},
         {"planar_faces", r.planar_faces},
         {"face_mirrors_found", r.face_mirrors_found},
         {"flag_stabilizer_order", r.flag_stabilizer_order},
         {"subgroup_orders", r.subgroup_orders},
         {"edge_angle_classes", classes},
         {"edge_angle_signed_cos2", values},
         {"edge_stabilizer_shape", std::string(edge_shape_name(r.edge_stabilizer_shape))},
         {"candidates", cands},
         {"notes", r.notes},
         {"window_certified", r.window_certified}};
  j["rho3"] = r.rho3 ? to_json(*r.rho3) : json(nullptr);
  j["r"] = r.r ? json(*r.r) : json(nullptr);
  j["facet_r3"] = r.facet_r3 ? json(*r.facet_r3) : json(nullptr);
  return j;
}

json to_json(const Rank5Result& r) {
  return {{"obstructed", r.obstructed},
          {"stabilizer_order", r.stabilizer_order},
          {"planar_base_face", r.planar_base_face},
          {"branch", r.branch}};
}

json flag_json(const IncidenceComplex& c, const Flag& f) {
  json out = json::array();
  for (std::size_t r = 0; r < f.faces.size(); ++r) out.push_back(c.id(static_cast<int>(r), f.faces[r]));
  return out;
}

}  // namespace polycx::cli
