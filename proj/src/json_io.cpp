#include "ldp/json_io.hpp"

#include "ldp/error.hpp"

namespace ldp {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Integer& z) { return to_string(z); }

Json to_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_json(q));
  return a;
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw Error(ErrorKind::Syntax, "expected a rational string, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

Json to_json(const WeightedDualGraph& g) {
  Json j;
  j["notation"] = format_graph(g);
  j["shape"] = g.shape() == Shape::Star ? "star" : "chain";
  j["weights"] = g.weights();
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  j["edges"] = edges;
  j["determinant"] = to_json(graph_determinant(g));
  j["discrepancies"] = to_json(discrepancies(g));
  return j;
}

Json to_json(const DynkinType& t) {
  Json j;
  j["notation"] = format_dynkin(t);
  j["vertex_count"] = t.vertex_count();
  Json comps = Json::array();
  for (const auto& c : t.components()) comps.push_back(to_json(c));
  j["components"] = comps;
  return j;
}

Json to_json(const DiscrepancyData& d) {
  return Json{{"d", to_json(d.d)}, {"e", to_json(d.e)}, {"b", to_json(d.b)}, {"f", to_json(d.f)}};
}

Json to_json(const HuntChoice& h, const DynkinType& t) {
  const auto& g = t.components().at(h.component);
  return Json{{"component", h.component},
              {"component_notation", format_graph(g)},
              {"vertex", h.vertex},
              {"vertex_weight", g.weight(h.vertex)},
              {"coefficient", to_json(h.coefficient)}};
}

Json to_json(const FeasibilityReport& r) {
  Json j;
  j["type"] = format_dynkin(r.type);
  j["n"] = r.n;
  j["ktilde_sq"] = r.ktilde_sq;
  j["k_sq"] = to_json(r.k_sq);
  j["index"] = to_json(r.index);
  j["klt"] = r.klt;
  j["orbifold_defect"] = to_json(r.orbifold_defect);
  j["bogomolov_violated"] = r.bogomolov_violated;
  j["bogomolov"] = to_string(r.bogomolov);
  j["bogomolov_mode"] = to_string(r.mode);
  j["exclusion"] = r.exclusion;
  j["note"] = r.note;
  return j;
}

Json to_json(const IncidenceSweepReport& r) {
  Json j;
  j["ok"] = r.ok();
  j["graphs"] = r.graphs;
  j["vectors"] = r.vectors;
  j["closed_form_checks"] = r.closed_form_checks;
  j["closed_form_mismatches"] = r.closed_form_mismatches;
  j["pattern_violations"] = r.pattern_violations;
  j["classifier_disagreements"] = r.classifier_disagreements;
  j["monotonicity_violations"] = r.monotonicity_violations;
  j["admissible_hits"] = r.admissible_hits;
  Json counts = Json::object();
  for (const auto& [k, v] : r.closed_form_counts) counts[k] = v;
  j["closed_form_counts"] = counts;
  j["failures"] = r.failures;
  return j;
}

}  // namespace ldp
