#include "digsat/json_io.hpp"

#include <stdexcept>

#include "digsat/dg_format.hpp"

namespace digsat {

using nlohmann::json;

json plan_to_json(const KTreePlan& plan) {
  json steps = json::array();
  for (const KTreeStep& s : plan.steps)
    steps.push_back({{"clique", s.clique},
                     {"orientation", s.orientation == Orientation::out ? "out" : "in"}});
  return {{"c", plan.c}, {"n", plan.n}, {"steps", steps}};
}

KTreePlan plan_from_json(const json& j) {
  KTreePlan plan;
  plan.c = j.at("c").get<int>();
  plan.n = j.at("n").get<int>();
  for (const json& js : j.at("steps")) {
    KTreeStep step;
    step.clique = js.at("clique").get<std::vector<int>>();
    std::string orient = js.at("orientation").get<std::string>();
    if (orient == "out")
      step.orientation = Orientation::out;
    else if (orient == "in")
      step.orientation = Orientation::in;
    else
      throw std::invalid_argument("plan orientation must be \"out\" or \"in\"");
    plan.steps.push_back(std::move(step));
  }
  return plan;
}

json rational_to_json(const Rational& r) {
  return {{"num", r.num()}, {"den", r.den()}, {"decimal", r.to_decimal_string()}};
}

json bounds_report_to_json(const BoundsReport& r) {
  json j{{"n", r.n},
         {"k", r.k},
         {"sat", r.sat},
         {"ktree_arcs", r.ktree_arcs},
         {"conjecture", rational_to_json(r.conjecture)},
         {"thm44_applicable", r.thm44_applicable}};
  j["du_arcs"] = r.du_arcs ? json(*r.du_arcs) : json(nullptr);
  j["lemma43"] = r.lemma43 ? rational_to_json(*r.lemma43) : json(nullptr);
  j["thm44"] = r.thm44 ? rational_to_json(*r.thm44) : json(nullptr);
  return j;
}

json detection_result_to_json(const DetectionResult& r) {
  json j{{"contains", r.contains}};
  j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
  return j;
}

namespace {
json arc_to_json(const Arc& a) { return json::array({a.from, a.to}); }
}  // namespace

json saturation_report_to_json(const SaturationReport& r) {
  json violating = json::array();
  for (const Arc& a : r.violating_arcs) violating.push_back(arc_to_json(a));
  json witnesses = json::array();
  for (const auto& [arc, w] : r.witness_for)
    witnesses.push_back({{"arc", arc_to_json(arc)}, {"witness", w}});
  return {{"k", r.k},
          {"free", r.free},
          {"saturated", r.verdict},
          {"violating_arcs", violating},
          {"witnesses", witnesses}};
}

json scc_to_json(const SccDecomposition& scc) {
  return {{"count", scc.components.size()}, {"components", scc.components}};
}

json oracle_result_to_json(const OracleResult& r) {
  json j{{"n", r.n},
         {"k", r.k},
         {"exhaustive", r.exhaustive},
         {"enumerated_total", r.enumerated_total},
         {"labeled_saturated_count", r.labeled_saturated_count},
         {"elapsed_seconds", r.elapsed_seconds}};
  j["canonical_saturated_count"] =
      r.canonical_saturated_count ? json(*r.canonical_saturated_count) : json(nullptr);
  j["sat"] = r.sat ? json(*r.sat) : json(nullptr);
  j["ex"] = r.ex ? json(*r.ex) : json(nullptr);
  j["min_witness"] = r.min_witness ? json(serialize_dg(*r.min_witness)) : json(nullptr);
  j["max_witness"] = r.max_witness ? json(serialize_dg(*r.max_witness)) : json(nullptr);
  if (r.min_witness) j["min_witness_index"] = r.min_witness_index;
  if (r.max_witness) j["max_witness_index"] = r.max_witness_index;
  return j;
}

}  // namespace digsat
