#include "ordlab/report.hpp"

#include <chrono>

namespace ordlab {

Json json_of(const Slope& s) {
  Json j;
  j["text"] = s.str();
  j["rational"] = s.rational;
  if (s.rational) {
    j["p"] = s.p;
    j["q"] = s.q;
  } else {
    j["a"] = s.a;
    j["b"] = s.b;
    j["c"] = s.c;
    j["d"] = s.d;
  }
  return j;
}

Json json_of(const SlopeInterval& i) {
  Json j;
  j["exact"] = i.exact;
  j["full_circle"] = i.full_circle;
  j["lo"] = json_of(i.lo);
  j["hi"] = json_of(i.hi);
  j["text"] = i.str();
  return j;
}

Json json_of(const SlopeEstimate& e) {
  Json j = json_of(e.interval);
  j["radius"] = e.radius;
  return j;
}

Json json_of(const DetectionVerdict& v) {
  Json j;
  j["level"] = level_name(v.level);
  j["slope"] = json_of(v.slope);
  j["status"] = status_name(v.status);
  j["radius"] = v.radius;
  j["witness"] = v.witness;
  return j;
}

Json json_of(const CofinalityReport& r, const std::vector<std::string>& gen_names) {
  Json j;
  j["verdict"] = cofinality_name(r.verdict);
  j["element"] = format_word(r.element, gen_names);
  if (r.bound) {
    j["bound"] = format_word(*r.bound, gen_names);
  }
  j["radius"] = r.radius;
  j["n_max"] = r.n_max;
  if (r.consistent_with_action) {
    j["consistent_with_action"] = *r.consistent_with_action;
  }
  return j;
}

Json json_of(const BoundaryCofinalityReport& r, const std::vector<std::string>& gen_names) {
  Json j;
  j["verdict"] = r.verdict == Cofinality::cofinal_at_radius ? "boundary-cofinal-at-radius"
                 : r.verdict == Cofinality::bounded_at_radius ? "not-boundary-cofinal-at-radius"
                                                              : "unknown";
  j["witness"] = format_word(r.witness, gen_names);
  j["line"] = json_of(r.line);
  j["detail"] = json_of(r.detail, gen_names);
  return j;
}

Json json_of(const BludovGlassReport& r) {
  Json j;
  j["verdict"] = compatibility_name(r.verdict);
  j["radius"] = r.radius;
  j["restriction_classes"] = {{"first", r.restrictions_1}, {"second", r.restrictions_2}};
  if (!r.reason.empty()) {
    j["reason"] = r.reason;
  }
  if (!r.interpretation.empty()) {
    j["interpretation"] = r.interpretation;
  }
  return j;
}

Json json_of(const CoherenceReport& r) {
  Json j;
  j["passed"] = r.passed;
  Json edges = Json::array();
  for (auto& e : r.edges) {
    edges.push_back({{"edge", e.description},
                     {"ok", e.ok},
                     {"transported", json_of(e.transported)},
                     {"expected", json_of(e.expected)}});
  }
  j["edges"] = edges;
  Json vertices = Json::array();
  for (auto& v : r.vertices) {
    vertices.push_back({{"vertex", v.vertex},
                        {"torus", v.torus},
                        {"slope", json_of(v.slope)},
                        {"witnessed", v.witnessed},
                        {"witness", v.witness}});
  }
  j["vertices"] = vertices;
  j["failures"] = r.failures;
  if (!r.interpretation.empty()) {
    j["interpretation"] = r.interpretation;
  }
  return j;
}

Json report_envelope(const std::string& command, Json inputs, Json params, Json results,
                     bool with_timestamp) {
  Json j;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["params"] = std::move(params);
  j["results"] = std::move(results);
  if (with_timestamp) {
    const auto now = std::chrono::system_clock::now();
    j["timestamp"] =
        std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count();
  }
  return j;
}

}  // namespace ordlab
