#include "qmono/json_io.hpp"

namespace qmono {

Json to_json(const Quiver& q) {
  Json j;
  j["vertices"] = q.vertices();
  Json arrows = Json::array();
  for (const Arrow& a : q.arrows()) {
    Json entry;
    entry["name"] = a.name;
    entry["from"] = a.source;
    entry["to"] = a.target;
    arrows.push_back(std::move(entry));
  }
  j["arrows"] = std::move(arrows);
  return j;
}

Json to_json(const ComponentInfo& component) {
  Json j;
  j["vertices"] = component.subquiver.vertices();
  j["kind"] = component_kind_name(component.kind);
  j["size"] = component.size();
  return j;
}

Json to_json(const SingularityReport& report) {
  Json j;
  j["relation_quiver"] = to_json(report.rel_quiver);
  Json components = Json::array();
  for (const ComponentInfo& component : report.components) components.push_back(to_json(component));
  j["components"] = std::move(components);
  j["perfect_sizes"] = report.perfect_sizes;
  j["gorenstein"] = report.is_gorenstein;
  j["defect_quiver"] = to_json(report.defect_quiver);
  j["defect_quiver_sink_rule"] = to_json(report.defect_quiver_sink_rule);
  j["elimination_rules_differ"] = report.elimination_rules_differ;
  j["gorenstein_projective_generators"] = report.gorenstein_projective_generators;
  Json descriptors;
  descriptors["gproj"] = report.descriptors.gproj;
  descriptors["d_def"] = report.descriptors.d_def;
  descriptors["d_sg"] = report.descriptors.d_sg;
  j["descriptors"] = std::move(descriptors);
  j["notes"] = report.notes;
  return j;
}

Json to_json(const StabilizationResult& result) {
  Json j;
  j["status"] = result.status == StabilizationStatus::exact ? "EXACT" : "CUTOFF";
  j["dims"] = result.level_dims;
  if (result.status == StabilizationStatus::exact) {
    j["dim"] = result.colimit_dim;
    j["preperiod"] = result.period ? result.period->preperiod : 0;
    j["period"] = result.period ? result.period->period : 0;
  } else {
    j["rank_table"] = result.rank_table;
    j["stable_ranks"] = result.stable_ranks;
    j["ranks_monotone"] = result.ranks_monotone;
    j["all_connecting_injective"] = result.all_connecting_injective;
  }
  return j;
}

Json to_json(const CrossCheckReport& report) {
  Json j;
  j["status"] = report.pass ? "PASS" : "FAIL";
  j["depth"] = report.depth;
  Json levels = Json::array();
  for (const CrossCheckLevel& level : report.levels) {
    Json entry;
    entry["level"] = level.level;
    entry["dim_a"] = level.dim_a.get_str();
    entry["dim_b"] = level.dim_b.get_str();
    if (level.level < report.depth) {
      entry["rank_a"] = level.rank_a.get_str();
      entry["rank_b"] = level.rank_b.get_str();
    }
    entry["match"] = level.dims_match && level.ranks_match;
    levels.push_back(std::move(entry));
  }
  j["levels"] = std::move(levels);
  return j;
}

}  // namespace qmono
