#include "qmono/report.hpp"

#include <algorithm>

#include "qmono/errors.hpp"

namespace qmono {

const char* component_kind_name(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::perfect: return "PERFECT";
    case ComponentKind::acyclic: return "ACYCLIC";
    case ComponentKind::defect: return "DEFECT";
  }
  return "?";
}

std::vector<ComponentInfo> classify_components(const Quiver& relation_quiver) {
  std::vector<ComponentInfo> result;
  for (Quiver& component : connected_components(relation_quiver)) {
    ComponentInfo info;
    if (is_basic_cycle(component)) {
      info.kind = ComponentKind::perfect;
    } else if (!has_oriented_cycle(component)) {
      info.kind = ComponentKind::acyclic;
    } else {
      info.kind = ComponentKind::defect;
    }
    info.subquiver = std::move(component);
    result.push_back(std::move(info));
  }
  return result;
}

bool gorenstein(const MonomialAlgebra& a) {
  for (const ComponentInfo& component : classify_components(relation_quiver(a))) {
    if (component.kind == ComponentKind::defect) return false;
  }
  return true;
}

long long tn_hom(int n, const std::vector<long long>& a, const std::vector<long long>& b, int shift) {
  if (n <= 0) throw Error(ErrorCode::invalid_argument, "n must be positive");
  if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
    throw Error(ErrorCode::length_mismatch,
                "dimension vectors must have length " + std::to_string(n));
  for (long long v : a)
    if (v < 0) throw Error(ErrorCode::invalid_argument, "dimension vectors must be nonnegative");
  for (long long v : b)
    if (v < 0) throw Error(ErrorCode::invalid_argument, "dimension vectors must be nonnegative");
  const int s = ((shift % n) + n) % n;
  long long total = 0;
  for (int i = 0; i < n; ++i) total += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>((i + s) % n)];
  return total;
}

namespace {

std::string join_t_factors(const std::vector<int>& sizes) {
  std::string text;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) text += " × ";
    text += "T_" + std::to_string(sizes[i]);
  }
  return text;
}

// How the defect quiver is named inside descriptor strings.
std::string defect_quiver_name(const SingularityReport& report) {
  if (is_basic_cycle(report.defect_quiver))
    return "Z_" + std::to_string(report.defect_quiver.vertex_count());
  if (report.defect_quiver == report.rel_quiver) return "R_A";
  return "Q'";
}

}  // namespace

SingularityReport singularity_report(const AlgebraPtr& a) {
  SingularityReport report;
  report.rel_quiver = relation_quiver(*a);
  report.components = classify_components(report.rel_quiver);

  std::vector<std::string> defect_vertices;
  std::vector<std::string> gp_arrows;
  for (const ComponentInfo& component : report.components) {
    if (component.kind == ComponentKind::perfect) {
      report.perfect_sizes.push_back(component.size());
      for (const std::string& v : component.subquiver.vertices()) gp_arrows.push_back(v);
    } else if (component.kind == ComponentKind::defect) {
      for (const std::string& v : component.subquiver.vertices()) defect_vertices.push_back(v);
    }
  }
  report.is_gorenstein = defect_vertices.empty();
  report.defect_union = subquiver_on(report.rel_quiver, defect_vertices);
  report.defect_quiver = eliminate_sources(report.defect_union);
  report.defect_quiver_sink_rule = eliminate_sinks(report.defect_union);
  report.elimination_rules_differ = !(report.defect_quiver == report.defect_quiver_sink_rule);

  std::sort(gp_arrows.begin(), gp_arrows.end());
  report.gorenstein_projective_generators = std::move(gp_arrows);

  const std::string t_list = join_t_factors(report.perfect_sizes);
  report.descriptors.gproj = report.perfect_sizes.empty() ? "Gproj ≅ 0" : "Gproj ≅ " + t_list;
  if (report.is_gorenstein) {
    report.descriptors.d_def = "D_def ≅ 0";
    report.descriptors.d_sg =
        report.perfect_sizes.empty() ? "D_sg ≅ 0" : "D_sg ≅ " + t_list;
  } else {
    const std::string name = defect_quiver_name(report);
    const std::string leavitt = "(L(" + name + ")-grproj, (−1))";
    report.descriptors.d_def = "D_def ≅ " + leavitt;
    if (report.perfect_sizes.empty()) {
      report.descriptors.d_sg = "D_sg ≅ D_def ≅ " + leavitt;
    } else if (is_basic_cycle(report.defect_quiver)) {
      report.descriptors.d_sg =
          "D_sg ≅ " + t_list + " × T_" + std::to_string(report.defect_quiver.vertex_count());
    } else {
      report.descriptors.d_sg = "D_sg ≅ " + t_list + " × " + leavitt;
    }
  }

  report.notes.push_back(
      "arithmetic: exact rational; dimensions are characteristic-independent");
  report.notes.push_back("defect quiver Q' computed by source-elimination "
                         "(iterated removal of vertices with no incoming arrow)");
  if (report.elimination_rules_differ) {
    report.notes.push_back(
        "source- and sink-elimination differ on this instance; sink-elimination would keep " +
        std::to_string(report.defect_quiver_sink_rule.vertex_count()) + " vertices instead of " +
        std::to_string(report.defect_quiver.vertex_count()));
  }
  return report;
}

}  // namespace qmono
