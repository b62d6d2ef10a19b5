#pragma once

#include <string>
#include <vector>

#include "qmono/algebra.hpp"
#include "qmono/quiver.hpp"
#include "qmono/rsz.hpp"

namespace qmono {

enum class ComponentKind { perfect, acyclic, defect };

const char* component_kind_name(ComponentKind kind);  // "PERFECT" etc.

struct ComponentInfo {
  Quiver subquiver;
  ComponentKind kind = ComponentKind::acyclic;

  int size() const { return subquiver.vertex_count(); }
};

/// Trichotomy of connected components: basic cycle / no oriented cycle /
/// neither.
std::vector<ComponentInfo> classify_components(const Quiver& relation_quiver);

/// No defect component in the relation quiver.
bool gorenstein(const MonomialAlgebra& a);

/// Hom dimension in the rotation category on n coordinates:
/// sum_i a_i * b_{(i+shift) mod n}. Simple at cycle position i is the
/// coordinate vector e_i.
long long tn_hom(int n, const std::vector<long long>& a, const std::vector<long long>& b, int shift);

/// Rendered descriptor strings are structured data, asserted by tests.
struct Descriptors {
  std::string gproj;  // "Gproj ≅ T_2 × T_3" or "Gproj ≅ 0"
  std::string d_def;  // "D_def ≅ (L(Z_2)-grproj, (−1))" or "D_def ≅ 0"
  std::string d_sg;
};

struct SingularityReport {
  Quiver rel_quiver;
  std::vector<ComponentInfo> components;
  std::vector<int> perfect_sizes;        // component order
  bool is_gorenstein = false;
  Quiver defect_union;                   // union of defect components
  Quiver defect_quiver;                  // source-eliminated defect union
  Quiver defect_quiver_sink_rule;        // sink-eliminated, for comparison
  bool elimination_rules_differ = false;
  std::vector<std::string> gorenstein_projective_generators;  // arrow names
  Descriptors descriptors;
  std::vector<std::string> notes;
};

SingularityReport singularity_report(const AlgebraPtr& a);

}  // namespace qmono
