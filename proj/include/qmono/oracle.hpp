#pragma once

#include <string>
#include <vector>

#include "qmono/algebra.hpp"
#include "qmono/rational.hpp"
#include "qmono/stable.hpp"

namespace qmono {

/// A module given by explicit rational matrices: one action matrix per
/// arrow, plus the vertex grading of each basis element. Everything here is
/// exact; there are no tolerances anywhere in this module.
struct ExplicitModule {
  AlgebraPtr algebra;
  std::vector<std::string> labels;
  std::vector<int> vertex_of;
  std::vector<RationalMatrix> action;  // indexed by arrow id, each dim x dim
  std::vector<std::pair<int, int>> slot_spans;  // (offset, size) per realized generator

  int dim() const { return static_cast<int>(labels.size()); }
  std::vector<int> dimension_vector() const;
};

/// Explicit realization of a formal sum: Arrow(a) on the nonzero paths
/// starting with a, Proj(v) on the basis of A·e_v, Simple(v) one
/// dimensional with zero actions. No stable normalization happens here.
ExplicitModule realize(const StableObject& x);

ExplicitModule direct_sum(const ExplicitModule& a, const ExplicitModule& b);

/// Solution space of the intertwiner equations: grading-respecting phi with
/// phi . action_m(a) = action_n(a) . phi for every arrow. Returned as full
/// matrices (target dim x source dim).
std::vector<RationalMatrix> hom_space(const ExplicitModule& m, const ExplicitModule& n);
int hom_dim(const ExplicitModule& m, const ExplicitModule& n);

/// Minimal projective cover computed from the module alone: generators are
/// lifted from a complement of the radical, one projective A·e_v per top
/// basis vector.
struct ProjectiveCover {
  ExplicitModule cover;
  RationalMatrix map;  // module dim x cover dim, surjective
};
ProjectiveCover projective_cover(const ExplicitModule& m);

/// dim of the stable Hom space: hom_dim minus the rank of the subspace of
/// maps factoring through a projective, computed as the image of
/// Hom(m, P(n)) -> Hom(m, n) along the projective cover P(n) ->> n.
int stable_hom_dim(const ExplicitModule& m, const ExplicitModule& n);

/// Whether phi: m -> n factors through a projective module.
bool factors_through_projectives(const ExplicitModule& m, const ExplicitModule& n,
                                 const RationalMatrix& phi);

/// Kernel-of-cover check for the syzygy formulas: compares the per-vertex
/// dimensions of ker(P(realize(x)) ->> realize(x)) with the realization of
/// the raw syzygy multiset.
struct SyzygyCheckResult {
  bool ok = false;
  std::vector<int> kernel_dimension_vector;
  std::vector<int> expected_dimension_vector;
  std::string diagnostic;
};
SyzygyCheckResult syzygy_check(const StableObject& x);

/// Explicit matrix of a stable morphism between realizations of its source
/// and target: each elementary pi_{a,a'} sends a basis path q = q'.a to
/// q'.a' when that path survives, to zero otherwise.
RationalMatrix realize_morphism(const StableMorphism& f, const ExplicitModule& source,
                                const ExplicitModule& target);

}  // namespace qmono
