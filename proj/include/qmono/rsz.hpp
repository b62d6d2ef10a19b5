#pragma once

#include <string>
#include <vector>

#include "qmono/algebra.hpp"
#include "qmono/rational.hpp"
#include "qmono/stable.hpp"

namespace qmono {

/// Relation quiver of a validated algebra: one vertex per arrow of Q, one
/// arrow "[b.a]" from a to b per forbidden pair "a then b". Labels
/// reconstruct their pairs.
Quiver relation_quiver(const MonomialAlgebra& a);

/// The radical-square-zero algebra on a quiver: every composable length-two
/// path is forbidden. Always admissible.
AlgebraPtr rsz_algebra(const Quiver& r);

/// An algebra together with its relation quiver and the radical-square-zero
/// algebra that quiver defines.
struct RszContext {
  AlgebraPtr algebra;
  Quiver rel_quiver;
  AlgebraPtr rsz;
};
RszContext make_rsz_context(AlgebraPtr a);

/// Arrow(a) over A becomes Simple(a-as-vertex) over the radical-square-zero
/// side; multiplicities preserved. Input must normalize to a pure arrow
/// sum (NOT_ARROW_SUM otherwise).
StableObject transport(const RszContext& ctx, const StableObject& x);

/// Stable syzygy of a semisimple object over a radical-square-zero algebra,
/// in simple-generator form: routed through the generic engine (arrow
/// summands of the radical) and read back along Arrow(b) ~ Simple(t(b)).
std::vector<Generator> rsz_semisimple_syzygy(const MonomialAlgebra& rsz,
                                             const std::vector<Generator>& simples);

/// Per-level dimensions and single-step connecting ranks of a hom tower,
/// computed on generator multiplicities with exact integer counts. This is
/// what the cross-check compares; it agrees with the dense direct system
/// wherever the latter is feasible (property-tested).
struct LevelTable {
  std::vector<Count> dims;   // levels 0..depth
  std::vector<Count> ranks;  // connecting maps 0..depth-1
};

/// A-side table: multiplicities evolve along non-projective forbidden
/// partners, hom pairs come from the neighbour sets of A.
LevelTable stable_hom_tower_a(const AlgebraPtr& a, const StableObject& x, const StableObject& y,
                              int depth);

/// Radical-square-zero-side table over semisimple objects: multiplicities
/// evolve along the quiver of the rsz algebra, hom pairs come from
/// inclusion of raw out-target sets (the neighbour condition read off the
/// relation quiver).
LevelTable stable_hom_tower_rsz(const RszContext& ctx, const StableObject& tx, const StableObject& ty,
                                int depth);

struct CrossCheckLevel {
  int level = 0;
  Count dim_a;
  Count dim_b;
  Count rank_a;   // connecting map out of this level; unused at the last level
  Count rank_b;
  bool dims_match = false;
  bool ranks_match = false;  // true at the last level by convention
};

struct CrossCheckReport {
  bool pass = false;
  int depth = 0;
  std::vector<CrossCheckLevel> levels;
};

/// Runs the same hom tower through both presentations (forbidden-pair
/// lookups over A, out-neighbour sets over the relation quiver) and
/// compares dimensions and connecting ranks level by level.
CrossCheckReport cross_check(const RszContext& ctx, const StableObject& x, const StableObject& y,
                             int depth);

}  // namespace qmono
