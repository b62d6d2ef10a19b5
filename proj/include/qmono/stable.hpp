#pragma once

#include <string>
#include <vector>

#include "qmono/algebra.hpp"
#include "qmono/rational.hpp"

namespace qmono {

enum class GeneratorKind { arrow, simple, projective };

/// One summand of a formal direct sum: A·a (arrow), S_v (simple) or
/// A·e_v (projective).
struct Generator {
  GeneratorKind kind;
  int index;  // arrow id for arrow, vertex id otherwise

  bool operator==(const Generator& other) const = default;
};

/// Formal finite direct sum of generators over a fixed algebra, kept as a
/// sorted list (kind first, then referent name). Value type; empty sums are
/// legal and flow through every operation.
class StableObject {
 public:
  StableObject() = default;
  explicit StableObject(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}
  StableObject(AlgebraPtr algebra, std::vector<Generator> generators);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<Generator>& generators() const { return gens_; }
  int size() const { return static_cast<int>(gens_.size()); }
  bool empty() const { return gens_.empty(); }
  bool pure_arrow_sum() const;

  bool operator==(const StableObject& other) const {
    return algebra_.get() == other.algebra_.get() && gens_ == other.gens_;
  }

  std::string to_string() const;  // e.g. "A(x) + 2*A(y)", "0" when empty

 private:
  AlgebraPtr algebra_;
  std::vector<Generator> gens_;
};

std::string generator_to_string(const MonomialAlgebra& algebra, const Generator& g);

/// Drops projective summands (all Proj generators, and Arrow generators
/// whose arrow module is projective). Idempotent.
StableObject normalize(const StableObject& x);

/// Stable syzygy: Arrow(a) -> its non-projective left annihilators,
/// Simple(v) -> non-projective arrow modules at arrows out of v, projective
/// summands -> nothing. Output is normalized by construction.
StableObject syzygy(const StableObject& x);

/// Module-theoretic kernel of the projective cover, as a generator
/// multiset: like syzygy but keeping projective arrow summands. This is the
/// exact-sequence bookkeeping form the linear oracle checks against.
StableObject syzygy_raw(const StableObject& x);

/// Normalized children of one generator under the stable syzygy, sorted.
std::vector<Generator> syzygy_children(const MonomialAlgebra& algebra, const Generator& g);

/// Syzygy of a whole object together with the slot assignment: child_slots
/// aligns with syzygy_children of each input slot and names the positions
/// in the (sorted) result.
struct SyzygyExpansion {
  StableObject result;
  std::vector<std::vector<int>> child_slots;
};
SyzygyExpansion syzygy_expand(const StableObject& x);

/// Basis of the stable Hom space between (the normalizations of) x and y:
/// one elementary epimorphism per ordered slot pair (Arrow(a) slot of the
/// source, Arrow(a') slot of the target) with A·a non-projective and
/// a' in N(a). Simple summands contribute no basis elements here; the
/// calculus covers arrow modules.
struct HomSpace {
  StableObject source;  // normalized
  StableObject target;  // normalized
  std::vector<std::pair<int, int>> basis;  // (source slot, target slot), sorted

  int dim() const { return static_cast<int>(basis.size()); }
};
HomSpace stable_hom(const StableObject& x, const StableObject& y);

/// Matrix of rational multiples of elementary epimorphisms. Rows are
/// indexed by target slots, columns by source slots; a nonzero entry at
/// (t, s) is legal only when slot s is a non-projective Arrow(a), slot t an
/// Arrow(a') with a' in N(a) (the entry means that multiple of pi_{a,a'}).
class StableMorphism {
 public:
  static StableMorphism zero(StableObject source, StableObject target);
  static StableMorphism identity(StableObject object);
  static StableMorphism elementary(StableObject source, StableObject target, int source_slot,
                                   int target_slot);
  static StableMorphism from_matrix(StableObject source, StableObject target, RationalMatrix matrix);

  const StableObject& source() const { return source_; }
  const StableObject& target() const { return target_; }
  const RationalMatrix& matrix() const { return matrix_; }

  bool operator==(const StableMorphism& other) const {
    return source_ == other.source_ && target_ == other.target_ && matrix_ == other.matrix_;
  }

 private:
  StableMorphism(StableObject source, StableObject target, RationalMatrix matrix)
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {}

  StableObject source_;
  StableObject target_;
  RationalMatrix matrix_;
};

/// g after f. Entrywise pi_{a',a''} . pi_{a,a'} = pi_{a,a''}; legality of
/// the product is guaranteed by transitivity of the neighbour relation.
StableMorphism compose(const StableMorphism& g, const StableMorphism& f);

/// Functorial syzygy on morphisms: each elementary pi_{a,a'} becomes the
/// block inclusion matrix on shared syzygy summands, coefficients carried
/// through.
StableMorphism syzygy(const StableMorphism& f);

}  // namespace qmono
