#include "qmono/stable.hpp"

#include <algorithm>
#include <tuple>

#include "qmono/errors.hpp"

namespace qmono {

namespace {

int kind_rank(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::arrow: return 0;
    case GeneratorKind::simple: return 1;
    case GeneratorKind::projective: return 2;
  }
  return 3;
}

const std::string& referent_name(const MonomialAlgebra& algebra, const Generator& g) {
  if (g.kind == GeneratorKind::arrow) return algebra.quiver().arrow(g.index).name;
  return algebra.quiver().vertex(g.index);
}

bool generator_less(const MonomialAlgebra& algebra, const Generator& lhs, const Generator& rhs) {
  return std::make_tuple(kind_rank(lhs.kind), referent_name(algebra, lhs)) <
         std::make_tuple(kind_rank(rhs.kind), referent_name(algebra, rhs));
}

void require_same_algebra(const StableObject& x, const StableObject& y) {
  if (x.algebra().get() != y.algebra().get())
    throw Error(ErrorCode::algebra_mismatch, "objects live over different algebras");
}

bool entry_legal(const MonomialAlgebra& algebra, const Generator& source, const Generator& target) {
  if (source.kind != GeneratorKind::arrow || target.kind != GeneratorKind::arrow) return false;
  if (algebra.is_projective_arrow_module(source.index)) return false;
  return algebra.in_neighbor_set(source.index, target.index);
}

}  // namespace

std::string generator_to_string(const MonomialAlgebra& algebra, const Generator& g) {
  switch (g.kind) {
    case GeneratorKind::arrow: return "A(" + algebra.quiver().arrow(g.index).name + ")";
    case GeneratorKind::simple: return "S(" + algebra.quiver().vertex(g.index) + ")";
    case GeneratorKind::projective: return "P(" + algebra.quiver().vertex(g.index) + ")";
  }
  return "?";
}

StableObject::StableObject(AlgebraPtr algebra, std::vector<Generator> generators)
    : algebra_(std::move(algebra)), gens_(std::move(generators)) {
  if (!algebra_) throw Error(ErrorCode::invalid_argument, "stable object needs an algebra");
  const Quiver& q = algebra_->quiver();
  for (const Generator& g : gens_) {
    const int limit = g.kind == GeneratorKind::arrow ? q.arrow_count() : q.vertex_count();
    if (g.index < 0 || g.index >= limit)
      throw Error(ErrorCode::invalid_argument, "generator refers outside the algebra");
  }
  std::sort(gens_.begin(), gens_.end(),
            [this](const Generator& lhs, const Generator& rhs) { return generator_less(*algebra_, lhs, rhs); });
}

bool StableObject::pure_arrow_sum() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Generator& g) { return g.kind == GeneratorKind::arrow; });
}

std::string StableObject::to_string() const {
  if (gens_.empty()) return "0";
  std::string text;
  std::size_t i = 0;
  while (i < gens_.size()) {
    std::size_t j = i;
    while (j < gens_.size() && gens_[j] == gens_[i]) ++j;
    if (!text.empty()) text += " + ";
    const std::size_t count = j - i;
    if (count > 1) text += std::to_string(count) + "*";
    text += generator_to_string(*algebra_, gens_[i]);
    i = j;
  }
  return text;
}

StableObject normalize(const StableObject& x) {
  if (!x.algebra()) return x;
  std::vector<Generator> kept;
  for (const Generator& g : x.generators()) {
    if (g.kind == GeneratorKind::projective) continue;
    if (g.kind == GeneratorKind::arrow && x.algebra()->is_projective_arrow_module(g.index)) continue;
    kept.push_back(g);
  }
  return StableObject(x.algebra(), std::move(kept));
}

std::vector<Generator> syzygy_children(const MonomialAlgebra& algebra, const Generator& g) {
  std::vector<Generator> children;
  if (g.kind == GeneratorKind::arrow) {
    for (int b : algebra.left_annihilators(g.index)) {
      if (!algebra.is_projective_arrow_module(b)) children.push_back(Generator{GeneratorKind::arrow, b});
    }
  } else if (g.kind == GeneratorKind::simple) {
    for (int a : algebra.quiver().out_arrows(g.index)) {
      if (!algebra.is_projective_arrow_module(a)) children.push_back(Generator{GeneratorKind::arrow, a});
    }
  }
  std::sort(children.begin(), children.end(), [&](const Generator& lhs, const Generator& rhs) {
    return generator_less(algebra, lhs, rhs);
  });
  return children;
}

StableObject syzygy(const StableObject& x) {
  if (!x.algebra()) return x;
  const StableObject n = normalize(x);
  std::vector<Generator> gens;
  for (const Generator& g : n.generators()) {
    for (const Generator& child : syzygy_children(*n.algebra(), g)) gens.push_back(child);
  }
  return StableObject(n.algebra(), std::move(gens));
}

StableObject syzygy_raw(const StableObject& x) {
  if (!x.algebra()) return x;
  const MonomialAlgebra& algebra = *x.algebra();
  std::vector<Generator> gens;
  for (const Generator& g : x.generators()) {
    if (g.kind == GeneratorKind::arrow) {
      for (int b : algebra.left_annihilators(g.index)) gens.push_back(Generator{GeneratorKind::arrow, b});
    } else if (g.kind == GeneratorKind::simple) {
      for (int a : algebra.quiver().out_arrows(g.index)) gens.push_back(Generator{GeneratorKind::arrow, a});
    }
    // Projective summands cover themselves; the kernel is zero.
  }
  return StableObject(x.algebra(), std::move(gens));
}

SyzygyExpansion syzygy_expand(const StableObject& x) {
  const StableObject n = normalize(x);
  const MonomialAlgebra& algebra = *n.algebra();

  struct Tagged {
    Generator gen;
    int parent;
    int ordinal;
  };
  std::vector<Tagged> all;
  std::vector<std::size_t> child_counts;
  for (int slot = 0; slot < n.size(); ++slot) {
    const auto children = syzygy_children(algebra, n.generators()[static_cast<std::size_t>(slot)]);
    child_counts.push_back(children.size());
    for (std::size_t k = 0; k < children.size(); ++k)
      all.push_back(Tagged{children[k], slot, static_cast<int>(k)});
  }
  std::stable_sort(all.begin(), all.end(), [&](const Tagged& lhs, const Tagged& rhs) {
    return generator_less(algebra, lhs.gen, rhs.gen);
  });

  SyzygyExpansion expansion;
  std::vector<Generator> gens;
  expansion.child_slots.assign(static_cast<std::size_t>(n.size()), {});
  for (int slot = 0; slot < n.size(); ++slot)
    expansion.child_slots[static_cast<std::size_t>(slot)].resize(child_counts[static_cast<std::size_t>(slot)]);
  for (std::size_t pos = 0; pos < all.size(); ++pos) {
    gens.push_back(all[pos].gen);
    expansion.child_slots[static_cast<std::size_t>(all[pos].parent)][static_cast<std::size_t>(all[pos].ordinal)] =
        static_cast<int>(pos);
  }
  expansion.result = StableObject(n.algebra(), std::move(gens));
  return expansion;
}

HomSpace stable_hom(const StableObject& x, const StableObject& y) {
  require_same_algebra(x, y);
  HomSpace hom;
  hom.source = normalize(x);
  hom.target = normalize(y);
  const MonomialAlgebra& algebra = *x.algebra();
  for (int s = 0; s < hom.source.size(); ++s) {
    const Generator& src = hom.source.generators()[static_cast<std::size_t>(s)];
    if (src.kind != GeneratorKind::arrow) continue;
    if (algebra.is_projective_arrow_module(src.index)) continue;
    for (int t = 0; t < hom.target.size(); ++t) {
      const Generator& tgt = hom.target.generators()[static_cast<std::size_t>(t)];
      if (tgt.kind != GeneratorKind::arrow) continue;
      if (algebra.in_neighbor_set(src.index, tgt.index)) hom.basis.emplace_back(s, t);
    }
  }
  std::sort(hom.basis.begin(), hom.basis.end());
  return hom;
}

namespace {

void require_normalized(const StableObject& object, const char* role) {
  if (!(normalize(object) == object))
    throw Error(ErrorCode::invalid_argument,
                std::string("morphism ") + role + " must be a normalized object");
}

}  // namespace

StableMorphism StableMorphism::zero(StableObject source, StableObject target) {
  require_same_algebra(source, target);
  require_normalized(source, "source");
  require_normalized(target, "target");
  RationalMatrix m = RationalMatrix::Zero(target.size(), source.size());
  return StableMorphism(std::move(source), std::move(target), std::move(m));
}

StableMorphism StableMorphism::identity(StableObject object) {
  require_normalized(object, "source");
  const MonomialAlgebra& algebra = *object.algebra();
  RationalMatrix m = RationalMatrix::Zero(object.size(), object.size());
  for (int i = 0; i < object.size(); ++i) {
    const Generator& g = object.generators()[static_cast<std::size_t>(i)];
    if (!entry_legal(algebra, g, g))
      throw Error(ErrorCode::illegal_morphism,
                  "identity is only expressible on sums of non-projective arrow modules");
    m(i, i) = 1;
  }
  StableObject copy = object;
  return StableMorphism(std::move(copy), std::move(object), std::move(m));
}

StableMorphism StableMorphism::elementary(StableObject source, StableObject target, int source_slot,
                                          int target_slot) {
  require_same_algebra(source, target);
  require_normalized(source, "source");
  require_normalized(target, "target");
  if (source_slot < 0 || source_slot >= source.size() || target_slot < 0 || target_slot >= target.size())
    throw Error(ErrorCode::invalid_argument, "slot out of range");
  const MonomialAlgebra& algebra = *source.algebra();
  if (!entry_legal(algebra, source.generators()[static_cast<std::size_t>(source_slot)],
                   target.generators()[static_cast<std::size_t>(target_slot)]))
    throw Error(ErrorCode::illegal_morphism, "no elementary epimorphism between these summands");
  RationalMatrix m = RationalMatrix::Zero(target.size(), source.size());
  m(target_slot, source_slot) = 1;
  return StableMorphism(std::move(source), std::move(target), std::move(m));
}

StableMorphism StableMorphism::from_matrix(StableObject source, StableObject target,
                                           RationalMatrix matrix) {
  require_same_algebra(source, target);
  require_normalized(source, "source");
  require_normalized(target, "target");
  if (matrix.rows() != target.size() || matrix.cols() != source.size())
    throw Error(ErrorCode::shape_mismatch, "matrix shape does not match the objects");
  const MonomialAlgebra& algebra = *source.algebra();
  for (int t = 0; t < target.size(); ++t) {
    for (int s = 0; s < source.size(); ++s) {
      if (matrix(t, s) == 0) continue;
      if (!entry_legal(algebra, source.generators()[static_cast<std::size_t>(s)],
                       target.generators()[static_cast<std::size_t>(t)]))
        throw Error(ErrorCode::illegal_morphism,
                    "nonzero entry at a slot pair without an elementary epimorphism");
    }
  }
  return StableMorphism(std::move(source), std::move(target), std::move(matrix));
}

StableMorphism compose(const StableMorphism& g, const StableMorphism& f) {
  if (!(f.target() == g.source()))
    throw Error(ErrorCode::shape_mismatch, "target of the first morphism differs from source of the second");
  RationalMatrix product = g.matrix() * f.matrix();
  return StableMorphism::from_matrix(f.source(), g.target(), std::move(product));
}

StableMorphism syzygy(const StableMorphism& f) {
  const MonomialAlgebra& algebra = *f.source().algebra();
  const SyzygyExpansion sx = syzygy_expand(f.source());
  const SyzygyExpansion sy = syzygy_expand(f.target());
  RationalMatrix m = RationalMatrix::Zero(sy.result.size(), sx.result.size());
  for (int t = 0; t < f.target().size(); ++t) {
    for (int s = 0; s < f.source().size(); ++s) {
      const Rational& coefficient = f.matrix()(t, s);
      if (coefficient == 0) continue;
      const Generator& src = f.source().generators()[static_cast<std::size_t>(s)];
      const Generator& tgt = f.target().generators()[static_cast<std::size_t>(t)];
      const auto source_children = syzygy_children(algebra, src);
      const auto target_children = syzygy_children(algebra, tgt);
      // Shared summands: children of the source are a subset of children of
      // the target because the target arrow neighbours the source arrow.
      for (std::size_t k = 0; k < source_children.size(); ++k) {
        const auto it = std::find(target_children.begin(), target_children.end(), source_children[k]);
        if (it == target_children.end())
          throw Error(ErrorCode::illegal_morphism, "syzygy of an illegal morphism");
        const std::size_t kk = static_cast<std::size_t>(it - target_children.begin());
        const int u = sx.child_slots[static_cast<std::size_t>(s)][k];
        const int v = sy.child_slots[static_cast<std::size_t>(t)][kk];
        m(v, u) += coefficient;
      }
    }
  }
  return StableMorphism::from_matrix(sx.result, sy.result, std::move(m));
}

}  // namespace qmono
