#include "qmono/oracle.hpp"

#include <algorithm>
#include <map>

#include "qmono/errors.hpp"
#include "qmono/exact_linalg.hpp"

namespace qmono {

namespace {

void require_same_algebra(const ExplicitModule& m, const ExplicitModule& n) {
  if (m.algebra.get() != n.algebra.get())
    throw Error(ErrorCode::algebra_mismatch, "modules live over different algebras");
}

// Module on a list of nonzero paths closed under arrow actions inside the
// span (products leaving the list are zero).
ExplicitModule module_on_paths(const AlgebraPtr& algebra, const std::vector<Path>& paths) {
  const Quiver& q = algebra->quiver();
  ExplicitModule m;
  m.algebra = algebra;
  std::map<std::vector<int>, int> index;  // keyed by (source, arrows)
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const Path& p = paths[i];
    m.labels.push_back(algebra->path_to_string(p));
    const int target = p.trivial() ? p.source : q.target_of(p.arrows.back());
    m.vertex_of.push_back(target);
    std::vector<int> key{p.source};
    key.insert(key.end(), p.arrows.begin(), p.arrows.end());
    index[key] = static_cast<int>(i);
  }
  const int dim = static_cast<int>(paths.size());
  m.action.assign(static_cast<std::size_t>(q.arrow_count()), RationalMatrix::Zero(dim, dim));
  for (int a = 0; a < q.arrow_count(); ++a) {
    RationalMatrix& act = m.action[static_cast<std::size_t>(a)];
    for (int j = 0; j < dim; ++j) {
      const Path& p = paths[static_cast<std::size_t>(j)];
      const int target = p.trivial() ? p.source : q.target_of(p.arrows.back());
      if (q.source_of(a) != target) continue;
      if (!p.trivial() && algebra->is_forbidden(p.arrows.back(), a)) continue;
      std::vector<int> key{p.source};
      key.insert(key.end(), p.arrows.begin(), p.arrows.end());
      key.push_back(a);
      const auto it = index.find(key);
      if (it != index.end()) act(it->second, j) = 1;
    }
  }
  return m;
}

ExplicitModule realize_generator(const AlgebraPtr& algebra, const Generator& g) {
  switch (g.kind) {
    case GeneratorKind::arrow:
      return module_on_paths(algebra, algebra->arrow_module_basis(g.index));
    case GeneratorKind::projective:
      return module_on_paths(algebra, algebra->projective_module_basis(g.index));
    case GeneratorKind::simple: {
      ExplicitModule m;
      m.algebra = algebra;
      m.labels.push_back("s(" + algebra->quiver().vertex(g.index) + ")");
      m.vertex_of.push_back(g.index);
      m.action.assign(static_cast<std::size_t>(algebra->quiver().arrow_count()),
                      RationalMatrix::Zero(1, 1));
      return m;
    }
  }
  throw Error(ErrorCode::invalid_argument, "unknown generator kind");
}

// Unknown layout for the intertwiner system: only grading-compatible
// entries of phi are variables.
struct UnknownLayout {
  std::vector<std::pair<int, int>> positions;           // (row in n, col in m)
  std::vector<std::vector<int>> index;                  // [row][col] -> unknown id or -1
};

UnknownLayout layout_unknowns(const ExplicitModule& m, const ExplicitModule& n) {
  UnknownLayout layout;
  layout.index.assign(static_cast<std::size_t>(n.dim()), std::vector<int>(static_cast<std::size_t>(m.dim()), -1));
  for (int i = 0; i < n.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      if (n.vertex_of[static_cast<std::size_t>(i)] == m.vertex_of[static_cast<std::size_t>(j)]) {
        layout.index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            static_cast<int>(layout.positions.size());
        layout.positions.emplace_back(i, j);
      }
    }
  }
  return layout;
}

}  // namespace

std::vector<int> ExplicitModule::dimension_vector() const {
  std::vector<int> dims(static_cast<std::size_t>(algebra->quiver().vertex_count()), 0);
  for (int v : vertex_of) ++dims[static_cast<std::size_t>(v)];
  return dims;
}

ExplicitModule direct_sum(const ExplicitModule& a, const ExplicitModule& b) {
  require_same_algebra(a, b);
  ExplicitModule sum;
  sum.algebra = a.algebra;
  sum.labels = a.labels;
  sum.labels.insert(sum.labels.end(), b.labels.begin(), b.labels.end());
  sum.vertex_of = a.vertex_of;
  sum.vertex_of.insert(sum.vertex_of.end(), b.vertex_of.begin(), b.vertex_of.end());
  const int total = a.dim() + b.dim();
  sum.action.assign(a.action.size(), RationalMatrix::Zero(total, total));
  for (std::size_t k = 0; k < a.action.size(); ++k) {
    sum.action[k].topLeftCorner(a.dim(), a.dim()) = a.action[k];
    sum.action[k].bottomRightCorner(b.dim(), b.dim()) = b.action[k];
  }
  sum.slot_spans = a.slot_spans;
  for (const auto& [offset, size] : b.slot_spans) sum.slot_spans.emplace_back(offset + a.dim(), size);
  return sum;
}

ExplicitModule realize(const StableObject& x) {
  ExplicitModule total;
  total.algebra = x.algebra();
  total.action.assign(static_cast<std::size_t>(x.algebra()->quiver().arrow_count()),
                      RationalMatrix::Zero(0, 0));
  for (const Generator& g : x.generators()) {
    ExplicitModule part = realize_generator(x.algebra(), g);
    part.slot_spans = {{0, part.dim()}};
    total = direct_sum(total, part);
  }
  return total;
}

std::vector<RationalMatrix> hom_space(const ExplicitModule& m, const ExplicitModule& n) {
  require_same_algebra(m, n);
  const UnknownLayout layout = layout_unknowns(m, n);
  const int unknowns = static_cast<int>(layout.positions.size());
  if (unknowns == 0) return {};

  // One equation row per (arrow, i, j) with i in the target block of the
  // arrow and j in its source block; all other rows vanish identically.
  std::vector<Eigen::Index> row_offsets;
  Eigen::Index rows = 0;
  const Quiver& q = m.algebra->quiver();
  for (int a = 0; a < q.arrow_count(); ++a) {
    row_offsets.push_back(rows);
    for (int i = 0; i < n.dim(); ++i) {
      if (n.vertex_of[static_cast<std::size_t>(i)] != q.target_of(a)) continue;
      for (int j = 0; j < m.dim(); ++j) {
        if (m.vertex_of[static_cast<std::size_t>(j)] != q.source_of(a)) continue;
        ++rows;
      }
    }
  }
  RationalMatrix system = RationalMatrix::Zero(rows, unknowns);
  Eigen::Index row = 0;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const RationalMatrix& act_n = n.action[static_cast<std::size_t>(a)];
    const RationalMatrix& act_m = m.action[static_cast<std::size_t>(a)];
    for (int i = 0; i < n.dim(); ++i) {
      if (n.vertex_of[static_cast<std::size_t>(i)] != q.target_of(a)) continue;
      for (int j = 0; j < m.dim(); ++j) {
        if (m.vertex_of[static_cast<std::size_t>(j)] != q.source_of(a)) continue;
        // sum_k act_n(i,k) phi(k,j) - sum_k phi(i,k) act_m(k,j) = 0
        for (int k = 0; k < n.dim(); ++k) {
          if (act_n(i, k) == 0) continue;
          const int id = layout.index[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
          if (id >= 0) system(row, id) += act_n(i, k);
        }
        for (int k = 0; k < m.dim(); ++k) {
          if (act_m(k, j) == 0) continue;
          const int id = layout.index[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
          if (id >= 0) system(row, id) -= act_m(k, j);
        }
        ++row;
      }
    }
  }

  const RationalMatrix kernel = null_space_basis(system);
  std::vector<RationalMatrix> result;
  for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
    RationalMatrix phi = RationalMatrix::Zero(n.dim(), m.dim());
    for (int u = 0; u < unknowns; ++u) {
      const auto [i, j] = layout.positions[static_cast<std::size_t>(u)];
      phi(i, j) = kernel(u, c);
    }
    result.push_back(std::move(phi));
  }
  return result;
}

int hom_dim(const ExplicitModule& m, const ExplicitModule& n) {
  return static_cast<int>(hom_space(m, n).size());
}

ProjectiveCover projective_cover(const ExplicitModule& m) {
  const AlgebraPtr algebra = m.algebra;
  const Quiver& q = algebra->quiver();

  // Radical = sum of the images of all arrow actions. A complement of it,
  // picked greedily from standard basis vectors, lifts the top.
  RationalMatrix span = RationalMatrix::Zero(m.dim(), 0);
  for (const RationalMatrix& act : m.action) {
    for (Eigen::Index c = 0; c < act.cols(); ++c) {
      bool zero = true;
      for (Eigen::Index r = 0; r < act.rows() && zero; ++r) zero = act(r, c) == 0;
      if (zero) continue;
      span.conservativeResize(m.dim(), span.cols() + 1);
      span.col(span.cols() - 1) = act.col(c);
    }
  }
  Eigen::Index current_rank = rank(span);
  std::vector<int> generator_rows;
  for (int r = 0; r < m.dim(); ++r) {
    RationalMatrix candidate = RationalMatrix::Zero(m.dim(), span.cols() + 1);
    candidate.leftCols(span.cols()) = span;
    candidate(r, span.cols()) = 1;
    const Eigen::Index new_rank = rank(candidate);
    if (new_rank > current_rank) {
      generator_rows.push_back(r);
      span = std::move(candidate);
      current_rank = new_rank;
    }
  }

  ProjectiveCover result;
  StableObject cover_shape(algebra, [&] {
    std::vector<Generator> gens;
    for (int r : generator_rows)
      gens.push_back(Generator{GeneratorKind::projective, m.vertex_of[static_cast<std::size_t>(r)]});
    return gens;
  }());
  // Keep generator_rows aligned with the sorted cover object.
  std::sort(generator_rows.begin(), generator_rows.end(), [&](int lhs, int rhs) {
    const std::string& ln = q.vertex(m.vertex_of[static_cast<std::size_t>(lhs)]);
    const std::string& rn = q.vertex(m.vertex_of[static_cast<std::size_t>(rhs)]);
    return std::tie(ln, lhs) < std::tie(rn, rhs);
  });
  result.cover = realize(cover_shape);

  result.map = RationalMatrix::Zero(m.dim(), result.cover.dim());
  for (std::size_t slot = 0; slot < generator_rows.size(); ++slot) {
    const int gen_row = generator_rows[slot];
    const int vertex = m.vertex_of[static_cast<std::size_t>(gen_row)];
    const auto [offset, size] = result.cover.slot_spans[slot];
    const std::vector<Path> basis = algebra->projective_module_basis(vertex);
    for (int b = 0; b < size; ++b) {
      // Column = action of the basis path applied to the lifted generator.
      RationalVector vec = RationalVector::Zero(m.dim());
      vec(gen_row) = 1;
      for (int arrow : basis[static_cast<std::size_t>(b)].arrows)
        vec = m.action[static_cast<std::size_t>(arrow)] * vec;
      result.map.col(offset + b) = vec;
    }
  }
  return result;
}

namespace {

// Vectorize phi over the grading-compatible unknown positions of (m, n).
RationalVector vectorize(const UnknownLayout& layout, const RationalMatrix& phi) {
  RationalVector v = RationalVector::Zero(static_cast<Eigen::Index>(layout.positions.size()));
  for (std::size_t u = 0; u < layout.positions.size(); ++u) {
    const auto [i, j] = layout.positions[u];
    v(static_cast<Eigen::Index>(u)) = phi(i, j);
  }
  return v;
}

RationalMatrix projective_image_basis(const ExplicitModule& m, const ExplicitModule& n,
                                      const UnknownLayout& layout) {
  const ProjectiveCover cover = projective_cover(n);
  const std::vector<RationalMatrix> lifts = hom_space(m, cover.cover);
  RationalMatrix images(static_cast<Eigen::Index>(layout.positions.size()),
                        static_cast<Eigen::Index>(lifts.size()));
  for (std::size_t k = 0; k < lifts.size(); ++k)
    images.col(static_cast<Eigen::Index>(k)) = vectorize(layout, cover.map * lifts[k]);
  return images;
}

}  // namespace

int stable_hom_dim(const ExplicitModule& m, const ExplicitModule& n) {
  require_same_algebra(m, n);
  const int total = hom_dim(m, n);
  if (total == 0) return 0;
  const UnknownLayout layout = layout_unknowns(m, n);
  const RationalMatrix images = projective_image_basis(m, n, layout);
  return total - static_cast<int>(rank(images));
}

bool factors_through_projectives(const ExplicitModule& m, const ExplicitModule& n,
                                 const RationalMatrix& phi) {
  require_same_algebra(m, n);
  const UnknownLayout layout = layout_unknowns(m, n);
  const RationalMatrix images = projective_image_basis(m, n, layout);
  return in_column_span(images, vectorize(layout, phi));
}

SyzygyCheckResult syzygy_check(const StableObject& x) {
  SyzygyCheckResult result;
  const ExplicitModule module = realize(x);
  const int nv = x.algebra()->quiver().vertex_count();
  result.kernel_dimension_vector.assign(static_cast<std::size_t>(nv), 0);

  if (module.dim() > 0) {
    const ProjectiveCover cover = projective_cover(module);
    // The cover map is graded, so its kernel splits by vertex.
    for (int v = 0; v < nv; ++v) {
      std::vector<Eigen::Index> cover_cols;
      for (int c = 0; c < cover.cover.dim(); ++c) {
        if (cover.cover.vertex_of[static_cast<std::size_t>(c)] == v) cover_cols.push_back(c);
      }
      if (cover_cols.empty()) continue;
      RationalMatrix sub(module.dim(), static_cast<Eigen::Index>(cover_cols.size()));
      for (std::size_t c = 0; c < cover_cols.size(); ++c) sub.col(static_cast<Eigen::Index>(c)) = cover.map.col(cover_cols[c]);
      result.kernel_dimension_vector[static_cast<std::size_t>(v)] +=
          static_cast<int>(null_space_dim(sub));
    }
  }

  result.expected_dimension_vector = realize(syzygy_raw(x)).dimension_vector();
  result.ok = result.kernel_dimension_vector == result.expected_dimension_vector;
  if (!result.ok) {
    result.diagnostic = "kernel dimension vector differs from the syzygy realization";
  }
  return result;
}

RationalMatrix realize_morphism(const StableMorphism& f, const ExplicitModule& source,
                                const ExplicitModule& target) {
  const AlgebraPtr algebra = f.source().algebra();
  RationalMatrix out = RationalMatrix::Zero(target.dim(), source.dim());
  for (int t = 0; t < f.target().size(); ++t) {
    for (int s = 0; s < f.source().size(); ++s) {
      const Rational& coefficient = f.matrix()(t, s);
      if (coefficient == 0) continue;
      const Generator src = f.source().generators()[static_cast<std::size_t>(s)];
      const Generator tgt = f.target().generators()[static_cast<std::size_t>(t)];
      const auto [src_offset, src_size] = source.slot_spans[static_cast<std::size_t>(s)];
      const auto [tgt_offset, tgt_size] = target.slot_spans[static_cast<std::size_t>(t)];
      const std::vector<Path> src_basis = algebra->arrow_module_basis(src.index);
      const std::vector<Path> tgt_basis = algebra->arrow_module_basis(tgt.index);
      for (int j = 0; j < src_size; ++j) {
        // pi sends the path q'.a to q'.a' (first arrow replaced).
        Path image = src_basis[static_cast<std::size_t>(j)];
        image.arrows.front() = tgt.index;
        image.source = algebra->quiver().source_of(tgt.index);
        if (!algebra->path_is_nonzero(image)) continue;
        const auto it = std::find(tgt_basis.begin(), tgt_basis.end(), image);
        if (it == tgt_basis.end()) continue;
        const int i = static_cast<int>(it - tgt_basis.begin());
        out(tgt_offset + i, src_offset + j) += coefficient;
      }
    }
  }
  return out;
}

}  // namespace qmono
