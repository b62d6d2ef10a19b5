#include "qmono/rsz.hpp"

#include <algorithm>
#include <map>

#include "qmono/errors.hpp"

namespace qmono {

Quiver relation_quiver(const MonomialAlgebra& a) {
  const Quiver& q = a.quiver();
  std::vector<std::string> vertices;
  vertices.reserve(static_cast<std::size_t>(q.arrow_count()));
  for (const Arrow& arrow : q.arrows()) vertices.push_back(arrow.name);
  std::vector<Arrow> arrows;
  for (const auto& [first, second] : a.forbidden_pairs()) {
    const std::string& fn = q.arrow(first).name;
    const std::string& sn = q.arrow(second).name;
    arrows.push_back(Arrow{"[" + sn + "." + fn + "]", fn, sn});
  }
  return Quiver(std::move(vertices), std::move(arrows));
}

AlgebraPtr rsz_algebra(const Quiver& r) {
  MonomialPresentation presentation;
  presentation.quiver = r;
  for (int a = 0; a < r.arrow_count(); ++a) {
    for (int b : r.out_arrows(r.target_of(a)))
      presentation.forbidden.push_back(LengthTwoPath{r.arrow(a).name, r.arrow(b).name});
  }
  return MonomialAlgebra::validate(presentation);
}

RszContext make_rsz_context(AlgebraPtr a) {
  RszContext ctx;
  ctx.rel_quiver = relation_quiver(*a);
  ctx.rsz = rsz_algebra(ctx.rel_quiver);
  ctx.algebra = std::move(a);
  return ctx;
}

StableObject transport(const RszContext& ctx, const StableObject& x) {
  if (x.algebra().get() != ctx.algebra.get())
    throw Error(ErrorCode::algebra_mismatch, "object does not live over the context algebra");
  const StableObject n = normalize(x);
  std::vector<Generator> simples;
  for (const Generator& g : n.generators()) {
    if (g.kind != GeneratorKind::arrow)
      throw Error(ErrorCode::not_arrow_sum,
                  "transport needs a pure arrow sum; found " + generator_to_string(*ctx.algebra, g));
    const std::string& name = ctx.algebra->quiver().arrow(g.index).name;
    const int v = ctx.rsz->quiver().vertex_index(name);
    if (v < 0) throw Error(ErrorCode::unknown_vertex, "relation quiver lost vertex '" + name + "'");
    simples.push_back(Generator{GeneratorKind::simple, v});
  }
  return StableObject(ctx.rsz, std::move(simples));
}

std::vector<Generator> rsz_semisimple_syzygy(const MonomialAlgebra& rsz,
                                             const std::vector<Generator>& simples) {
  // The generic engine turns each simple into the arrow summands of the
  // radical; over a radical-square-zero algebra Arrow(b) is the simple at
  // t(b), which is the form semisimple objects keep here.
  const Quiver& r = rsz.quiver();
  for (const Generator& g : simples) {
    if (g.kind != GeneratorKind::simple)
      throw Error(ErrorCode::invalid_argument, "expected simple generators");
  }
  std::vector<Generator> out;
  for (const Generator& g : simples) {
    for (const Generator& child : syzygy_children(rsz, g)) {
      out.push_back(Generator{GeneratorKind::simple, r.target_of(child.index)});
    }
  }
  std::sort(out.begin(), out.end(), [&](const Generator& lhs, const Generator& rhs) {
    return r.vertex(lhs.index) < r.vertex(rhs.index);
  });
  return out;
}

namespace {

// Sorted set of target vertices of the out-arrows of v.
std::vector<int> raw_out_targets(const Quiver& r, int v) {
  std::vector<int> targets;
  for (int a : r.out_arrows(v)) targets.push_back(r.target_of(a));
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  return targets;
}

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

struct TypeSystem {
  // One row per generator type: multiplicity evolution and the predicates
  // the tower needs.
  std::vector<std::vector<int>> step;      // step[t] = children types (with multiplicity)
  std::vector<std::vector<bool>> legal;    // legal[s][t]: hom pair s -> t
  std::vector<bool> survives_two;          // type has a child with children
};

LevelTable run_tower(const TypeSystem& ts, std::vector<Count> x_counts, std::vector<Count> y_counts,
                     int depth) {
  const std::size_t types = ts.step.size();
  LevelTable table;
  for (int level = 0; level <= depth; ++level) {
    Count dim = 0;
    Count rank = 0;
    for (std::size_t s = 0; s < types; ++s) {
      if (x_counts[s] == 0) continue;
      for (std::size_t t = 0; t < types; ++t) {
        if (!ts.legal[s][t] || y_counts[t] == 0) continue;
        const Count pairs = x_counts[s] * y_counts[t];
        dim += pairs;
        // The connecting matrix has disjointly supported 0/1 columns; a
        // column survives iff its source type still has summands two
        // syzygy steps down.
        if (ts.survives_two[s]) rank += pairs;
      }
    }
    table.dims.push_back(dim);
    if (level < depth) table.ranks.push_back(rank);

    std::vector<Count> next_x(types, 0), next_y(types, 0);
    for (std::size_t s = 0; s < types; ++s) {
      for (int child : ts.step[s]) {
        next_x[static_cast<std::size_t>(child)] += x_counts[s];
        next_y[static_cast<std::size_t>(child)] += y_counts[s];
      }
    }
    x_counts = std::move(next_x);
    y_counts = std::move(next_y);
  }
  return table;
}

TypeSystem type_system_a(const MonomialAlgebra& a) {
  const int na = a.quiver().arrow_count();
  TypeSystem ts;
  ts.step.assign(static_cast<std::size_t>(na), {});
  ts.legal.assign(static_cast<std::size_t>(na), std::vector<bool>(static_cast<std::size_t>(na), false));
  ts.survives_two.assign(static_cast<std::size_t>(na), false);
  for (int s = 0; s < na; ++s) {
    for (int b : a.left_annihilators(s)) {
      if (!a.is_projective_arrow_module(b)) {
        ts.step[static_cast<std::size_t>(s)].push_back(b);
        if (!a.left_annihilators(b).empty()) ts.survives_two[static_cast<std::size_t>(s)] = true;
      }
    }
    if (a.is_projective_arrow_module(s)) continue;
    for (int t = 0; t < na; ++t) ts.legal[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = a.in_neighbor_set(s, t);
  }
  return ts;
}

TypeSystem type_system_rsz(const RszContext& ctx) {
  const MonomialAlgebra& rsz = *ctx.rsz;
  const Quiver& r = rsz.quiver();
  const int nv = r.vertex_count();
  TypeSystem ts;
  ts.step.assign(static_cast<std::size_t>(nv), {});
  ts.legal.assign(static_cast<std::size_t>(nv), std::vector<bool>(static_cast<std::size_t>(nv), false));
  ts.survives_two.assign(static_cast<std::size_t>(nv), false);
  std::vector<std::vector<int>> targets(static_cast<std::size_t>(nv));
  for (int v = 0; v < nv; ++v) targets[static_cast<std::size_t>(v)] = raw_out_targets(r, v);
  for (int v = 0; v < nv; ++v) {
    for (const Generator& child :
         rsz_semisimple_syzygy(rsz, {Generator{GeneratorKind::simple, v}})) {
      ts.step[static_cast<std::size_t>(v)].push_back(child.index);
      if (!targets[static_cast<std::size_t>(child.index)].empty())
        ts.survives_two[static_cast<std::size_t>(v)] = true;
    }
    if (targets[static_cast<std::size_t>(v)].empty()) continue;
    for (int w = 0; w < nv; ++w) {
      ts.legal[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] =
          subset(targets[static_cast<std::size_t>(v)], targets[static_cast<std::size_t>(w)]);
    }
  }
  return ts;
}

std::vector<Count> type_counts(const StableObject& object, GeneratorKind kind, int types) {
  std::vector<Count> counts(static_cast<std::size_t>(types), 0);
  for (const Generator& g : object.generators()) {
    if (g.kind != kind)
      throw Error(ErrorCode::not_arrow_sum, "object mixes generator kinds");
    counts[static_cast<std::size_t>(g.index)] += 1;
  }
  return counts;
}

}  // namespace

LevelTable stable_hom_tower_a(const AlgebraPtr& a, const StableObject& x, const StableObject& y,
                              int depth) {
  if (x.algebra().get() != a.get() || y.algebra().get() != a.get())
    throw Error(ErrorCode::algebra_mismatch, "objects live over a different algebra");
  const TypeSystem ts = type_system_a(*a);
  const int na = a->quiver().arrow_count();
  return run_tower(ts, type_counts(normalize(x), GeneratorKind::arrow, na),
                   type_counts(normalize(y), GeneratorKind::arrow, na), depth);
}

LevelTable stable_hom_tower_rsz(const RszContext& ctx, const StableObject& tx, const StableObject& ty,
                                int depth) {
  if (tx.algebra().get() != ctx.rsz.get() || ty.algebra().get() != ctx.rsz.get())
    throw Error(ErrorCode::algebra_mismatch, "objects do not live over the radical-square-zero side");
  const TypeSystem ts = type_system_rsz(ctx);
  const int nv = ctx.rsz->quiver().vertex_count();
  return run_tower(ts, type_counts(tx, GeneratorKind::simple, nv),
                   type_counts(ty, GeneratorKind::simple, nv), depth);
}

CrossCheckReport cross_check(const RszContext& ctx, const StableObject& x, const StableObject& y,
                             int depth) {
  if (depth < 0) throw Error(ErrorCode::invalid_argument, "depth must be nonnegative");
  const StableObject nx = normalize(x);
  const StableObject ny = normalize(y);
  if (!nx.pure_arrow_sum() || !ny.pure_arrow_sum())
    throw Error(ErrorCode::not_arrow_sum, "cross-check needs pure arrow sums");

  const LevelTable a_side = stable_hom_tower_a(ctx.algebra, nx, ny, depth);
  const LevelTable b_side = stable_hom_tower_rsz(ctx, transport(ctx, nx), transport(ctx, ny), depth);

  CrossCheckReport report;
  report.depth = depth;
  report.pass = true;
  for (int i = 0; i <= depth; ++i) {
    CrossCheckLevel level;
    level.level = i;
    level.dim_a = a_side.dims[static_cast<std::size_t>(i)];
    level.dim_b = b_side.dims[static_cast<std::size_t>(i)];
    level.dims_match = level.dim_a == level.dim_b;
    if (i < depth) {
      level.rank_a = a_side.ranks[static_cast<std::size_t>(i)];
      level.rank_b = b_side.ranks[static_cast<std::size_t>(i)];
      level.ranks_match = level.rank_a == level.rank_b;
    } else {
      level.ranks_match = true;
    }
    report.pass = report.pass && level.dims_match && level.ranks_match;
    report.levels.push_back(std::move(level));
  }
  return report;
}

}  // namespace qmono
