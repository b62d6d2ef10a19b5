#include "qmono/stabilization.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qmono/errors.hpp"
#include "qmono/exact_linalg.hpp"

namespace qmono {

std::vector<int> DirectSystem::level_dims() const {
  std::vector<int> dims;
  dims.reserve(levels.size());
  for (const HomSpace& hom : levels) dims.push_back(hom.dim());
  return dims;
}

DirectSystem build_direct_system(const StableObject& x, const StableObject& y, int cutoff,
                                 const StabilizationLimits& limits) {
  if (x.algebra().get() != y.algebra().get())
    throw Error(ErrorCode::algebra_mismatch, "objects live over different algebras");
  if (cutoff < 0) throw Error(ErrorCode::invalid_argument, "cutoff must be nonnegative");

  DirectSystem system;
  system.source_levels.push_back(normalize(x));
  system.target_levels.push_back(normalize(y));
  for (int i = 0; i < cutoff; ++i) {
    system.source_levels.push_back(syzygy(system.source_levels.back()));
    system.target_levels.push_back(syzygy(system.target_levels.back()));
  }

  for (int i = 0; i <= cutoff; ++i) {
    HomSpace hom = stable_hom(system.source_levels[static_cast<std::size_t>(i)],
                              system.target_levels[static_cast<std::size_t>(i)]);
    if (hom.dim() > limits.max_hom_dim)
      throw Error(ErrorCode::resource_limit,
                  "hom space at level " + std::to_string(i) + " has dimension " +
                      std::to_string(hom.dim()) + "; lower the cutoff");
    system.levels.push_back(std::move(hom));
  }

  for (int i = 0; i < cutoff; ++i) {
    const HomSpace& from = system.levels[static_cast<std::size_t>(i)];
    const HomSpace& to = system.levels[static_cast<std::size_t>(i) + 1];
    std::map<std::pair<int, int>, int> to_index;
    for (std::size_t k = 0; k < to.basis.size(); ++k) to_index[to.basis[k]] = static_cast<int>(k);

    const SyzygyExpansion sx = syzygy_expand(from.source);
    const SyzygyExpansion sy = syzygy_expand(from.target);
    const MonomialAlgebra& algebra = *x.algebra();

    RationalMatrix c = RationalMatrix::Zero(to.dim(), from.dim());
    for (std::size_t col = 0; col < from.basis.size(); ++col) {
      const auto [s, t] = from.basis[col];
      const Generator& src = from.source.generators()[static_cast<std::size_t>(s)];
      const Generator& tgt = from.target.generators()[static_cast<std::size_t>(t)];
      const auto source_children = syzygy_children(algebra, src);
      const auto target_children = syzygy_children(algebra, tgt);
      for (std::size_t k = 0; k < source_children.size(); ++k) {
        const auto it = std::find(target_children.begin(), target_children.end(), source_children[k]);
        if (it == target_children.end())
          throw Error(ErrorCode::illegal_morphism, "neighbour relation lost a shared syzygy summand");
        const std::size_t kk = static_cast<std::size_t>(it - target_children.begin());
        const int u = sx.child_slots[static_cast<std::size_t>(s)][k];
        const int v = sy.child_slots[static_cast<std::size_t>(t)][kk];
        const auto row = to_index.find({u, v});
        if (row == to_index.end())
          throw Error(ErrorCode::illegal_morphism, "connecting map left the hom basis");
        c(row->second, static_cast<Eigen::Index>(col)) += 1;
      }
    }
    system.connecting.push_back(std::move(c));
  }
  return system;
}

namespace {

std::optional<Periodicity> find_repeat(const std::vector<StableObject>& orbit, int bound) {
  for (std::size_t i = 1; i < orbit.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (orbit[j] == orbit[i]) {
        const int p = static_cast<int>(j);
        const int q = static_cast<int>(i - j);
        if (p <= bound && q <= bound) return Periodicity{p, q};
        return std::nullopt;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Periodicity> detect_periodicity(const StableObject& x, int bound,
                                              const StabilizationLimits& limits) {
  if (bound < 1) throw Error(ErrorCode::invalid_argument, "bound must be positive");
  std::vector<StableObject> orbit{normalize(x)};
  for (int i = 1; i <= 2 * bound; ++i) {
    StableObject next = syzygy(orbit.back());
    if (next.size() > limits.max_orbit_size) return std::nullopt;
    orbit.push_back(std::move(next));
    if (auto repeat = find_repeat(orbit, bound)) return repeat;
  }
  return std::nullopt;
}

std::optional<Periodicity> detect_pair_periodicity(const StableObject& x, const StableObject& y,
                                                   int bound, const StabilizationLimits& limits) {
  const auto px = detect_periodicity(x, bound, limits);
  if (!px) return std::nullopt;
  const auto py = detect_periodicity(y, bound, limits);
  if (!py) return std::nullopt;
  Periodicity combined;
  combined.preperiod = std::max(px->preperiod, py->preperiod);
  combined.period = std::lcm(px->period, py->period);
  return combined;
}

StabilizationResult colimit_rank(const DirectSystem& system, const std::optional<Periodicity>& period) {
  StabilizationResult result;
  result.level_dims = system.level_dims();

  if (period) {
    const int p = period->preperiod;
    const int q = period->period;
    if (p + q > system.cutoff())
      throw Error(ErrorCode::invalid_argument,
                  "direct system too short for the period data: need " + std::to_string(p + q) +
                      " levels");
    if (!(system.source_levels[static_cast<std::size_t>(p)] ==
          system.source_levels[static_cast<std::size_t>(p + q)]) ||
        !(system.target_levels[static_cast<std::size_t>(p)] ==
          system.target_levels[static_cast<std::size_t>(p + q)]))
      throw Error(ErrorCode::invalid_argument, "claimed periodicity does not hold");

    result.status = StabilizationStatus::exact;
    result.period = period;
    const int d = result.level_dims[static_cast<std::size_t>(p)];
    if (d == 0) {
      result.colimit_dim = 0;
      return result;
    }
    // One full period of connecting maps is an endomap of level p; the
    // colimit is its eventual image.
    RationalMatrix t = RationalMatrix::Identity(d, d);
    for (int i = p; i < p + q; ++i) t = system.connecting[static_cast<std::size_t>(i)] * t;
    RationalMatrix power = RationalMatrix::Identity(d, d);
    for (int k = 0; k < d; ++k) power = t * power;
    result.colimit_dim = static_cast<int>(rank(power));
    return result;
  }

  result.status = StabilizationStatus::cutoff;
  const int n = system.cutoff();
  result.rank_table.assign(static_cast<std::size_t>(n) + 1, {});
  result.ranks_monotone = true;
  for (int i = 0; i <= n; ++i) {
    auto& row = result.rank_table[static_cast<std::size_t>(i)];
    row.push_back(result.level_dims[static_cast<std::size_t>(i)]);
    RationalMatrix composite =
        RationalMatrix::Identity(result.level_dims[static_cast<std::size_t>(i)],
                                 result.level_dims[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j <= n; ++j) {
      composite = system.connecting[static_cast<std::size_t>(j - 1)] * composite;
      row.push_back(static_cast<int>(rank(composite)));
      if (row[row.size() - 1] > row[row.size() - 2]) result.ranks_monotone = false;
    }
    result.stable_ranks.push_back(row.back());
  }
  result.all_connecting_injective = true;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rank(system.connecting[static_cast<std::size_t>(i)])) !=
        result.level_dims[static_cast<std::size_t>(i)])
      result.all_connecting_injective = false;
  }
  return result;
}

StabilizationResult dsg_hom(const StableObject& x, const StableObject& y, int cutoff,
                            const StabilizationLimits& limits) {
  if (cutoff < 1) throw Error(ErrorCode::invalid_argument, "cutoff must be positive");
  const auto period = detect_pair_periodicity(x, y, cutoff, limits);
  const int levels = period ? std::max(cutoff, period->preperiod + period->period) : cutoff;
  const DirectSystem system = build_direct_system(x, y, levels, limits);
  return colimit_rank(system, period);
}

}  // namespace qmono
