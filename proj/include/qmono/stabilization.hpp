#pragma once

#include <optional>
#include <vector>

#include "qmono/rational.hpp"
#include "qmono/stable.hpp"

namespace qmono {

/// Hom-space tower under the syzygy endofunctor. Level i holds the stable
/// Hom basis between the i-fold syzygies; connecting map i has shape
/// dim(level i+1) x dim(level i).
struct DirectSystem {
  std::vector<StableObject> source_levels;
  std::vector<StableObject> target_levels;
  std::vector<HomSpace> levels;
  std::vector<RationalMatrix> connecting;

  int cutoff() const { return static_cast<int>(levels.size()) - 1; }
  std::vector<int> level_dims() const;
};

struct Periodicity {
  int preperiod = 0;
  int period = 1;
};

/// Hard caps keeping runaway direct systems from exhausting memory; hitting
/// one raises RESOURCE_LIMIT (for hom levels) or reports "no periodicity".
struct StabilizationLimits {
  int max_hom_dim = 20000;
  int max_orbit_size = 20000;
};

DirectSystem build_direct_system(const StableObject& x, const StableObject& y, int cutoff,
                                 const StabilizationLimits& limits = {});

/// Smallest (preperiod p, period q), both <= bound, with the p+q-fold
/// syzygy equal to the p-fold syzygy as multisets; nullopt when the orbit
/// does not close up within the bound.
std::optional<Periodicity> detect_periodicity(const StableObject& x, int bound,
                                              const StabilizationLimits& limits = {});

/// Common periodicity of both orbits: max of preperiods, lcm of periods.
std::optional<Periodicity> detect_pair_periodicity(const StableObject& x, const StableObject& y,
                                                   int bound, const StabilizationLimits& limits = {});

enum class StabilizationStatus { exact, cutoff };

struct StabilizationResult {
  StabilizationStatus status = StabilizationStatus::cutoff;
  std::vector<int> level_dims;

  // EXACT: the colimit dimension and the periodicity that certified it.
  int colimit_dim = 0;
  std::optional<Periodicity> period;

  // CUTOFF: stabilized-rank table r[i][j] = rank of level i -> level j
  // (j >= i; r[i][i] = level dim), eventual values within the cutoff, a
  // monotonicity certificate, and whether every connecting map in range was
  // injective (evidence of growth, never a claim of infinite dimension).
  std::vector<std::vector<int>> rank_table;
  std::vector<int> stable_ranks;
  bool ranks_monotone = false;
  bool all_connecting_injective = false;
};

/// With periodicity: the colimit dimension is the eventual rank of the one
/// period-step endomap of level p, status EXACT. Without: the rank table at
/// the cutoff, never an extrapolation.
StabilizationResult colimit_rank(const DirectSystem& system, const std::optional<Periodicity>& period);

/// Hom dimension in the singularity category, as far as the cutoff allows:
/// periodicity detection, direct system, colimit rank.
StabilizationResult dsg_hom(const StableObject& x, const StableObject& y, int cutoff,
                            const StabilizationLimits& limits = {});

inline constexpr int kDefaultCutoff = 8;

}  // namespace qmono
