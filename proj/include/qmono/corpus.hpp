#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmono/algebra.hpp"

namespace qmono {

struct CorpusConfig {
  std::uint64_t seed = 1;
  int count = 100;
  int max_vertices = 4;
  int max_arrows = 6;
  int max_attempts_per_instance = 500;
};

struct CorpusInstance {
  std::string name;
  MonomialPresentation presentation;
  std::string text;  // render_presentation of the presentation
};

struct CorpusResult {
  std::vector<CorpusInstance> instances;
  int attempts = 0;
  int rejected = 0;

  double rejection_rate() const {
    return attempts == 0 ? 0.0 : static_cast<double>(rejected) / static_cast<double>(attempts);
  }
};

/// Rejection sampling: random quiver, each composable length-two path
/// forbidden with probability 1/2, kept iff the presentation validates.
/// Reproducible for a fixed seed (no distribution objects, plain modulo
/// draws from a fixed-width generator).
CorpusResult generate_corpus(const CorpusConfig& config);

}  // namespace qmono
