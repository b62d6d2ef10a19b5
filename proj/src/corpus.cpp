#include "qmono/corpus.hpp"

#include <cstdio>
#include <random>

#include "qmono/errors.hpp"
#include "qmono/parser.hpp"

namespace qmono {

namespace {

int draw(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

MonomialPresentation draw_presentation(std::mt19937_64& rng, const CorpusConfig& config) {
  const int nv = draw(rng, 1, config.max_vertices);
  const int na = draw(rng, 1, config.max_arrows);
  std::vector<std::string> vertices;
  for (int v = 0; v < nv; ++v) vertices.push_back("v" + std::to_string(v + 1));
  std::vector<Arrow> arrows;
  for (int a = 0; a < na; ++a) {
    const int s = draw(rng, 0, nv - 1);
    const int t = draw(rng, 0, nv - 1);
    arrows.push_back(Arrow{"a" + std::to_string(a + 1), vertices[static_cast<std::size_t>(s)],
                           vertices[static_cast<std::size_t>(t)]});
  }
  MonomialPresentation p;
  p.quiver = Quiver(std::move(vertices), std::move(arrows));
  for (int first = 0; first < na; ++first) {
    for (int second = 0; second < na; ++second) {
      if (p.quiver.target_of(first) != p.quiver.source_of(second)) continue;
      if (rng() % 2 == 0) {
        p.forbidden.push_back(LengthTwoPath{p.quiver.arrow(first).name, p.quiver.arrow(second).name});
      }
    }
  }
  return p;
}

}  // namespace

CorpusResult generate_corpus(const CorpusConfig& config) {
  if (config.count < 0 || config.max_vertices < 1 || config.max_arrows < 1)
    throw Error(ErrorCode::invalid_argument, "corpus configuration must be positive");
  std::mt19937_64 rng(config.seed);
  CorpusResult result;
  for (int i = 0; i < config.count; ++i) {
    bool accepted = false;
    for (int attempt = 0; attempt < config.max_attempts_per_instance; ++attempt) {
      ++result.attempts;
      MonomialPresentation candidate = draw_presentation(rng, config);
      try {
        MonomialAlgebra::validate(candidate);
      } catch (const Error&) {
        ++result.rejected;
        continue;
      }
      CorpusInstance instance;
      char suffix[16];
      std::snprintf(suffix, sizeof suffix, "%03d", i);
      instance.name = "corpus_" + std::string(suffix);
      instance.text = render_presentation(candidate);
      instance.presentation = std::move(candidate);
      result.instances.push_back(std::move(instance));
      accepted = true;
      break;
    }
    if (!accepted)
      throw Error(ErrorCode::resource_limit,
                  "rejection sampling exhausted " + std::to_string(config.max_attempts_per_instance) +
                      " attempts for one instance");
  }
  return result;
}

}  // namespace qmono
