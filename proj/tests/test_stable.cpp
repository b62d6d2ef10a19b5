#include <doctest.h>

#include <random>

#include "qmono/corpus.hpp"
#include "qmono/errors.hpp"
#include "qmono/stable.hpp"
#include "support/fixtures.hpp"

using namespace qmono;

namespace {

Generator arrow_gen(const AlgebraPtr& a, const std::string& name) {
  return Generator{GeneratorKind::arrow, a->arrow_index_checked(name)};
}
Generator simple_gen(const AlgebraPtr& a, const std::string& name) {
  return Generator{GeneratorKind::simple, a->vertex_index_checked(name)};
}
Generator proj_gen(const AlgebraPtr& a, const std::string& name) {
  return Generator{GeneratorKind::projective, a->vertex_index_checked(name)};
}

StableObject random_object(std::mt19937_64& rng, const AlgebraPtr& a) {
  std::vector<Generator> gens;
  const int size = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < size; ++i) {
    const int kind = static_cast<int>(rng() % 3);
    if (kind == 0 && a->quiver().arrow_count() > 0) {
      gens.push_back(Generator{GeneratorKind::arrow,
                               static_cast<int>(rng() % static_cast<std::uint64_t>(a->quiver().arrow_count()))});
    } else {
      gens.push_back(Generator{kind == 1 ? GeneratorKind::simple : GeneratorKind::projective,
                               static_cast<int>(rng() % static_cast<std::uint64_t>(a->quiver().vertex_count()))});
    }
  }
  return StableObject(a, std::move(gens));
}

// A random legal morphism between random arrow sums.
StableMorphism random_morphism(std::mt19937_64& rng, const StableObject& x,
                               const StableObject& y) {
  const HomSpace hom = stable_hom(x, y);
  RationalMatrix m = RationalMatrix::Zero(hom.target.size(), hom.source.size());
  for (const auto& [s, t] : hom.basis) m(t, s) = static_cast<int>(rng() % 7) - 3;
  return StableMorphism::from_matrix(hom.source, hom.target, std::move(m));
}

}  // namespace

TEST_CASE("normalize drops projective summands") {
  const AlgebraPtr a = fixtures::two_loops();
  const StableObject mixed(a, {arrow_gen(a, "x"), proj_gen(a, "v")});
  const StableObject reduced = normalize(mixed);
  CHECK(reduced.to_string() == "A(x)");
  CHECK(normalize(reduced) == reduced);

  const StableObject empty(a);
  CHECK(normalize(empty) == empty);

  // A.b over the chain is projective, the simple at w1 is kept.
  const AlgebraPtr chain = fixtures::chain3();
  const StableObject y(chain, {arrow_gen(chain, "b"), simple_gen(chain, "w1")});
  CHECK(normalize(y).to_string() == "S(w1)");

  // A.xi has a forbidden left composition, so it survives normalization.
  const AlgebraPtr b = fixtures::crossed_cycles();
  CHECK(normalize(StableObject(b, {arrow_gen(b, "xi")})).to_string() == "A(xi)");
}

TEST_CASE("syzygies of the two-loops algebra") {
  const AlgebraPtr a = fixtures::two_loops();
  const StableObject ax(a, {arrow_gen(a, "x")});
  const StableObject ay(a, {arrow_gen(a, "y")});
  CHECK(syzygy(ax).to_string() == "A(x) + A(y)");
  CHECK(syzygy(ay).to_string() == "A(y)");

  // Exactness bookkeeping: 4 - 1 = 1 + 2 and 4 - 2 = 2.
  CHECK(a->arrow_module_dimension(0) + 3 == a->projective_module_dimension(0));
}

TEST_CASE("syzygies swap the perfect two-cycle") {
  const AlgebraPtr b = fixtures::crossed_cycles();
  const StableObject alpha(b, {arrow_gen(b, "alpha")});
  CHECK(syzygy(alpha).to_string() == "A(beta)");
  CHECK(syzygy(syzygy(alpha)) == alpha);
}

TEST_CASE("syzygies over the dual numbers") {
  const AlgebraPtr a = fixtures::dual_numbers();
  const StableObject simple(a, {simple_gen(a, "v")});
  CHECK(syzygy(simple).to_string() == "A(x)");
  CHECK(syzygy(syzygy(simple)).to_string() == "A(x)");
}

TEST_CASE("raw syzygy keeps projective summands") {
  const AlgebraPtr chain = fixtures::chain3();
  const StableObject x(chain, {arrow_gen(chain, "a")});
  CHECK(syzygy(x).empty());
  CHECK(syzygy_raw(x).to_string() == "A(b)");
}

TEST_CASE("two syzygy steps land in arrow sums") {
  CorpusConfig config;
  config.seed = 5;
  config.count = 25;
  const CorpusResult corpus = generate_corpus(config);
  std::mt19937_64 rng(17);
  for (const CorpusInstance& instance : corpus.instances) {
    const AlgebraPtr a = MonomialAlgebra::validate(instance.presentation);
    for (int k = 0; k < 4; ++k) {
      const StableObject x = random_object(rng, a);
      CHECK(syzygy(syzygy(x)).pure_arrow_sum());
    }
  }
}

TEST_CASE("stable hom dimensions of the two-loops algebra") {
  const AlgebraPtr a = fixtures::two_loops();
  const StableObject ax(a, {arrow_gen(a, "x")});
  const StableObject ay(a, {arrow_gen(a, "y")});
  CHECK(stable_hom(ax, ax).dim() == 1);
  CHECK(stable_hom(ax, ay).dim() == 0);
  CHECK(stable_hom(ay, ax).dim() == 1);
  CHECK(stable_hom(ay, ay).dim() == 1);

  const StableObject sum(a, {arrow_gen(a, "x"), arrow_gen(a, "y")});
  CHECK(stable_hom(sum, sum).dim() == 3);
}

TEST_CASE("stable hom vanishes out of projectives and across perfect cycles") {
  const AlgebraPtr b = fixtures::crossed_cycles();
  const StableObject alpha(b, {arrow_gen(b, "alpha")});
  const StableObject beta(b, {arrow_gen(b, "beta")});
  CHECK(stable_hom(alpha, beta).dim() == 0);
  CHECK(stable_hom(alpha, alpha).dim() == 1);

  const AlgebraPtr chain = fixtures::chain3();
  const StableObject projective(chain, {arrow_gen(chain, "b")});
  const StableObject other(chain, {arrow_gen(chain, "a")});
  CHECK(stable_hom(projective, other).dim() == 0);
  CHECK(stable_hom(projective, projective).dim() == 0);

  CHECK_THROWS_AS(stable_hom(alpha, other), Error);
}

TEST_CASE("single-generator stable hom dimension is zero or one") {
  CorpusConfig config;
  config.seed = 6;
  config.count = 20;
  for (const CorpusInstance& instance : generate_corpus(config).instances) {
    const AlgebraPtr a = MonomialAlgebra::validate(instance.presentation);
    for (int i = 0; i < a->quiver().arrow_count(); ++i) {
      for (int j = 0; j < a->quiver().arrow_count(); ++j) {
        const int dim = stable_hom(StableObject(a, {Generator{GeneratorKind::arrow, i}}),
                                   StableObject(a, {Generator{GeneratorKind::arrow, j}}))
                            .dim();
        CHECK((dim == 0 || dim == 1));
      }
    }
  }
}

TEST_CASE("morphism constructors enforce legality") {
  const AlgebraPtr a = fixtures::two_loops();
  const StableObject ax(a, {arrow_gen(a, "x")});
  const StableObject ay(a, {arrow_gen(a, "y")});

  CHECK_NOTHROW(StableMorphism::elementary(ay, ax, 0, 0));           // x in N(y)
  CHECK_THROWS_AS(StableMorphism::elementary(ax, ay, 0, 0), Error);  // y not in N(x)

  RationalMatrix one = RationalMatrix::Zero(1, 1);
  one(0, 0) = 1;
  CHECK_THROWS_AS(StableMorphism::from_matrix(ax, ay, one), Error);
  CHECK_NOTHROW(StableMorphism::from_matrix(ay, ax, one));

  // Unnormalized endpoints are rejected.
  const AlgebraPtr chain = fixtures::chain3();
  const StableObject projective(chain, {arrow_gen(chain, "b")});
  CHECK_THROWS_AS(StableMorphism::zero(projective, projective), Error);
}

TEST_CASE("composition follows the elementary rule") {
  const AlgebraPtr a = fixtures::two_loops();
  const StableObject ax(a, {arrow_gen(a, "x")});
  const StableObject ay(a, {arrow_gen(a, "y")});
  const StableMorphism pi_yx = StableMorphism::elementary(ay, ax, 0, 0);
  const StableMorphism id_y = StableMorphism::identity(ay);
  CHECK(compose(pi_yx, id_y) == pi_yx);
  CHECK(compose(StableMorphism::identity(ax), pi_yx) == pi_yx);
  CHECK_THROWS_AS(compose(pi_yx, pi_yx), Error);

  // Transitive neighbour chains compose to the expected elementary map.
  const AlgebraPtr b = fixtures::crossed_cycles();
  const StableObject xi(b, {arrow_gen(b, "xi")});
  const StableObject gamma(b, {arrow_gen(b, "gamma")});
  const StableMorphism pi1 = StableMorphism::elementary(xi, gamma, 0, 0);  // gamma in N(xi)
  const StableMorphism pi2 = StableMorphism::elementary(gamma, gamma, 0, 0);
  CHECK(compose(pi2, pi1) == pi1);
}

TEST_CASE("syzygy of the inclusion-shaped elementary morphism") {
  const AlgebraPtr a = fixtures::two_loops();
  const StableObject ax(a, {arrow_gen(a, "x")});
  const StableObject ay(a, {arrow_gen(a, "y")});
  const StableMorphism pi_yx = StableMorphism::elementary(ay, ax, 0, 0);
  const StableMorphism omega = syzygy(pi_yx);
  CHECK(omega.source().to_string() == "A(y)");
  CHECK(omega.target().to_string() == "A(x) + A(y)");
  // Column matrix (0, id)^T: the y-summand includes into A(x) + A(y).
  REQUIRE(omega.matrix().rows() == 2);
  REQUIRE(omega.matrix().cols() == 1);
  CHECK(omega.matrix()(0, 0) == 0);
  CHECK(omega.matrix()(1, 0) == 1);
}

TEST_CASE("syzygy preserves identities and zero") {
  const AlgebraPtr a = fixtures::two_loops();
  const StableObject sum(a, {arrow_gen(a, "x"), arrow_gen(a, "y")});
  const StableMorphism id = StableMorphism::identity(sum);
  const StableMorphism omega_id = syzygy(id);
  CHECK(omega_id == StableMorphism::identity(omega_id.source()));

  const StableMorphism zero = StableMorphism::zero(sum, sum);
  const StableMorphism omega_zero = syzygy(zero);
  for (Eigen::Index r = 0; r < omega_zero.matrix().rows(); ++r)
    for (Eigen::Index c = 0; c < omega_zero.matrix().cols(); ++c) CHECK(omega_zero.matrix()(r, c) == 0);
}

TEST_CASE("syzygy is functorial on random morphisms") {
  CorpusConfig config;
  config.seed = 12;
  config.count = 15;
  std::mt19937_64 rng(3);
  for (const CorpusInstance& instance : generate_corpus(config).instances) {
    const AlgebraPtr a = MonomialAlgebra::validate(instance.presentation);
    if (a->quiver().arrow_count() == 0) continue;
    for (int k = 0; k < 3; ++k) {
      const StableObject x = normalize(random_object(rng, a));
      const StableObject y = normalize(random_object(rng, a));
      const StableObject z = normalize(random_object(rng, a));
      const StableMorphism f = random_morphism(rng, x, y);
      const StableMorphism g = random_morphism(rng, y, z);
      CHECK(syzygy(compose(g, f)) == compose(syzygy(g), syzygy(f)));
    }
  }
}
