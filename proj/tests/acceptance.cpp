// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qmono/cli.hpp"
#include "qmono/corpus.hpp"
#include "qmono/errors.hpp"
#include "qmono/oracle.hpp"
#include "qmono/parser.hpp"
#include "qmono/report.hpp"
#include "qmono/rsz.hpp"
#include "qmono/stabilization.hpp"
#include "support/fixtures.hpp"

using namespace qmono;

namespace {

const std::string kDataDir = QMONO_TEST_DATA_DIR;

struct Criterion {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& message) {
    if (!condition && ok) {
      ok = false;
      detail = message;
    }
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::pair<int, std::string> run_tool(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str()};
}

struct Instance {
  std::string name;
  AlgebraPtr algebra;
};

std::vector<Instance> build_corpus() {
  std::vector<Instance> instances;
  CorpusConfig config;
  config.seed = 20260810;
  config.count = 200;
  config.max_vertices = 4;
  config.max_arrows = 6;
  for (const CorpusInstance& raw : generate_corpus(config).instances) {
    instances.push_back({raw.name, MonomialAlgebra::validate(raw.presentation)});
  }
  instances.push_back({"two_loops", fixtures::two_loops()});
  instances.push_back({"crossed_cycles", fixtures::crossed_cycles()});
  instances.push_back({"dual_numbers", fixtures::dual_numbers()});
  instances.push_back({"chain3", fixtures::chain3()});
  instances.push_back({"hereditary", fixtures::hereditary_chain()});
  instances.push_back({"cycle_rsz4", rsz_algebra(fixtures::cycle_quiver(4))});
  return instances;
}

StableObject arrow_object(const AlgebraPtr& a, int arrow) {
  return StableObject(a, {Generator{GeneratorKind::arrow, arrow}});
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. The crossed-cycles golden instance, end to end.
Criterion criterion_golden_crossed() {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();
  const std::string path = kDataDir + "/example56.alg";

  const AlgebraPtr a = MonomialAlgebra::validate(parse_presentation(read_file(path)));
  const SingularityReport report = singularity_report(a);
  c.require(report.components.size() == 2, "expected exactly two components");
  c.require(report.components[0].kind == ComponentKind::perfect &&
                report.components[0].subquiver.vertices() == std::vector<std::string>{"alpha", "beta"},
            "perfect component should be {alpha, beta}");
  c.require(report.components[1].kind == ComponentKind::defect &&
                report.components[1].subquiver.vertices() ==
                    std::vector<std::string>{"gamma", "delta", "xi"},
            "defect component should be {gamma, delta, xi}");
  c.require(report.defect_quiver.vertices() == std::vector<std::string>{"gamma", "delta"} &&
                is_basic_cycle(report.defect_quiver),
            "defect quiver should be the 2-cycle on {gamma, delta}");
  c.require(!report.is_gorenstein, "gorenstein should be false");
  c.require(report.descriptors.gproj == "Gproj ≅ T_2", "gproj descriptor mismatch");
  c.require(report.descriptors.d_def == "D_def ≅ (L(Z_2)-grproj, (−1))", "d_def descriptor mismatch");

  const auto [code, output] = run_tool({"report", path, "--json"});
  c.require(code == 0, "report exit code");
  c.require(output == read_file(kDataDir + "/example56_report.json"), "golden file mismatch");
  c.require(seconds_since(start) < 1.0, "runtime exceeded 1 s");
  return c;
}

// 2. The two-loops golden instance, end to end.
Criterion criterion_golden_two_loops() {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();
  const std::string path = kDataDir + "/example55.alg";

  const AlgebraPtr a = MonomialAlgebra::validate(parse_presentation(read_file(path)));
  const SingularityReport report = singularity_report(a);
  c.require(report.perfect_sizes.empty(), "no perfect components expected");
  c.require(report.components.size() == 1 && report.components[0].kind == ComponentKind::defect,
            "one defect component expected");
  c.require(report.rel_quiver.arrow_count() == 3, "relation quiver should have 3 arrows");
  c.require(report.defect_quiver == report.rel_quiver, "source-elimination should remove nothing");
  c.require(!report.is_gorenstein, "gorenstein should be false");

  const auto [code, output] = run_tool({"report", path, "--json"});
  c.require(code == 0, "report exit code");
  c.require(output == read_file(kDataDir + "/example55_report.json"), "golden file mismatch");
  c.require(seconds_since(start) < 1.0, "runtime exceeded 1 s");
  return c;
}

// 3. Closed-form stable hom dimensions against the intertwiner oracle.
Criterion criterion_formula_vs_oracle(const std::vector<Instance>& corpus) {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();
  for (const Instance& instance : corpus) {
    const int na = instance.algebra->quiver().arrow_count();
    std::vector<ExplicitModule> realized;
    for (int arrow = 0; arrow < na; ++arrow)
      realized.push_back(realize(arrow_object(instance.algebra, arrow)));
    for (int i = 0; i < na; ++i) {
      for (int j = 0; j < na; ++j) {
        const int formula =
            stable_hom(arrow_object(instance.algebra, i), arrow_object(instance.algebra, j)).dim();
        const int oracle = stable_hom_dim(realized[static_cast<std::size_t>(i)],
                                          realized[static_cast<std::size_t>(j)]);
        c.require(formula == oracle, instance.name + ": formula " + std::to_string(formula) +
                                         " vs oracle " + std::to_string(oracle));
        c.require(oracle == 0 || oracle == 1, instance.name + ": dimension outside {0,1}");
      }
    }
  }
  c.require(seconds_since(start) < 300.0, "runtime exceeded 5 min");
  return c;
}

// 4. Kernel-of-cover check for arrows and simples.
Criterion criterion_syzygy_exactness(const std::vector<Instance>& corpus) {
  Criterion c;
  for (const Instance& instance : corpus) {
    for (int arrow = 0; arrow < instance.algebra->quiver().arrow_count(); ++arrow) {
      c.require(syzygy_check(arrow_object(instance.algebra, arrow)).ok,
                instance.name + ": arrow " + instance.algebra->quiver().arrow(arrow).name);
    }
    for (int v = 0; v < instance.algebra->quiver().vertex_count(); ++v) {
      c.require(syzygy_check(StableObject(instance.algebra, {Generator{GeneratorKind::simple, v}})).ok,
                instance.name + ": simple " + instance.algebra->quiver().vertex(v));
    }
  }
  return c;
}

// 5. Mixed objects become arrow sums after two syzygies.
Criterion criterion_arrow_sum(const std::vector<Instance>& corpus) {
  Criterion c;
  std::mt19937_64 rng(424242);
  for (const Instance& instance : corpus) {
    const AlgebraPtr& a = instance.algebra;
    for (int k = 0; k < 3; ++k) {
      std::vector<Generator> gens;
      const int size = 1 + static_cast<int>(rng() % 4);
      for (int g = 0; g < size; ++g) {
        switch (rng() % 3) {
          case 0:
            gens.push_back(Generator{GeneratorKind::arrow,
                                     static_cast<int>(rng() % static_cast<std::uint64_t>(
                                                          a->quiver().arrow_count()))});
            break;
          case 1:
            gens.push_back(Generator{GeneratorKind::simple,
                                     static_cast<int>(rng() % static_cast<std::uint64_t>(
                                                          a->quiver().vertex_count()))});
            break;
          default:
            gens.push_back(Generator{GeneratorKind::projective,
                                     static_cast<int>(rng() % static_cast<std::uint64_t>(
                                                          a->quiver().vertex_count()))});
        }
      }
      const StableObject x(a, std::move(gens));
      c.require(syzygy(syzygy(x)).pure_arrow_sum(), instance.name + ": " + x.to_string());
    }
  }
  return c;
}

// 6. Two-presentation consistency at depth 8 for all arrow pairs.
Criterion criterion_cross_check(const std::vector<Instance>& corpus) {
  Criterion c;
  for (const Instance& instance : corpus) {
    const RszContext ctx = make_rsz_context(instance.algebra);
    const int na = instance.algebra->quiver().arrow_count();
    for (int i = 0; i < na; ++i) {
      for (int j = 0; j < na; ++j) {
        const CrossCheckReport report =
            cross_check(ctx, arrow_object(instance.algebra, i), arrow_object(instance.algebra, j), 8);
        c.require(report.pass, instance.name + ": arrows " +
                                   instance.algebra->quiver().arrow(i).name + ", " +
                                   instance.algebra->quiver().arrow(j).name);
      }
    }
  }
  return c;
}

// 7. Perfect-component homs are exact Kronecker deltas, matching the
// rotation-category model.
Criterion criterion_perfect_homs(const std::vector<Instance>& corpus) {
  Criterion c;
  for (const Instance& instance : corpus) {
    const AlgebraPtr& a = instance.algebra;
    const auto components = classify_components(relation_quiver(*a));

    struct PerfectArrow {
      int arrow;
      int component;
      int position;
      int cycle_size;
    };
    std::vector<PerfectArrow> perfect_arrows;
    for (std::size_t k = 0; k < components.size(); ++k) {
      if (components[k].kind != ComponentKind::perfect) continue;
      const auto order = basic_cycle_order(components[k].subquiver);
      for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const std::string& name = components[k].subquiver.vertex(order[pos]);
        perfect_arrows.push_back(PerfectArrow{a->arrow_index_checked(name), static_cast<int>(k),
                                              static_cast<int>(pos), static_cast<int>(order.size())});
      }
    }

    for (const PerfectArrow& source : perfect_arrows) {
      for (const PerfectArrow& target : perfect_arrows) {
        const StabilizationResult result =
            dsg_hom(arrow_object(a, source.arrow), arrow_object(a, target.arrow), kDefaultCutoff);
        c.require(result.status == StabilizationStatus::exact,
                  instance.name + ": expected EXACT on a perfect pair");
        const int expected = source.arrow == target.arrow ? 1 : 0;
        if (result.status != StabilizationStatus::exact) continue;
        c.require(result.colimit_dim == expected, instance.name + ": delta rule violated");
        if (source.component == target.component) {
          std::vector<long long> ei(static_cast<std::size_t>(source.cycle_size), 0);
          std::vector<long long> ej(static_cast<std::size_t>(source.cycle_size), 0);
          ei[static_cast<std::size_t>(source.position)] = 1;
          ej[static_cast<std::size_t>(target.position)] = 1;
          c.require(result.colimit_dim == tn_hom(source.cycle_size, ei, ej, 0),
                    instance.name + ": rotation-model mismatch");
        }
      }
    }
  }
  return c;
}

// 8. Admissibility gate on the free loop and the dual numbers.
Criterion criterion_admissibility() {
  Criterion c;
  try {
    MonomialAlgebra::validate(parse_presentation(read_file(kDataDir + "/freeloop.alg")));
    c.require(false, "free loop was accepted");
  } catch (const Error& e) {
    c.require(e.code() == ErrorCode::infinite_dimensional, "wrong error code");
    c.require(std::string(e.what()).find("x") != std::string::npos, "cycle not named");
  }

  const AlgebraPtr dual = MonomialAlgebra::validate(parse_presentation(read_file(kDataDir + "/kx2.alg")));
  c.require(dual->dimension() == 2, "dual numbers should have dimension 2");
  const SingularityReport report = singularity_report(dual);
  c.require(report.components.size() == 1 && report.components[0].kind == ComponentKind::perfect &&
                report.components[0].size() == 1,
            "expected one perfect 1-cycle");
  c.require(report.is_gorenstein, "dual numbers are gorenstein");
  c.require(report.descriptors.d_sg == "D_sg ≅ T_1", "descriptor mismatch");
  return c;
}

// 9. Elementary composition agrees with composed explicit maps modulo
// projectives.
Criterion criterion_composition(const std::vector<Instance>& corpus) {
  Criterion c;
  for (const Instance& instance : corpus) {
    const AlgebraPtr& a = instance.algebra;
    const int na = a->quiver().arrow_count();
    std::vector<ExplicitModule> realized;
    for (int arrow = 0; arrow < na; ++arrow) realized.push_back(realize(arrow_object(a, arrow)));
    for (int first = 0; first < na; ++first) {
      if (a->is_projective_arrow_module(first)) continue;
      for (int middle : a->neighbor_set(first)) {
        if (a->is_projective_arrow_module(middle)) continue;
        for (int last : a->neighbor_set(middle)) {
          const StableMorphism f =
              StableMorphism::elementary(arrow_object(a, first), arrow_object(a, middle), 0, 0);
          const StableMorphism g =
              StableMorphism::elementary(arrow_object(a, middle), arrow_object(a, last), 0, 0);
          const StableMorphism h = compose(g, f);
          c.require(h.matrix()(0, 0) == 1, instance.name + ": composite is not elementary");

          const ExplicitModule& m_first = realized[static_cast<std::size_t>(first)];
          const ExplicitModule& m_middle = realized[static_cast<std::size_t>(middle)];
          const ExplicitModule& m_last = realized[static_cast<std::size_t>(last)];
          const RationalMatrix explicit_composite = realize_morphism(g, m_middle, m_last) *
                                                    realize_morphism(f, m_first, m_middle);
          const RationalMatrix calculus_composite = realize_morphism(h, m_first, m_last);
          c.require(factors_through_projectives(m_first, m_last,
                                                explicit_composite - calculus_composite),
                    instance.name + ": composite differs modulo projectives");
        }
      }
    }
  }
  return c;
}

// 10. Byte-identical structured output across repeated runs.
Criterion criterion_determinism() {
  Criterion c;
  const std::string two_loops = kDataDir + "/example55.alg";
  const std::string crossed = kDataDir + "/example56.alg";
  const std::string dual = kDataDir + "/kx2.alg";
  const std::vector<std::vector<std::string>> invocations = {
      {"validate", two_loops, "--json"},
      {"validate", dual, "--json"},
      {"basis", two_loops, "--json"},
      {"relquiver", crossed, "--json"},
      {"classify", crossed, "--json"},
      {"report", crossed, "--json"},
      {"report", two_loops, "--json"},
      {"syzygy", two_loops, "--object", "A(x) + S(v)", "--steps", "4", "--json"},
      {"stable-hom", two_loops, "--from", "A(y)", "--to", "A(x)", "--oracle", "--json"},
      {"dsg-hom", crossed, "--from", "A(alpha)", "--to", "A(alpha)", "--json"},
      {"dsg-hom", two_loops, "--from", "A(x)", "--to", "A(x)", "--cutoff", "5", "--json"},
      {"cross-check", crossed, "--from", "A(gamma)", "--to", "A(delta)", "--depth", "8", "--json"},
      {"corpus", "--seed", "31", "--count", "5", "--json"},
  };
  for (const auto& invocation : invocations) {
    const auto first = run_tool(invocation);
    const auto second = run_tool(invocation);
    c.require(first.first == second.first && first.second == second.second,
              "nondeterministic output for subcommand " + invocation[0]);
    c.require(!first.second.empty(), "empty output for subcommand " + invocation[0]);
  }
  return c;
}

int report_line(int id, const std::string& name, const Criterion& c) {
  std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << name;
  if (!c.ok) std::cout << " — " << c.detail;
  std::cout << std::endl;
  return c.ok ? 0 : 1;
}

}  // namespace

int main() {
  const auto corpus = build_corpus();
  std::cout << "corpus: " << corpus.size() << " instances" << std::endl;

  int failures = 0;
  failures += report_line(1, "crossed-cycles golden report", criterion_golden_crossed());
  failures += report_line(2, "two-loops golden report", criterion_golden_two_loops());
  failures += report_line(3, "stable hom formula vs oracle", criterion_formula_vs_oracle(corpus));
  failures += report_line(4, "syzygy exactness", criterion_syzygy_exactness(corpus));
  failures += report_line(5, "arrow sums after two steps", criterion_arrow_sum(corpus));
  failures += report_line(6, "cross-check at depth 8", criterion_cross_check(corpus));
  failures += report_line(7, "perfect-component homs", criterion_perfect_homs(corpus));
  failures += report_line(8, "admissibility gate", criterion_admissibility());
  failures += report_line(9, "composition law vs oracle", criterion_composition(corpus));
  failures += report_line(10, "deterministic structured output", criterion_determinism());

  if (failures == 0) {
    std::cout << "acceptance: all criteria passed" << std::endl;
  } else {
    std::cout << "acceptance: " << failures << " criteria failed" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
