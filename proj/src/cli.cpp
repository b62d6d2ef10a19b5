#include "qmono/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qmono/corpus.hpp"
#include "qmono/errors.hpp"
#include "qmono/json_io.hpp"
#include "qmono/oracle.hpp"
#include "qmono/parser.hpp"
#include "qmono/report.hpp"
#include "qmono/rsz.hpp"
#include "qmono/stabilization.hpp"

namespace qmono {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

AlgebraPtr load_algebra(const std::string& path) {
  return MonomialAlgebra::validate(parse_presentation(read_file(path)));
}

int object_dimension(const MonomialAlgebra& a, const StableObject& x) {
  int dim = 0;
  for (const Generator& g : x.generators()) {
    switch (g.kind) {
      case GeneratorKind::arrow: dim += a.arrow_module_dimension(g.index); break;
      case GeneratorKind::simple: dim += 1; break;
      case GeneratorKind::projective: dim += a.projective_module_dimension(g.index); break;
    }
  }
  return dim;
}

void print_quiver_text(std::ostream& out, const Quiver& q) {
  out << "vertices:";
  for (const std::string& v : q.vertices()) out << " " << v;
  out << "\n";
  for (const Arrow& a : q.arrows()) out << "  " << a.source << " -> " << a.target << "  " << a.name << "\n";
}

struct CommonFlags {
  std::string file;
  bool json = false;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact syzygy calculus, stable Hom spaces and singularity-category "
               "invariants of quadratic monomial algebras"};
  app.name("qmono");
  app.require_subcommand(1);

  CommonFlags validate_flags, basis_flags, relquiver_flags, classify_flags, report_flags;
  CommonFlags syzygy_flags, stable_hom_flags, dsg_flags, cross_flags;
  std::string object_expr, from_expr, to_expr;
  int steps = 4;
  int cutoff = kDefaultCutoff;
  int depth = 8;
  bool with_oracle = false;
  CorpusConfig corpus_config;
  std::string corpus_out_dir;
  bool corpus_json = false;

  const auto add_file = [](CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("file", flags.file, "algebra presentation file")->required();
    cmd->add_flag("--json", flags.json, "structured output");
  };

  CLI::App* cmd_validate = app.add_subcommand("validate", "admissibility check, dimension and basis size");
  add_file(cmd_validate, validate_flags);
  CLI::App* cmd_basis = app.add_subcommand("basis", "nonzero paths grouped by length");
  add_file(cmd_basis, basis_flags);
  CLI::App* cmd_relquiver = app.add_subcommand("relquiver", "relation quiver with labels");
  add_file(cmd_relquiver, relquiver_flags);
  CLI::App* cmd_classify = app.add_subcommand("classify", "component classification of the relation quiver");
  add_file(cmd_classify, classify_flags);
  CLI::App* cmd_report = app.add_subcommand("report", "full singularity report");
  add_file(cmd_report, report_flags);

  CLI::App* cmd_syzygy = app.add_subcommand("syzygy", "syzygy orbit of a module expression");
  add_file(cmd_syzygy, syzygy_flags);
  cmd_syzygy->add_option("--object", object_expr, "module expression, e.g. \"A(x) + S(v)\"")->required();
  cmd_syzygy->add_option("--steps", steps, "number of syzygy steps")->check(CLI::NonNegativeNumber);

  CLI::App* cmd_stable_hom = app.add_subcommand("stable-hom", "stable Hom basis and dimension");
  add_file(cmd_stable_hom, stable_hom_flags);
  cmd_stable_hom->add_option("--from", from_expr, "source module expression")->required();
  cmd_stable_hom->add_option("--to", to_expr, "target module expression")->required();
  cmd_stable_hom->add_flag("--oracle", with_oracle, "also run the linear-algebra oracle and compare");

  CLI::App* cmd_dsg = app.add_subcommand("dsg-hom", "singularity-category hom via stabilization");
  add_file(cmd_dsg, dsg_flags);
  cmd_dsg->add_option("--from", from_expr, "source module expression")->required();
  cmd_dsg->add_option("--to", to_expr, "target module expression")->required();
  cmd_dsg->add_option("--cutoff", cutoff, "direct-system cutoff")->check(CLI::PositiveNumber);

  CLI::App* cmd_cross = app.add_subcommand("cross-check", "two-presentation consistency check");
  add_file(cmd_cross, cross_flags);
  cmd_cross->add_option("--from", from_expr, "source module expression")->required();
  cmd_cross->add_option("--to", to_expr, "target module expression")->required();
  cmd_cross->add_option("--depth", depth, "number of syzygy levels")->check(CLI::NonNegativeNumber);

  CLI::App* cmd_corpus = app.add_subcommand("corpus", "emit random admissible presentations");
  cmd_corpus->add_option("--seed", corpus_config.seed, "random seed");
  cmd_corpus->add_option("--count", corpus_config.count, "number of instances")->check(CLI::NonNegativeNumber);
  cmd_corpus->add_option("--max-vertices", corpus_config.max_vertices, "vertex cap")->check(CLI::PositiveNumber);
  cmd_corpus->add_option("--max-arrows", corpus_config.max_arrows, "arrow cap")->check(CLI::PositiveNumber);
  cmd_corpus->add_option("--out", corpus_out_dir, "directory for the generated files");
  cmd_corpus->add_flag("--json", corpus_json, "structured output");

  std::vector<const char*> argv{"qmono"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const bool json = validate_flags.json || basis_flags.json || relquiver_flags.json ||
                    classify_flags.json || report_flags.json || syzygy_flags.json ||
                    stable_hom_flags.json || dsg_flags.json || cross_flags.json || corpus_json;

  try {
    if (cmd_validate->parsed()) {
      const AlgebraPtr a = load_algebra(validate_flags.file);
      if (json) {
        Json j;
        j["command"] = "validate";
        j["status"] = "ok";
        j["dimension"] = a->dimension();
        j["basis_size"] = a->dimension();
        j["dims"] = a->path_counts_by_length();
        out << j.dump(2) << "\n";
      } else {
        out << "ok: admissible presentation\n";
        out << "dimension: " << a->dimension() << "\n";
        out << "basis size: " << a->dimension() << "\n";
      }
      return 0;
    }

    if (cmd_basis->parsed()) {
      const AlgebraPtr a = load_algebra(basis_flags.file);
      std::vector<std::vector<std::string>> by_length;
      for (const Path& p : a->nonzero_paths()) {
        if (static_cast<int>(by_length.size()) <= p.length()) by_length.resize(static_cast<std::size_t>(p.length()) + 1);
        by_length[static_cast<std::size_t>(p.length())].push_back(a->path_to_string(p));
      }
      if (json) {
        Json j;
        j["command"] = "basis";
        j["status"] = "ok";
        j["dims"] = a->path_counts_by_length();
        j["bases"] = by_length;
        out << j.dump(2) << "\n";
      } else {
        for (std::size_t len = 0; len < by_length.size(); ++len) {
          out << "length " << len << ":";
          for (const std::string& p : by_length[len]) out << " " << p;
          out << "\n";
        }
        out << "dimension: " << a->dimension() << "\n";
      }
      return 0;
    }

    if (cmd_relquiver->parsed()) {
      const AlgebraPtr a = load_algebra(relquiver_flags.file);
      const Quiver r = relation_quiver(*a);
      if (json) {
        Json j;
        j["command"] = "relquiver";
        j["status"] = "ok";
        j["quiver"] = to_json(r);
        out << j.dump(2) << "\n";
      } else {
        print_quiver_text(out, r);
      }
      return 0;
    }

    if (cmd_classify->parsed()) {
      const AlgebraPtr a = load_algebra(classify_flags.file);
      const auto components = classify_components(relation_quiver(*a));
      if (json) {
        Json j;
        j["command"] = "classify";
        j["status"] = "ok";
        Json list = Json::array();
        for (const ComponentInfo& component : components) list.push_back(to_json(component));
        j["components"] = std::move(list);
        out << j.dump(2) << "\n";
      } else {
        for (const ComponentInfo& component : components) {
          out << component_kind_name(component.kind) << " size " << component.size() << ": {";
          for (int v = 0; v < component.subquiver.vertex_count(); ++v) {
            if (v) out << ", ";
            out << component.subquiver.vertex(v);
          }
          out << "}\n";
        }
      }
      return 0;
    }

    if (cmd_report->parsed()) {
      const AlgebraPtr a = load_algebra(report_flags.file);
      const SingularityReport report = singularity_report(a);
      if (json) {
        Json j;
        j["command"] = "report";
        j["status"] = "ok";
        j["dimension"] = a->dimension();
        j["report"] = to_json(report);
        out << j.dump(2) << "\n";
      } else {
        out << "algebra dimension: " << a->dimension() << "\n";
        out << "relation quiver:\n";
        print_quiver_text(out, report.rel_quiver);
        out << "components:\n";
        for (const ComponentInfo& component : report.components) {
          out << "  " << component_kind_name(component.kind) << " size " << component.size() << ": {";
          for (int v = 0; v < component.subquiver.vertex_count(); ++v) {
            if (v) out << ", ";
            out << component.subquiver.vertex(v);
          }
          out << "}\n";
        }
        out << "gorenstein: " << (report.is_gorenstein ? "true" : "false") << "\n";
        out << "defect quiver Q':\n";
        if (report.defect_quiver.empty()) {
          out << "  (empty)\n";
        } else {
          print_quiver_text(out, report.defect_quiver);
        }
        out << "gorenstein-projective generators:";
        if (report.gorenstein_projective_generators.empty()) out << " none";
        for (const std::string& name : report.gorenstein_projective_generators) out << " A(" << name << ")";
        out << "\n";
        out << report.descriptors.gproj << "\n";
        out << report.descriptors.d_def << "\n";
        out << report.descriptors.d_sg << "\n";
        for (const std::string& note : report.notes) out << "note: " << note << "\n";
      }
      return 0;
    }

    if (cmd_syzygy->parsed()) {
      const AlgebraPtr a = load_algebra(syzygy_flags.file);
      StableObject object = parse_object_expr(a, object_expr);
      Json steps_json = Json::array();
      std::ostringstream text;
      for (int i = 0; i <= steps; ++i) {
        if (syzygy_flags.json) {
          Json entry;
          entry["i"] = i;
          entry["object"] = object.to_string();
          entry["module_dimension"] = object_dimension(*a, object);
          steps_json.push_back(std::move(entry));
        } else {
          text << "Omega^" << i << ": " << object.to_string() << " (dim " << object_dimension(*a, object)
               << ")\n";
        }
        if (i < steps) object = syzygy(object);
      }
      if (syzygy_flags.json) {
        Json j;
        j["command"] = "syzygy";
        j["status"] = "ok";
        j["object"] = object_expr;
        j["steps"] = std::move(steps_json);
        out << j.dump(2) << "\n";
      } else {
        out << text.str();
      }
      return 0;
    }

    if (cmd_stable_hom->parsed()) {
      const AlgebraPtr a = load_algebra(stable_hom_flags.file);
      const StableObject x = parse_object_expr(a, from_expr);
      const StableObject y = parse_object_expr(a, to_expr);
      const HomSpace hom = stable_hom(x, y);
      // The closed-form basis covers arrow summands; simple summands
      // contribute nothing to it, while the oracle sees the full module.
      const bool calculus_complete = hom.source.pure_arrow_sum() && hom.target.pure_arrow_sum();
      int oracle_dim = -1;
      bool match = true;
      if (with_oracle) {
        oracle_dim = stable_hom_dim(realize(normalize(x)), realize(normalize(y)));
        match = oracle_dim == hom.dim();
      }
      if (json) {
        Json j;
        j["command"] = "stable-hom";
        j["status"] = match ? (with_oracle ? "pass" : "ok") : "fail";
        j["dim"] = hom.dim();
        Json basis = Json::array();
        for (const auto& [s, t] : hom.basis) {
          Json entry;
          const Generator& sg = hom.source.generators()[static_cast<std::size_t>(s)];
          const Generator& tg = hom.target.generators()[static_cast<std::size_t>(t)];
          entry["from_slot"] = s;
          entry["to_slot"] = t;
          entry["map"] = "pi(" + a->quiver().arrow(sg.index).name + " -> " + a->quiver().arrow(tg.index).name + ")";
          basis.push_back(std::move(entry));
        }
        j["basis"] = std::move(basis);
        if (!calculus_complete)
          j["note"] = "simple summands carry no closed-form basis elements; only the oracle sees them";
        if (with_oracle) {
          j["oracle_dim"] = oracle_dim;
          j["oracle_match"] = match;
        }
        out << j.dump(2) << "\n";
      } else {
        out << "dim = " << hom.dim() << "\n";
        for (const auto& [s, t] : hom.basis) {
          const Generator& sg = hom.source.generators()[static_cast<std::size_t>(s)];
          const Generator& tg = hom.target.generators()[static_cast<std::size_t>(t)];
          out << "  slot " << s << " -> slot " << t << ": pi(" << a->quiver().arrow(sg.index).name
              << " -> " << a->quiver().arrow(tg.index).name << ")\n";
        }
        if (!calculus_complete)
          out << "note: simple summands carry no closed-form basis elements; only the oracle sees them\n";
        if (with_oracle) {
          out << "oracle dim = " << oracle_dim << (match ? " (PASS)" : " (FAIL)") << "\n";
        }
      }
      return match ? 0 : 1;
    }

    if (cmd_dsg->parsed()) {
      const AlgebraPtr a = load_algebra(dsg_flags.file);
      const StableObject x = parse_object_expr(a, from_expr);
      const StableObject y = parse_object_expr(a, to_expr);
      const StabilizationResult result = dsg_hom(x, y, cutoff);
      if (json) {
        Json j;
        j["command"] = "dsg-hom";
        j["status"] = "ok";
        j["result"] = to_json(result);
        out << j.dump(2) << "\n";
      } else {
        if (result.status == StabilizationStatus::exact) {
          out << "EXACT: dim = " << result.colimit_dim << " (preperiod " << result.period->preperiod
              << ", period " << result.period->period << ")\n";
        } else {
          out << "CUTOFF: no periodicity within the bound; reporting the rank table\n";
          out << "dims:";
          for (int d : result.level_dims) out << " " << d;
          out << "\n";
          out << "stable ranks:";
          for (int r : result.stable_ranks) out << " " << r;
          out << "\n";
          out << "all connecting maps injective: " << (result.all_connecting_injective ? "true" : "false")
              << "\n";
        }
      }
      return 0;
    }

    if (cmd_cross->parsed()) {
      const AlgebraPtr a = load_algebra(cross_flags.file);
      const RszContext ctx = make_rsz_context(a);
      const StableObject x = parse_object_expr(a, from_expr);
      const StableObject y = parse_object_expr(a, to_expr);
      const CrossCheckReport report = cross_check(ctx, x, y, depth);
      if (json) {
        Json j;
        j["command"] = "cross-check";
        j["status"] = report.pass ? "pass" : "fail";
        j["report"] = to_json(report);
        out << j.dump(2) << "\n";
      } else {
        for (const CrossCheckLevel& level : report.levels) {
          out << "level " << level.level << ": dim " << level.dim_a.get_str() << " vs "
              << level.dim_b.get_str();
          if (level.level < report.depth)
            out << ", rank " << level.rank_a.get_str() << " vs " << level.rank_b.get_str();
          out << (level.dims_match && level.ranks_match ? "" : "  MISMATCH") << "\n";
        }
        out << (report.pass ? "PASS" : "FAIL") << "\n";
      }
      return report.pass ? 0 : 1;
    }

    if (cmd_corpus->parsed()) {
      const CorpusResult result = generate_corpus(corpus_config);
      char rate[32];
      std::snprintf(rate, sizeof rate, "%.4f", result.rejection_rate());
      if (!corpus_out_dir.empty()) {
        std::filesystem::create_directories(corpus_out_dir);
        for (const CorpusInstance& instance : result.instances) {
          std::ofstream file(std::filesystem::path(corpus_out_dir) / (instance.name + ".alg"),
                             std::ios::binary);
          if (!file) throw Error(ErrorCode::io_error, "cannot write into '" + corpus_out_dir + "'");
          file << instance.text;
        }
      }
      if (corpus_json) {
        Json j;
        j["command"] = "corpus";
        j["status"] = "ok";
        j["seed"] = corpus_config.seed;
        j["count"] = static_cast<int>(result.instances.size());
        j["attempts"] = result.attempts;
        j["rejected"] = result.rejected;
        j["rejection_rate"] = rate;
        if (corpus_out_dir.empty()) {
          Json instances = Json::array();
          for (const CorpusInstance& instance : result.instances) {
            Json entry;
            entry["name"] = instance.name;
            entry["text"] = instance.text;
            instances.push_back(std::move(entry));
          }
          j["instances"] = std::move(instances);
        } else {
          j["out"] = corpus_out_dir;
        }
        out << j.dump(2) << "\n";
      } else {
        if (corpus_out_dir.empty()) {
          for (const CorpusInstance& instance : result.instances) {
            out << "# " << instance.name << "\n" << instance.text << "\n";
          }
        }
        out << "# instances: " << result.instances.size() << ", attempts: " << result.attempts
            << ", rejection rate: " << rate << "\n";
      }
      return 0;
    }
  } catch (const Error& e) {
    if (json) {
      Json j;
      j["status"] = "error";
      j["code"] = error_code_name(e.code());
      j["message"] = e.what();
      out << j.dump(2) << "\n";
    } else {
      err << "error: " << e.what() << "\n";
    }
    return 2;
  }

  err << "error: no subcommand\n";
  return 2;
}

}  // namespace qmono
