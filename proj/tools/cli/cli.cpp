#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <sfvs/checker.hpp>
#include <sfvs/cotree.hpp>
#include <sfvs/errors.hpp>
#include <sfvs/generators.hpp>
#include <sfvs/instance_io.hpp>
#include <sfvs/pipeline.hpp>

#include "bench_suite.hpp"
#include "result_record.hpp"

namespace sfvs::cli {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Instance load_instance(const std::string& path) { return parse_instance(slurp(path)); }

void print_ids(std::ostream& out, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i] + 1;
}

struct SolveArgs {
  std::string file;
  bool weighted = false;
  bool unweighted = false;
  std::optional<int> s;
  std::string backend = "auto";
  bool validate = false;
  bool no_validate = false;
  int threads = 1;
  int brute_threshold = ReducedSolverConfig{}.brute_threshold;
  int max_modulator = ReducedSolverConfig{}.max_modulator;
  bool timings = false;
};

int do_solve(const SolveArgs& a, std::ostream& out) {
  if (a.threads < 1) throw InputError("--threads must be at least 1");
  const Instance inst = load_instance(a.file);
  SolveOptions opts;
  opts.config.threads = a.threads;
  opts.config.reduced.backend = parse_backend(a.backend);
  opts.config.reduced.brute_threshold = a.brute_threshold;
  opts.config.reduced.max_modulator = a.max_modulator;
  if (a.validate) opts.validate_class = true;
  if (a.no_validate) opts.validate_class = false;

  RecordOptions rec;
  rec.backend = a.backend;
  const auto start = std::chrono::steady_clock::now();
  SolveReport report;
  if (a.unweighted) {
    rec.mode = "unweighted";
    rec.s = a.s.value_or(2);
    report = solve_unweighted_sp1p4(inst, rec.s, opts);
  } else {
    if (a.s && *a.s != 2) throw InputError("--s applies to --unweighted only; the weighted solver fixes s = 2");
    rec.mode = "weighted";
    rec.s = 2;
    report = solve_weighted_2p1p4(inst, opts);
  }
  if (a.timings)
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out << format_record(inst, report, rec);
  return kOk;
}

int violation(std::ostream& out, const std::string& what) {
  out << "violation: " << what << "\n";
  return kNegative;
}

int do_verify(const std::string& inst_path, const std::string& result_path, std::ostream& out) {
  const Instance inst = load_instance(inst_path);
  const ParsedRecord rec = parse_record(slurp(result_path));
  const int n = inst.order();
  if (rec.n != n)
    throw InputError("record is for n = " + std::to_string(rec.n) + ", instance has n = " + std::to_string(n));

  auto to_set = [&](const std::vector<long long>& ids, const char* name, std::string& problem) {
    VertexSet s(static_cast<std::size_t>(n));
    long long prev = 0;
    for (long long id : ids) {
      if (id < 1 || id > n) {
        problem = std::string(name) + " lists id " + std::to_string(id) + " outside 1.." + std::to_string(n);
        break;
      }
      if (id <= prev) {
        problem = std::string(name) + " is not strictly ascending at id " + std::to_string(id);
        break;
      }
      prev = id;
      s.insert(static_cast<Vertex>(id - 1));
    }
    return s;
  };
  std::string problem;
  const VertexSet forest = to_set(rec.forest, "forest", problem);
  if (!problem.empty()) return violation(out, problem);
  const VertexSet deleted = to_set(rec.deleted, "deleted", problem);
  if (!problem.empty()) return violation(out, problem);
  if (const Vertex both = (forest & deleted).first(); both >= 0)
    return violation(out, "vertex " + std::to_string(both + 1) + " is both kept and deleted");
  if (const Vertex missing = (forest | deleted).complement().first(); missing >= 0)
    return violation(out, "vertex " + std::to_string(missing + 1) + " is neither kept nor deleted");

  const TForestResult check = is_t_forest(inst.graph(), forest, inst.terminals());
  if (!check) {
    std::ostringstream msg;
    msg << "kept vertices contain a cycle through terminal " << check.witness->t_vertex + 1 << ": ";
    print_ids(msg, check.witness->cycle);
    return violation(out, msg.str());
  }
  const Rational kept = inst.weight_of(forest);
  const Rational removed = inst.weight_of(deleted);
  if (rec.optimum_weight && *rec.optimum_weight != kept)
    return violation(out, "optimum_weight " + rec.optimum_weight->str() + " but kept weight is " + kept.str());
  if (rec.deleted_weight && *rec.deleted_weight != removed)
    return violation(out, "deleted_weight " + rec.deleted_weight->str() + " but deleted weight is " + removed.str());
  if (rec.decision && inst.threshold() && *rec.decision != (removed <= *inst.threshold()))
    return violation(out, "decision does not match the threshold");
  out << "ok\n";
  return kOk;
}

struct GenArgs {
  std::string family;
  GeneratorSpec spec;
  std::string weights = "unit";
};

int do_gen(GenArgs a, std::ostream& out) {
  a.spec.family = parse_family(a.family);
  if (a.weights == "unit") {
    a.spec.unit_weights = true;
  } else if (a.weights == "random") {
    a.spec.unit_weights = false;
  } else {
    throw InputError("--weights must be unit or random");
  }
  if (a.spec.n < 0) throw InputError("--n must be non-negative");
  out << format_instance(generate(a.spec).instance);
  return kOk;
}

int do_recognize(const std::string& file, int s, std::ostream& out) {
  const Instance inst = load_instance(file);
  auto w = find_induced_sp1_p4(inst.graph(), s);
  if (!w) {
    out << "free\n";
    return kOk;
  }
  out << "pattern ";
  print_ids(out, w->vertices);
  out << "\n";
  return kNegative;
}

int do_bench(const std::string& suite, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  auto cases = run_bench_suite(suite, seed);
  if (!cases) {
    err << "error: unknown suite '" << suite << "' (known:";
    for (const auto& s : bench_suite_names()) err << " " << s;
    err << ")\n";
    return kInputError;
  }
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["cases"] = nlohmann::ordered_json::array();
  for (const auto& c : *cases) j["cases"].push_back({{"name", c.name}, {"n", c.n}, {"m", c.m}, {"ms", c.ms}});
  out << j.dump(2) << "\n";
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact subset feedback vertex set on (sP1+P4)-free graphs", "sfvs"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance and print a JSON result record");
  solve_cmd->add_option("file", solve.file, "Instance file")->required();
  auto* w_flag = solve_cmd->add_flag("--weighted", solve.weighted, "Weighted solver, (2P1+P4)-free graphs (default)");
  solve_cmd->add_flag("--unweighted", solve.unweighted, "Unit-weight solver, (sP1+P4)-free graphs")->excludes(w_flag);
  solve_cmd->add_option("--s", solve.s, "Pattern parameter s for --unweighted (default 2)")->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--backend", solve.backend, "Reduced-instance solver")->check(CLI::IsMember({"dp", "brute", "auto"}));
  auto* v_flag = solve_cmd->add_flag("--validate-class", solve.validate, "Always run the pattern check");
  solve_cmd->add_flag("--no-validate-class", solve.no_validate, "Never run the pattern check")->excludes(v_flag);
  solve_cmd->add_option("--threads", solve.threads, "Worker threads");
  solve_cmd->add_option("--brute-threshold", solve.brute_threshold, "auto backend: brute force up to this many vertices");
  solve_cmd->add_option("--max-modulator", solve.max_modulator, "Largest modulator the DP accepts");
  solve_cmd->add_flag("--timings", solve.timings, "Add wall-clock timings to the record");

  std::string verify_inst, verify_result;
  auto* verify_cmd = app.add_subcommand("verify", "Check a result record against an instance");
  verify_cmd->add_option("instance", verify_inst, "Instance file")->required();
  verify_cmd->add_option("result", verify_result, "Result record (JSON)")->required();

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("--family", gen.family, "random_gnp, random_cograph, cograph_plus_modulator, "
                                              "sp1p4_free_filtered, split_like, paper_fig1_like")
      ->required();
  gen_cmd->add_option("--seed", gen.spec.seed, "Random seed")->required();
  gen_cmd->add_option("--n", gen.spec.n, "Number of vertices");
  gen_cmd->add_option("--p", gen.spec.edge_probability, "Edge (or join) probability")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--modulator", gen.spec.modulator, "Extra vertices for cograph_plus_modulator")
      ->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--s", gen.spec.s, "Pattern parameter for sp1p4_free_filtered")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--terminal-prob", gen.spec.terminal_probability, "Probability of a terminal")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--weights", gen.weights, "unit or random");

  std::string recognize_file;
  int recognize_s = 2;
  auto* rec_cmd = app.add_subcommand("recognize", "Look for an induced sP1+P4");
  rec_cmd->add_option("--s", recognize_s, "Pattern parameter s")->required()->check(CLI::NonNegativeNumber);
  rec_cmd->add_option("file", recognize_file, "Instance file")->required();

  std::string suite;
  std::uint64_t bench_seed = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Run a fixed timing suite");
  bench_cmd->add_option("--suite", suite, "cograph, checker, flow, pipeline or all")->required();
  bench_cmd->add_option("--seed", bench_seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*solve_cmd) return do_solve(solve, out);
    if (*verify_cmd) return do_verify(verify_inst, verify_result, out);
    if (*gen_cmd) return do_gen(gen, out);
    if (*rec_cmd) return do_recognize(recognize_file, recognize_s, out);
    if (*bench_cmd) return do_bench(suite, bench_seed, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << "\n";
    return kCapacity;
  } catch (const GenerationError& e) {
    err << "generation failed: " << e.what() << "\n";
    return kCapacity;
  }
  return kInputError;
}

}  // namespace sfvs::cli
