#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "wavefeas/harness.hpp"
#include "wavefeas/io.hpp"
#include "wavefeas/solvers.hpp"
#include "wavefeas/wavelet.hpp"

namespace wavefeas {

namespace {

struct ProblemOptions {
  std::string problem = "sym";
  int M = 6;
  int D = 1;
  double gamma = 0.5;
  int P = -1;  // sentinel: 2 for sym, 1 for card
  std::string phase = "four-pi";

  ProblemSpec to_spec() const {
    ProblemSpec spec;
    spec.M = M;
    spec.D = D;
    spec.gamma = gamma;
    if (problem == "sym") {
      spec.kind = ProblemKind::kSymmetric;
      spec.P = P < 0 ? 2 : P;
    } else if (problem == "card") {
      spec.kind = ProblemKind::kCardinal;
      spec.P = P < 0 ? 1 : P;
    } else {
      throw std::invalid_argument("--problem must be sym or card");
    }
    if (phase == "four-pi") {
      spec.phase = SymmetryPhase::kFourPi;
    } else if (phase == "two-pi") {
      spec.phase = SymmetryPhase::kTwoPi;
    } else {
      throw std::invalid_argument("--symmetry-phase must be four-pi or two-pi");
    }
    spec.validate();
    return spec;
  }
};

void add_problem_options(CLI::App* cmd, ProblemOptions* opts) {
  cmd->add_option("--problem", opts->problem, "Problem family: sym or card")
      ->check(CLI::IsMember({"sym", "card"}));
  cmd->add_option("--M", opts->M, "Sample count (even, >= 4)");
  cmd->add_option("--D", opts->D, "Regularity order");
  cmd->add_option("--gamma", opts->gamma, "Shape slack");
  cmd->add_option("--P", opts->P,
                  "Symmetry center or cardinality point; defaults to 2 / 1");
  cmd->add_option("--symmetry-phase", opts->phase,
                  "Symmetry phase convention: four-pi (center P) or two-pi "
                  "(center P/2)")
      ->check(CLI::IsMember({"four-pi", "two-pi"}));
}

struct SolveOptions {
  double tol = 1e-9;
  double stage1_threshold = 1e-2;
  long max_iters = 20000;
};

void add_solve_options(CLI::App* cmd, SolveOptions* opts) {
  cmd->add_option("--tol", opts->tol, "Final gap tolerance");
  cmd->add_option("--stage1-threshold", opts->stage1_threshold,
                  "Gap at which stage 2 takes over");
  cmd->add_option("--max-iters", opts->max_iters,
                  "Cap on stage-1 + stage-2 iterations");
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << text;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  Json j;
  in >> j;
  return j;
}

int do_solve(const ProblemOptions& popts, const SolveOptions& sopts,
             std::uint64_t seed, const std::string& algorithm,
             const std::string& out_path) {
  SolveConfig cfg;
  cfg.spec = popts.to_spec();
  cfg.tol = sopts.tol;
  cfg.stage1_threshold = sopts.stage1_threshold;
  cfg.max_iters = sopts.max_iters;
  cfg.seed = seed;
  cfg.algorithm = algorithm_from_name(algorithm);
  cfg.record_trace = true;

  const RunRecord record = two_stage_solve(cfg);

  Json doc = to_json(record);
  if (record.solution) {
    doc["filters"] = to_json(extract_filters(*record.solution));
    doc["residuals"] = to_json(verify(*record.solution, cfg.spec));
  }
  write_output(doc.dump(2) + "\n", out_path);
  return record.solved ? 0 : 1;
}

int do_bench(const ProblemOptions& popts, const SolveOptions& sopts,
             int starts, std::uint64_t base_seed, const std::string& json_path) {
  SolveConfig base;
  base.tol = sopts.tol;
  base.stage1_threshold = sopts.stage1_threshold;
  base.max_iters = sopts.max_iters;

  const ProblemSpec spec = popts.to_spec();
  const BenchStats stats = run_bench(spec, starts, base_seed, base);

  Json doc = to_json(stats);
  doc["problem"] = popts.problem;
  doc["M"] = spec.M;
  doc["D"] = spec.D;
  doc["gamma"] = spec.gamma;
  doc["P"] = spec.P;
  doc["base_seed"] = base_seed;
  write_output(doc.dump(2) + "\n", json_path);
  return 0;
}

int do_cascade(const std::string& filters_path, int levels,
               const std::string& out_path) {
  const FilterPair filters = filters_from_json(load_json(filters_path));
  const CascadeTable table = cascade(filters, levels);
  write_output(to_csv(table), out_path);
  return 0;
}

int do_check(const ProblemOptions& popts, const std::string& ensemble_path) {
  const Ensemble e = ensemble_from_json(load_json(ensemble_path));
  ProblemOptions adjusted = popts;
  adjusted.M = e.samples();
  const ProblemSpec spec = adjusted.to_spec();
  Json doc = to_json(verify(e, spec));
  doc["M"] = e.samples();
  std::cout << doc.dump(2) << "\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"wavefeas: near-symmetric and near-cardinal orthogonal wavelet "
               "design by projection methods"};
  app.require_subcommand(1);

  ProblemOptions solve_p, bench_p, check_p;
  SolveOptions solve_s, bench_s;
  std::uint64_t seed = 0;
  std::string algorithm = "lt";
  std::string solve_out;
  int starts = 100;
  std::uint64_t base_seed = 1;
  std::string bench_json;
  std::string filters_path;
  int levels = 10;
  std::string cascade_out;
  std::string ensemble_path;

  CLI::App* solve = app.add_subcommand("solve", "Run one seeded two-stage solve");
  add_problem_options(solve, &solve_p);
  add_solve_options(solve, &solve_s);
  solve->add_option("--seed", seed, "Initialization seed");
  solve->add_option("--algorithm", algorithm, "Stage-2 algorithm: dr, gcrm or lt")
      ->check(CLI::IsMember({"dr", "gcrm", "lt"}));
  solve->add_option("--out", solve_out, "Write the JSON record here instead of stdout");

  CLI::App* bench = app.add_subcommand(
      "bench", "Seeded multi-start benchmark of dr/gcrm/lt with shared stage 1");
  add_problem_options(bench, &bench_p);
  add_solve_options(bench, &bench_s);
  bench->add_option("--starts", starts, "Number of seeded starts");
  bench->add_option("--base-seed", base_seed, "Seed of the first instance");
  bench->add_option("--json", bench_json, "Write the JSON table here instead of stdout");

  CLI::App* casc = app.add_subcommand(
      "cascade", "Sample the scaling function and wavelet of a filter pair");
  casc->add_option("--filters", filters_path, "JSON file with filter taps h (and g)")
      ->required();
  casc->add_option("--levels", levels, "Refinement iterations / grid depth");
  casc->add_option("--out", cascade_out, "Write the CSV here instead of stdout");

  CLI::App* check = app.add_subcommand(
      "check", "Report the residuals of a stored ensemble");
  add_problem_options(check, &check_p);
  check->add_option("--ensemble", ensemble_path, "Ensemble JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (solve->parsed())
      return do_solve(solve_p, solve_s, seed, algorithm, solve_out);
    if (bench->parsed())
      return do_bench(bench_p, bench_s, starts, base_seed, bench_json);
    if (casc->parsed()) return do_cascade(filters_path, levels, cascade_out);
    if (check->parsed()) return do_check(check_p, ensemble_path);
  } catch (const Divergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace wavefeas
