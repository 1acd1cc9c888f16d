#include "wavefeas/solvers.hpp"

namespace wavefeas {

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kDR: return "dr";
    case Algorithm::kGCRM: return "gcrm";
    case Algorithm::kLT: return "lt";
  }
  return "unknown";
}

Algorithm algorithm_from_name(const std::string& name) {
  if (name == "dr") return Algorithm::kDR;
  if (name == "gcrm") return Algorithm::kGCRM;
  if (name == "lt") return Algorithm::kLT;
  throw std::invalid_argument("unknown algorithm: " + name);
}

void SolveConfig::validate() const {
  spec.validate();
  if (!(tol > 0.0) || !(tol < stage1_threshold))
    throw std::invalid_argument("solve: need 0 < tol < stage1_threshold");
  if (max_iters < 1)
    throw std::invalid_argument("solve: max_iters must be >= 1");
  if (!(colinear_tol > 0.0))
    throw std::invalid_argument("solve: colinear_tol must be positive");
}

namespace detail {

namespace {

// Counts product/diagonal projection evaluations so the per-step cost of the
// centering methods is reported honestly (one pair per splitting or GCRM
// step, two per LT step, one more per gap evaluation).
struct CountingOps {
  const ProblemProjections& ops;
  long long evals = 0;

  ProductPoint pv(const ProductPoint& x) {
    ++evals;
    return ops.project_product(x);
  }
  ProductPoint pw(const ProductPoint& x) {
    ++evals;
    return project_diagonal(x);
  }
};

}  // namespace

Stage1Result run_stage1(const ProblemProjections& ops, const SolveConfig& cfg,
                        const ProductPoint& x0) {
  CountingOps count{ops};
  auto pv = [&count](const ProductPoint& p) { return count.pv(p); };
  auto pw = [&count](const ProductPoint& p) { return count.pw(p); };

  Stage1Result r;
  r.x = x0;
  r.gap = gap(r.x, pv, pw);
  if (cfg.record_trace) r.trace.push_back(r.gap);

  while (r.gap >= cfg.stage1_threshold && r.iters < cfg.max_iters) {
    r.x = dr_step(r.x, pv, pw);
    ++r.iters;
    r.gap = gap(r.x, pv, pw);
    if (cfg.record_trace) r.trace.push_back(r.gap);
  }
  r.reached_threshold = r.gap < cfg.stage1_threshold;
  r.projection_evals = count.evals;
  return r;
}

RunRecord run_stage2(const ProblemProjections& ops, const SolveConfig& cfg,
                     const Stage1Result& stage1, Algorithm algorithm) {
  CountingOps count{ops};
  auto pv = [&count](const ProductPoint& p) { return count.pv(p); };
  auto pw = [&count](const ProductPoint& p) { return count.pw(p); };

  RunRecord rec;
  rec.seed = cfg.seed;
  rec.algorithm = algorithm;
  rec.stage1_iters = stage1.iters;
  if (cfg.record_trace) rec.trace = stage1.trace;

  ProductPoint x = stage1.x;
  double g = stage1.gap;
  long total = stage1.iters;

  if (stage1.reached_threshold) {
    while (g >= cfg.tol && total < cfg.max_iters) {
      switch (algorithm) {
        case Algorithm::kDR:
          x = dr_step(x, pv, pw);
          break;
        case Algorithm::kGCRM:
          x = gcrm_step(x, pv, pw, cfg.colinear_tol);
          break;
        case Algorithm::kLT:
          x = lt_step(x, pv, pw, cfg.colinear_tol);
          break;
      }
      ++rec.stage2_iters;
      ++total;
      g = gap(x, pv, pw);
      if (cfg.record_trace) rec.trace.push_back(g);
    }
  }

  rec.final_gap = g;
  rec.solved = g < cfg.tol;
  rec.projection_evals = stage1.projection_evals + count.evals;
  if (rec.solved) rec.solution = project_diagonal(x).parts[0];
  return rec;
}

RunRecord two_stage_solve_from(const ProblemProjections& ops,
                               const SolveConfig& cfg, const ProductPoint& x0) {
  const Stage1Result stage1 = run_stage1(ops, cfg, x0);
  return run_stage2(ops, cfg, stage1, cfg.algorithm);
}

}  // namespace detail

RunRecord two_stage_solve(const SolveConfig& cfg) {
  cfg.validate();
  const ProblemProjections ops(cfg.spec);
  const ProductPoint x0 =
      diagonal_point(random_ensemble(cfg.spec.M, cfg.seed));
  return detail::two_stage_solve_from(ops, cfg, x0);
}

}  // namespace wavefeas
