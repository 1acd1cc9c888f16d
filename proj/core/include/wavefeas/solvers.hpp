#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wavefeas/constraints.hpp"

namespace wavefeas {

enum class Algorithm { kDR, kGCRM, kLT };

const char* algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);

struct SolveConfig {
  ProblemSpec spec;
  double tol = 1e-9;               ///< final gap tolerance
  double stage1_threshold = 1e-2;  ///< gap at which stage 2 takes over
  long max_iters = 20000;          ///< cap on stage-1 + stage-2 iterations
  Algorithm algorithm = Algorithm::kLT;
  std::uint64_t seed = 0;
  double colinear_tol = kColinearTol;
  bool record_trace = false;       ///< keep the per-iteration gap sequence

  void validate() const;  // throws std::invalid_argument
};

struct RunRecord {
  bool solved = false;
  long stage1_iters = 0;
  long stage2_iters = 0;
  double final_gap = 0.0;
  long long projection_evals = 0;  ///< product/diagonal projection calls
  std::uint64_t seed = 0;
  Algorithm algorithm = Algorithm::kDR;
  std::optional<Ensemble> solution;  ///< averaged part, present iff solved
  std::vector<double> trace;         ///< per-iteration gaps when recorded
};

// ---------------------------------------------------------------------------
// Iteration operators, generic over the point type and the two projections.
// The product-space instantiation uses ProductPoint; the toy problems in the
// test suites instantiate the same templates with HPoint.
// ---------------------------------------------------------------------------

/// One splitting step x - P_V x + P_W(2 P_V x - x).
template <VectorPoint V, class PV, class PW>
V dr_step(const V& x, PV&& project_v, PW&& project_w) {
  const V pvx = project_v(x);
  const V reflected = 2.0 * pvx - x;
  return x - pvx + project_w(reflected);
}

/// Circumcentered reflections with the splitting step as the colinear
/// fallback.  Costs one evaluation of each projection.
template <VectorPoint V, class PV, class PW>
V gcrm_step(const V& x, PV&& project_v, PW&& project_w,
            double colinear_tol = kColinearTol) {
  const V pvx = project_v(x);
  const V r1 = 2.0 * pvx - x;
  const V pwr1 = project_w(r1);
  const V r2 = 2.0 * pwr1 - r1;
  if (colinear(x, r1, r2, colinear_tol)) return x - pvx + pwr1;
  return circumcenter(x, r1, r2);
}

/// Auxiliary centering point built from x, Tx and T^2 x:
///   2 (T^2 x - Tx) + 2 P_span(T^2 x - Tx)(Tx - x) + x,
/// with the span projection defined as zero when T^2 x = Tx.
template <VectorPoint V>
V lt_auxiliary_point(const V& x, const V& tx, const V& t2x) {
  const V d = t2x - tx;
  const double dd = dot(d, d);
  const double scale = 1.0 + norm(x) + norm(tx - x);
  if (std::sqrt(dd) <= 1e-14 * scale) return x;
  const double coef = dot(tx - x, d) / dd;
  return x + (2.0 + 2.0 * coef) * d;
}

/// Subproblem-free centering step: circumcenter of x, 2Tx - x and the
/// auxiliary point, falling back to T^2 x when the triple is colinear.
/// Costs two evaluations of each projection.
template <VectorPoint V, class PV, class PW>
V lt_step(const V& x, PV&& project_v, PW&& project_w,
          double colinear_tol = kColinearTol) {
  const V tx = dr_step(x, project_v, project_w);
  const V t2x = dr_step(tx, project_v, project_w);
  const V probe = lt_auxiliary_point(x, tx, t2x);
  const V mirror = 2.0 * tx - x;
  if (colinear(x, mirror, probe, colinear_tol)) return t2x;
  return circumcenter(x, mirror, probe);
}

/// Stopping functional ||P_V P_W x - P_W x||; zero exactly when P_W x is
/// feasible.
template <VectorPoint V, class PV, class PW>
double gap(const V& x, PV&& project_v, PW&& project_w) {
  const V w = project_w(x);
  return dist(project_v(w), w);
}

// ---------------------------------------------------------------------------
// Two-stage driver on the wavelet product space.
// ---------------------------------------------------------------------------

/// Runs the splitting method from the seeded start until the gap drops below
/// stage1_threshold, then the configured algorithm until the gap drops below
/// tol or the total iteration cap is reached.  The gap is evaluated before
/// the first step and after every step.  Deterministic in cfg.
RunRecord two_stage_solve(const SolveConfig& cfg);

namespace detail {

/// Stage-1 endpoint shared by the benchmark's per-algorithm branches.
struct Stage1Result {
  ProductPoint x;
  double gap = 0.0;
  long iters = 0;
  long long projection_evals = 0;
  bool reached_threshold = false;
  std::vector<double> trace;
};

Stage1Result run_stage1(const ProblemProjections& ops, const SolveConfig& cfg,
                        const ProductPoint& x0);

/// Continues one algorithm from a stage-1 endpoint and assembles the record.
RunRecord run_stage2(const ProblemProjections& ops, const SolveConfig& cfg,
                     const Stage1Result& stage1, Algorithm algorithm);

/// two_stage_solve with an explicit start, used by the driver and the tests.
RunRecord two_stage_solve_from(const ProblemProjections& ops,
                               const SolveConfig& cfg, const ProductPoint& x0);

}  // namespace detail

}  // namespace wavefeas
