#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "wavefeas/solvers.hpp"

namespace wavefeas {

/// Fixed algorithm order used by all per-algorithm arrays and reports.
inline constexpr std::array<Algorithm, 3> kBenchAlgorithms = {
    Algorithm::kDR, Algorithm::kGCRM, Algorithm::kLT};

/// One benchmark table row.  Quartile fields are absent when no instance was
/// solved by all algorithms; counts are always present.
struct AlgorithmStats {
  Algorithm algorithm = Algorithm::kDR;
  long cases_solved = 0;
  long solved_by_all = 0;
  long wins = 0;
  std::optional<double> Q1;
  std::optional<double> mean;
  std::optional<double> Q3;
  std::optional<double> median;
};

struct BenchStats {
  std::array<AlgorithmStats, 3> algorithms;  // kBenchAlgorithms order
  long ties = 0;      ///< solved-by-all instances whose best count is shared
  long starts = 0;
};

/// Per-algorithm run records, aligned by instance index (seed order).
struct BenchRecords {
  std::array<std::vector<RunRecord>, 3> by_algorithm;  // kBenchAlgorithms order

  const std::vector<RunRecord>& records(Algorithm a) const;
};

/// Number of workers to use: `requested` when positive, otherwise the
/// WAVEFEAS_THREADS environment variable, otherwise the hardware concurrency;
/// always clamped to [1, n_instances].
int worker_count(int requested, int n_instances);

/// Runs n_starts instances with seeds base_seed, base_seed+1, ...  Stage 1 is
/// run once per instance and the endpoint is branched into one stage-2 run
/// per algorithm, so the stage-2 comparison shares its starting point
/// exactly.  Instances execute on `threads` workers (see worker_count) and
/// results are merged by instance index, so statistics do not depend on the
/// worker count.  `base` supplies tolerances and the iteration cap; its seed
/// and algorithm fields are ignored.
BenchRecords run_instances(const ProblemSpec& spec, int n_starts,
                           std::uint64_t base_seed,
                           const SolveConfig& base = {}, int threads = 0);

/// Aggregates aligned per-algorithm records: cases solved, the solved-by-all
/// subset, strict wins (ties award nobody and are counted separately), and
/// Q1/mean/Q3/median of stage-2 iterations over the solved-by-all subset.
/// Medians use the midpoint convention, quartiles inclusive linear
/// interpolation.
BenchStats summarize(const BenchRecords& records);

/// run_instances + summarize.
BenchStats run_bench(const ProblemSpec& spec, int n_starts,
                     std::uint64_t base_seed, const SolveConfig& base = {},
                     int threads = 0);

}  // namespace wavefeas
