#include "wavefeas/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace wavefeas {

const std::vector<RunRecord>& BenchRecords::records(Algorithm a) const {
  for (std::size_t i = 0; i < kBenchAlgorithms.size(); ++i) {
    if (kBenchAlgorithms[i] == a) return by_algorithm[i];
  }
  throw std::invalid_argument("unknown algorithm");
}

int worker_count(int requested, int n_instances) {
  int workers = requested;
  if (workers <= 0) {
    if (const char* env = std::getenv("WAVEFEAS_THREADS")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) workers = static_cast<int>(v);
    }
  }
  if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers <= 0) workers = 1;
  return std::clamp(workers, 1, std::max(1, n_instances));
}

BenchRecords run_instances(const ProblemSpec& spec, int n_starts,
                           std::uint64_t base_seed, const SolveConfig& base,
                           int threads) {
  if (n_starts < 1)
    throw std::invalid_argument("bench: need at least one start");

  SolveConfig cfg = base;
  cfg.spec = spec;
  cfg.record_trace = false;
  cfg.validate();

  const ProblemProjections ops(spec);

  BenchRecords out;
  for (auto& records : out.by_algorithm)
    records.resize(static_cast<std::size_t>(n_starts));

  // Instances are independent and deterministic in their seed; results land
  // in their seed-order slot, so worker count never changes the output.
  std::atomic<int> cursor{0};
  auto work = [&]() {
    for (;;) {
      const int i = cursor.fetch_add(1);
      if (i >= n_starts) return;
      SolveConfig instance = cfg;
      instance.seed = base_seed + static_cast<std::uint64_t>(i);
      const ProductPoint x0 =
          diagonal_point(random_ensemble(spec.M, instance.seed));
      const detail::Stage1Result stage1 = detail::run_stage1(ops, instance, x0);
      for (std::size_t a = 0; a < kBenchAlgorithms.size(); ++a) {
        out.by_algorithm[a][static_cast<std::size_t>(i)] =
            detail::run_stage2(ops, instance, stage1, kBenchAlgorithms[a]);
      }
    }
  };

  const int workers = worker_count(threads, n_starts);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return out;
}

namespace {

// Inclusive (linearly interpolated) quantile of a sorted sample.
double quantile(const std::vector<double>& sorted, double p) {
  const std::size_t n = sorted.size();
  if (n == 1) return sorted[0];
  const double pos = p * static_cast<double>(n - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const double frac = pos - static_cast<double>(lo);
  if (lo + 1 >= n) return sorted[n - 1];
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

BenchStats summarize(const BenchRecords& records) {
  const std::size_t n = records.by_algorithm[0].size();
  for (const auto& list : records.by_algorithm) {
    if (list.size() != n)
      throw std::invalid_argument("summarize: record lists must be aligned");
  }

  BenchStats stats;
  stats.starts = static_cast<long>(n);

  std::vector<bool> by_all(n, true);
  for (std::size_t a = 0; a < kBenchAlgorithms.size(); ++a) {
    stats.algorithms[a].algorithm = kBenchAlgorithms[a];
    long solved = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (records.by_algorithm[a][i].solved) {
        ++solved;
      } else {
        by_all[i] = false;
      }
    }
    stats.algorithms[a].cases_solved = solved;
  }

  long solved_by_all = 0;
  std::array<std::vector<double>, 3> iter_samples;
  for (std::size_t i = 0; i < n; ++i) {
    if (!by_all[i]) continue;
    ++solved_by_all;

    long best = records.by_algorithm[0][i].stage2_iters;
    std::size_t best_at = 0;
    int best_count = 1;
    for (std::size_t a = 1; a < kBenchAlgorithms.size(); ++a) {
      const long it = records.by_algorithm[a][i].stage2_iters;
      if (it < best) {
        best = it;
        best_at = a;
        best_count = 1;
      } else if (it == best) {
        ++best_count;
      }
    }
    if (best_count == 1) {
      ++stats.algorithms[best_at].wins;
    } else {
      ++stats.ties;
    }

    for (std::size_t a = 0; a < kBenchAlgorithms.size(); ++a) {
      iter_samples[a].push_back(
          static_cast<double>(records.by_algorithm[a][i].stage2_iters));
    }
  }

  for (std::size_t a = 0; a < kBenchAlgorithms.size(); ++a) {
    AlgorithmStats& row = stats.algorithms[a];
    row.solved_by_all = solved_by_all;
    if (solved_by_all == 0) continue;
    std::vector<double>& samples = iter_samples[a];
    std::sort(samples.begin(), samples.end());
    double sum = 0.0;
    for (double v : samples) sum += v;
    row.mean = sum / static_cast<double>(samples.size());
    row.Q1 = quantile(samples, 0.25);
    row.median = quantile(samples, 0.5);
    row.Q3 = quantile(samples, 0.75);
  }
  return stats;
}

BenchStats run_bench(const ProblemSpec& spec, int n_starts,
                     std::uint64_t base_seed, const SolveConfig& base,
                     int threads) {
  return summarize(run_instances(spec, n_starts, base_seed, base, threads));
}

}  // namespace wavefeas
