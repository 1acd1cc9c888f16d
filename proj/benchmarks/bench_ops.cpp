#include <benchmark/benchmark.h>

#include "wavefeas/constraints.hpp"
#include "wavefeas/solvers.hpp"
#include "wavefeas/wavelet.hpp"

using namespace wavefeas;

namespace {

ProblemSpec spec_for(int kind) {
  ProblemSpec spec;
  if (kind == 1) {
    spec.kind = ProblemKind::kCardinal;
    spec.P = 1;
  }
  return spec;
}

ProductPoint start_point(int m) {
  return diagonal_point(random_ensemble(m, 7));
}

void BM_ProjectProduct(benchmark::State& state) {
  const ProblemProjections ops(spec_for(static_cast<int>(state.range(0))));
  const ProductPoint x = start_point(6);
  for (auto _ : state) benchmark::DoNotOptimize(ops.project_product(x));
}
BENCHMARK(BM_ProjectProduct)->Arg(0)->Arg(1);

void BM_ProjectDiagonal(benchmark::State& state) {
  const ProductPoint x = start_point(6);
  for (auto _ : state) benchmark::DoNotOptimize(project_diagonal(x));
}
BENCHMARK(BM_ProjectDiagonal);

void BM_SplittingStep(benchmark::State& state) {
  const ProblemProjections ops(spec_for(0));
  auto pv = [&](const ProductPoint& p) { return ops.project_product(p); };
  auto pw = [](const ProductPoint& p) { return project_diagonal(p); };
  ProductPoint x = start_point(6);
  for (auto _ : state) {
    x = dr_step(x, pv, pw);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_SplittingStep);

void BM_CenteringStep(benchmark::State& state) {
  const ProblemProjections ops(spec_for(0));
  auto pv = [&](const ProductPoint& p) { return ops.project_product(p); };
  auto pw = [](const ProductPoint& p) { return project_diagonal(p); };
  ProductPoint x = start_point(6);
  for (auto _ : state) {
    x = gcrm_step(x, pv, pw);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_CenteringStep);

void BM_SubproblemFreeStep(benchmark::State& state) {
  const ProblemProjections ops(spec_for(0));
  auto pv = [&](const ProductPoint& p) { return ops.project_product(p); };
  auto pw = [](const ProductPoint& p) { return project_diagonal(p); };
  ProductPoint x = start_point(6);
  for (auto _ : state) {
    x = lt_step(x, pv, pw);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_SubproblemFreeStep);

void BM_Gap(benchmark::State& state) {
  const ProblemProjections ops(spec_for(0));
  auto pv = [&](const ProductPoint& p) { return ops.project_product(p); };
  auto pw = [](const ProductPoint& p) { return project_diagonal(p); };
  const ProductPoint x = start_point(6);
  for (auto _ : state) benchmark::DoNotOptimize(gap(x, pv, pw));
}
BENCHMARK(BM_Gap);

void BM_TwoStageSolve(benchmark::State& state) {
  SolveConfig cfg;
  cfg.spec = spec_for(1);
  cfg.seed = 1;
  cfg.algorithm = Algorithm::kLT;
  for (auto _ : state) benchmark::DoNotOptimize(two_stage_solve(cfg));
}
BENCHMARK(BM_TwoStageSolve)->Unit(benchmark::kMillisecond);

void BM_Cascade(benchmark::State& state) {
  FilterPair f;
  f.h = {0.25, 0.5, 0.25};
  f.g = {0.5, -0.5, 0.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(cascade(f, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Cascade)->Arg(8)->Arg(10)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
