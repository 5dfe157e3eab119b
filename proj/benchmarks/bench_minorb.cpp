#include <benchmark/benchmark.h>

#include "minorb/grading.hpp"
#include "minorb/invariants.hpp"
#include "minorb/repdim.hpp"
#include "minorb/rootsys.hpp"

#ifdef MINORB_BENCH_TABLES
#include "minorb/cli/tables.hpp"
#endif

using namespace minorb;

static void BM_RootSystemE8(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(RootSystem(SimpleType(Family::E, 8)));
}
BENCHMARK(BM_RootSystemE8);

static void BM_RootSystemD(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(RootSystem(SimpleType(Family::D, n)));
}
BENCHMARK(BM_RootSystemD)->Arg(8)->Arg(16)->Arg(24);

static void BM_DimIrrepE8Rho(benchmark::State& state) {
  const RootSystem rs(SimpleType(Family::E, 8));
  const Weight rho = weyl_vector(rs.type());
  for (auto _ : state) benchmark::DoNotOptimize(dim_irrep(rs, rho));
}
BENCHMARK(BM_DimIrrepE8Rho);

static void BM_GradeAdjointE8(benchmark::State& state) {
  const RootSystem rs(SimpleType(Family::E, 8));
  for (auto _ : state) benchmark::DoNotOptimize(grade_adjoint(rs, 7));
}
BENCHMARK(BM_GradeAdjointE8);

static void BM_BranchAdjointE8(benchmark::State& state) {
  const RootSystem rs(SimpleType(Family::E, 8));
  for (auto _ : state) benchmark::DoNotOptimize(branch_adjoint(rs, 7));
}
BENCHMARK(BM_BranchAdjointE8);

static void BM_ComputeD(benchmark::State& state) {
  const RootSystem rs(SimpleType(Family::E, 8));
  const bool prune = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(compute_d(rs, prune));
  state.SetLabel(prune ? "pruned" : "exhaustive");
}
BENCHMARK(BM_ComputeD)->Arg(1)->Arg(0);

static void BM_FullReportE8(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(full_report(SimpleType(Family::E, 8)));
}
BENCHMARK(BM_FullReportE8);

#ifdef MINORB_BENCH_TABLES
static void BM_Table5(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cli::build_table(5, 12));
}
BENCHMARK(BM_Table5)->Unit(benchmark::kMillisecond);
#endif

BENCHMARK_MAIN();
