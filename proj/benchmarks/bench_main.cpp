#include <benchmark/benchmark.h>

#include "badseq/construct.hpp"
#include "badseq/ramsey.hpp"
#include "badseq/search.hpp"
#include "badseq/verify.hpp"

using namespace badseq;

namespace {

BuildLimits grid_limits() {
  BuildLimits limits;
  limits.cap = 5000;
  return limits;
}

void BM_SeqMaclagan_3_2(benchmark::State& state) {
  const OrdinalCnf alpha = parse_ordinal("3");
  for (auto _ : state) {
    benchmark::DoNotOptimize(seq_maclagan(alpha, 2, 0, grid_limits()));
  }
}
BENCHMARK(BM_SeqMaclagan_3_2);

void BM_VerifyBad_Maclagan_3_2(benchmark::State& state) {
  const IdealSequence s = seq_maclagan(parse_ordinal("3"), 2, 0, grid_limits());
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_bad(s));
  }
}
BENCHMARK(BM_VerifyBad_Maclagan_3_2);

void BM_VerifyBad_Exp8(benchmark::State& state) {
  const IdealSequence s = seq_exp(8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_bad(s));
  }
}
BENCHMARK(BM_VerifyBad_Exp8);

void BM_ReduceToColoring_Exp8(benchmark::State& state) {
  const IdealSequence s = seq_exp(8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduce_to_coloring(s));
  }
}
BENCHMARK(BM_ReduceToColoring_Exp8);

void BM_FindAdjacentMonotone_Maclagan_3_2(benchmark::State& state) {
  const Coloring c = reduce_to_coloring(seq_maclagan(parse_ordinal("3"), 2, 0, grid_limits()));
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_adjacent_monotone(c));
  }
}
BENCHMARK(BM_FindAdjacentMonotone_Maclagan_3_2);

void BM_SearchOracle_l1(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_bad_length(0, 1, ParamFn::constant(0)));
  }
}
BENCHMARK(BM_SearchOracle_l1);

void BM_RamseyNumber_r1(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(adjacent_ramsey_number(0, 1, 5));
  }
}
BENCHMARK(BM_RamseyNumber_r1);

void BM_Fgh_Omega2(benchmark::State& state) {
  const OrdinalCnf alpha = parse_ordinal("w^2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(fgh(alpha, 3, Nat(1) << 64));
  }
}
BENCHMARK(BM_Fgh_Omega2);

}  // namespace

BENCHMARK_MAIN();
