#include <benchmark/benchmark.h>

#include <singmon/catalog.hpp>
#include <singmon/cyclotomic.hpp>
#include <singmon/mckay.hpp>
#include <singmon/monodromy.hpp>
#include <singmon/seifert.hpp>

using namespace singmon;

namespace {

void BM_CharpolyNewton(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(charpoly_hypersurface(6, 10, 15, 30));
}
BENCHMARK(BM_CharpolyNewton);

void BM_CharpolyOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(charpoly_oracle(6, 10, 15, 30));
}
BENCHMARK(BM_CharpolyOracle);

void BM_CharpolyOracleLarge(benchmark::State& state) {
  // The heaviest Brieskorn triple the acceptance corpus can draw.
  const WeightSystem ws = brieskorn_weights(7, 8, 9);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        charpoly_oracle(ws.weights[0], ws.weights[1], ws.weights[2], ws.degrees[0]));
}
BENCHMARK(BM_CharpolyOracleLarge);

void BM_DualityCheck(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(theorem_hypersurface_verify(6, 10, 15, 30));
}
BENCHMARK(BM_DualityCheck);

void BM_AffineDeterminant(benchmark::State& state) {
  const RootSystem e8 = root_system("E8");
  for (auto _ : state) benchmark::DoNotOptimize(recursion_determinant(e8));
}
BENCHMARK(BM_AffineDeterminant);

void BM_AffineCoxeterCharpoly(benchmark::State& state) {
  const RootSystem e8 = root_system("E8");
  for (auto _ : state) benchmark::DoNotOptimize(affine_coxeter_charpoly(e8));
}
BENCHMARK(BM_AffineCoxeterCharpoly);

void BM_RepSeries(benchmark::State& state) {
  const RootSystem e8 = root_system("E8");
  for (auto _ : state)
    benchmark::DoNotOptimize(rep_multiplicities(e8, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_RepSeries)->Arg(50)->Arg(200);

void BM_ExpandSeries(benchmark::State& state) {
  const FrameShape p = poincare_series({{6, 10, 15}, {30}});
  for (auto _ : state)
    benchmark::DoNotOptimize(expand_series(p, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ExpandSeries)->Arg(50)->Arg(200);

void BM_FactorCyclotomic(benchmark::State& state) {
  const IntPoly phi = to_polynomial(parse_frame_shape("2*3*5*30/1*6*10*15"));
  for (auto _ : state) benchmark::DoNotOptimize(factor_cyclotomic(phi));
}
BENCHMARK(BM_FactorCyclotomic);

void BM_KacDims(benchmark::State& state) {
  const RootSystem e8 = root_system("E8");
  for (auto _ : state) benchmark::DoNotOptimize(kac_dims(e8));
}
BENCHMARK(BM_KacDims);

void BM_CatalogValidate(benchmark::State& state) {
  const auto entries = default_entries();
  for (auto _ : state) benchmark::DoNotOptimize(validate_all(entries));
}
BENCHMARK(BM_CatalogValidate);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
