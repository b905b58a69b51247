#include <benchmark/benchmark.h>

#include "hyps/hyps.hpp"

namespace {

void BM_EnumerateSiegel(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hyps::enumerate_siegel(g));
}
BENCHMARK(BM_EnumerateSiegel)->DenseRange(2, 10, 2)->Unit(benchmark::kMillisecond);

void BM_BuildPoset(benchmark::State& state) {
  const auto nodes = hyps::enumerate_siegel(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hyps::build_poset(nodes));
  state.counters["nodes"] = static_cast<double>(nodes.size());
}
BENCHMARK(BM_BuildPoset)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_Leq(benchmark::State& state) {
  const auto nodes = hyps::enumerate_siegel(6);
  const auto& a = nodes.front();
  const auto& b = nodes.back();
  for (auto _ : state) benchmark::DoNotOptimize(hyps::leq(a, b));
}
BENCHMARK(BM_Leq);

void BM_IsBSymmetric(benchmark::State& state) {
  using hyps::Rational;
  const int places = static_cast<int>(state.range(0));
  std::vector<std::string> names;
  std::vector<hyps::NewtonPolygon> polys;
  for (int i = 0; i < places; ++i) {
    names.push_back("u" + std::to_string(i));
    polys.push_back(hyps::normalize(hyps::RawParts{{Rational(i % 3, 5), 2}, {Rational(3, 4), 1}, {Rational(1), 2}}));
  }
  const hyps::PELSlopeDatum d(hyps::PlaceTower::degenerate(names), polys);
  for (auto _ : state) benchmark::DoNotOptimize(hyps::is_B_symmetric(d));
}
BENCHMARK(BM_IsBSymmetric)->RangeMultiplier(4)->Range(1, 64);

void BM_Decompose(benchmark::State& state) {
  using hyps::Rational;
  std::vector<hyps::NewtonPolygon> polys(8, hyps::normalize(hyps::RawParts{
                                                {Rational(0), 1}, {Rational(1, 3), 2}, {Rational(1, 2), 1}, {Rational(1), 2}}));
  std::vector<std::string> names;
  for (int i = 0; i < 8; ++i) names.push_back("u" + std::to_string(i));
  const hyps::PELSlopeDatum d(hyps::PlaceTower::degenerate(names), polys);
  for (auto _ : state) benchmark::DoNotOptimize(hyps::decompose(d));
}
BENCHMARK(BM_Decompose);

}  // namespace
BENCHMARK_MAIN();
