#include <benchmark/benchmark.h>

#include <filesystem>
#include <string>

#include "glassnet/attractor.hpp"
#include "glassnet/dynamics.hpp"
#include "glassnet/io.hpp"

using namespace glassnet;

namespace {

GlassNetwork load(const std::string& name) {
  return load_network(std::filesystem::path(GLASSNET_FIXTURE_DIR) / (name + ".json"));
}

void BM_SimulateNetC(benchmark::State& state) {
  const auto net = load("net_c");
  SimulationLimits limits;
  limits.max_events = static_cast<std::size_t>(state.range(0));
  Vector x0(2);
  x0 << -0.5, -0.5;
  for (auto _ : state) benchmark::DoNotOptimize(simulate(net, x0, limits));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateNetC)->Arg(100)->Arg(10000);

void BM_FindAttractors(benchmark::State& state, const char* name) {
  const auto net = load(name);
  for (auto _ : state) benchmark::DoNotOptimize(find_cyclic_attractors(net));
}
BENCHMARK_CAPTURE(BM_FindAttractors, net_b, "net_b");
BENCHMARK_CAPTURE(BM_FindAttractors, net_c, "net_c");
BENCHMARK_CAPTURE(BM_FindAttractors, net_d, "net_d");
BENCHMARK_CAPTURE(BM_FindAttractors, net_f, "net_f");

void BM_Classify(benchmark::State& state, const char* name) {
  const auto net = load(name);
  const CycleSpec cycle = find_cyclic_attractors(net).front();
  for (auto _ : state) benchmark::DoNotOptimize(classify(net, cycle));
}
BENCHMARK_CAPTURE(BM_Classify, net_a, "net_a");
BENCHMARK_CAPTURE(BM_Classify, net_b, "net_b");
BENCHMARK_CAPTURE(BM_Classify, net_c, "net_c");
BENCHMARK_CAPTURE(BM_Classify, net_d, "net_d");
BENCHMARK_CAPTURE(BM_Classify, net_f, "net_f");

void BM_ComposeExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Rational> focal(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) focal[static_cast<std::size_t>(i)] = Rational(i % 2 ? -(i + 1) : i + 2, 3);
  for (auto _ : state) {
    ExactFractionalMap map(n);
    for (int k = 0; k < 2 * n; ++k) map = compose(ExactFractionalMap::wall_map(focal, k % n), map);
    benchmark::DoNotOptimize(map);
  }
}
BENCHMARK(BM_ComposeExact)->Arg(2)->Arg(4)->Arg(8);

void BM_PowerIteration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Matrix A = Matrix::Constant(n, n, 1.0) + Matrix::Identity(n, n) * 2.0;
  A(0, n - 1) = 5.0;
  const auto cone = ConeSection::positive_orthant(n);
  for (auto _ : state) benchmark::DoNotOptimize(dominant_eigenpair(A, cone));
}
BENCHMARK(BM_PowerIteration)->Arg(3)->Arg(10)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
