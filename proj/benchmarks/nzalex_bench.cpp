#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "nzalex/nzalex.hpp"

namespace {

using namespace nzalex;

Context load(const std::string& name) {
  std::ifstream in(std::string(NZALEX_FIXTURE_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return Context::build(parse_triangulation(ss.str()));
}

void BM_ContextBuild(benchmark::State& state) {
  std::ifstream in(std::string(NZALEX_FIXTURE_DIR) + "/k8_2.tri");
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  for (auto _ : state) benchmark::DoNotOptimize(Context::build(parse_triangulation(text)));
}
BENCHMARK(BM_ContextBuild);

void BM_TwistedMatrices(benchmark::State& state) {
  const Context ctx = load("k8_2.tri");
  for (auto _ : state) benchmark::DoNotOptimize(twisted_matrices(ctx));
}
BENCHMARK(BM_TwistedMatrices);

void BM_DetB(benchmark::State& state) {
  const Context ctx = load("k8_2.tri");
  const ZMatrix b = specialize(twisted_matrices(ctx).b, compute_alpha(ctx));
  for (auto _ : state) benchmark::DoNotOptimize(det(b));
}
BENCHMARK(BM_DetB);

void BM_AlexanderPipeline(benchmark::State& state) {
  const Context ctx = load("k8_2.tri");
  const AlphaMap alpha = compute_alpha(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(alexander_polynomial(ctx, alpha));
}
BENCHMARK(BM_AlexanderPipeline);

void BM_TwistedAlexanderFig8(benchmark::State& state) {
  const Context ctx = load("fig8.tri");
  const AlphaMap alpha = compute_alpha(ctx, 1);
  const Representation rho = fig8_geometric_rep(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(twisted_alexander(ctx, alpha, rho));
}
BENCHMARK(BM_TwistedAlexanderFig8);

void BM_FkEstimate(benchmark::State& state) {
  const Context ctx = load("fig8.tri");
  const AlphaMap alpha = compute_alpha(ctx, 1);
  const RealGroupRingMatrix b = twist(twisted_matrices(ctx).b, alpha, 2.0);
  const FiniteQuotient q = cyclic_quotient(alpha, ctx.presentation, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fk_estimate(b, q));
}
BENCHMARK(BM_FkEstimate)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
