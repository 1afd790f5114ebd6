#include <benchmark/benchmark.h>

#include "symlog/gen.hpp"
#include "symlog/rootlog.hpp"
#include "symlog/specfact.hpp"

namespace {

using namespace symlog;

constexpr SymmetryClass kClasses[] = {SymmetryClass::GenericA, SymmetryClass::SymmetricAI,
                                      SymmetryClass::ChiralAIII};

// Arguments: class index, n, -log10(gap).
struct Input {
  SymmetryClass cls;
  CMatrix u;
  SymmetryContext ctx;
};

Input make_input(const benchmark::State& state) {
  const SymmetryClass cls = kClasses[state.range(0)];
  const Eigen::Index n = state.range(1);
  const double gap = std::pow(10.0, -static_cast<double>(state.range(2)));
  return {cls, random_gapped_unitary(cls, n, GapSpec{gap, 4}, 1, true), SymmetryContext(n)};
}

void label(benchmark::State& state, const Input& in) {
  state.SetLabel(std::string(to_string(in.cls)) + " gap=1e-" + std::to_string(state.range(2)));
}

void BM_Sqrt(benchmark::State& state) {
  const Input in = make_input(state);
  for (auto _ : state) benchmark::DoNotOptimize(sqrt_structured(in.u, in.cls, in.ctx));
  label(state, in);
}

void BM_Log(benchmark::State& state) {
  const Input in = make_input(state);
  for (auto _ : state) benchmark::DoNotOptimize(log_structured(in.u, in.cls, in.ctx));
  label(state, in);
}

void BM_Diag(benchmark::State& state) {
  const Input in = make_input(state);
  for (auto _ : state) benchmark::DoNotOptimize(diag_structured(in.u, in.cls, in.ctx));
  label(state, in);
}

void grid(benchmark::internal::Benchmark* b) {
  for (int cls = 0; cls < 3; ++cls)
    for (int n : {50, 100, 200})
      for (int gap : {2, 15}) b->Args({cls, n, gap});
  b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_Sqrt)->Apply(grid);
BENCHMARK(BM_Log)->Apply(grid);
BENCHMARK(BM_Diag)->Apply(grid);

BENCHMARK_MAIN();
