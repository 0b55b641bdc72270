#include <benchmark/benchmark.h>

#include "grovesim/analytic.hpp"
#include "grovesim/grover.hpp"

namespace {

using namespace grovesim;

// Full search at the optimal rotation count; V-oracle registers are 2n-2 wide.
void GroverVOracle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Pattern p = Pattern::all_ones(n);
  const Circuit c = build_grover(p, optimal_rotations(n), OracleStyle::VOracle);
  for (auto _ : state) benchmark::DoNotOptimize(run(c));
  state.counters["ops"] = static_cast<double>(c.size());
  state.counters["qubits"] = static_cast<double>(c.total_qubits());
}
BENCHMARK(GroverVOracle)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void GroverCnz(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Pattern p = Pattern::all_ones(n);
  const Circuit c = build_grover(p, optimal_rotations(n), OracleStyle::CnZ);
  for (auto _ : state) benchmark::DoNotOptimize(run(c));
  state.counters["ops"] = static_cast<double>(c.size());
  state.counters["qubits"] = static_cast<double>(c.total_qubits());
}
BENCHMARK(GroverCnz)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BuildGrover(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Pattern p = Pattern::all_ones(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(build_grover(p, optimal_rotations(n), OracleStyle::VOracle));
}
BENCHMARK(BuildGrover)->Arg(6)->Arg(12);

void AnalyticTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(analytic::probability_table(6, 6));
}
BENCHMARK(AnalyticTable);

}  // namespace
