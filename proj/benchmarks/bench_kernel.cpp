#include <benchmark/benchmark.h>

#include <vector>

#include "grovesim/statevector.hpp"

namespace {

using grovesim::GateKind;
using grovesim::Qubit;
using grovesim::StateVector;

StateVector uniform(std::size_t qubits) {
  StateVector s(qubits);
  for (Qubit q = 0; q < qubits; ++q) s.apply_gate(GateKind::h(), q);
  return s;
}

void Hadamard(benchmark::State& state) {
  const auto qubits = static_cast<std::size_t>(state.range(0));
  StateVector s = uniform(qubits);
  Qubit target = 0;
  for (auto _ : state) {
    s.apply_gate(GateKind::h(), target);
    target = (target + 1) % qubits;
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.dimension()));
}
BENCHMARK(Hadamard)->DenseRange(10, 22, 4);

void Toffoli(benchmark::State& state) {
  const auto qubits = static_cast<std::size_t>(state.range(0));
  StateVector s = uniform(qubits);
  const std::vector<Qubit> controls{0, qubits / 2};
  for (auto _ : state) {
    s.apply_gate(GateKind::x(), controls, qubits - 1);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.dimension()));
}
BENCHMARK(Toffoli)->DenseRange(10, 22, 4);

void ControlledPhase(benchmark::State& state) {
  const auto qubits = static_cast<std::size_t>(state.range(0));
  StateVector s = uniform(qubits);
  const std::vector<Qubit> controls{1};
  for (auto _ : state) {
    s.apply_gate(GateKind::u1(0.25), controls, 0);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.dimension()));
}
BENCHMARK(ControlledPhase)->DenseRange(10, 22, 4);

void Sample1024(benchmark::State& state) {
  const StateVector s = uniform(static_cast<std::size_t>(state.range(0)));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(grovesim::sample(s, 1024, ++seed));
}
BENCHMARK(Sample1024)->Arg(6)->Arg(12)->Arg(18);

}  // namespace
