#include "grovesim/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string_view>

#include "grovesim/errors.hpp"

namespace grovesim {
namespace {

constexpr double kNormDrift = 1e-8;

std::size_t resolve_measured(const StateVector& state, std::size_t measured) {
  if (measured == 0) return state.num_qubits();
  if (measured > state.num_qubits())
    throw ParameterError("measured register larger than the state");
  return measured;
}

}  // namespace

StateVector::StateVector(std::size_t num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits == 0) throw SizeError("state needs at least one qubit");
  if (num_qubits > kMaxQubits)
    throw SizeError("state of " + std::to_string(num_qubits) + " qubits exceeds the limit of " +
                    std::to_string(kMaxQubits));
  amplitudes_.assign(std::size_t{1} << num_qubits, Complex{});
  amplitudes_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
  const std::size_t dim = amplitudes.size();
  if (dim < 2 || !std::has_single_bit(dim))
    throw SizeError("amplitude count must be a power of two >= 2");
  const auto qubits = static_cast<std::size_t>(std::countr_zero(dim));
  if (qubits > kMaxQubits) throw SizeError("state exceeds the qubit limit");
  StateVector s;
  s.num_qubits_ = qubits;
  s.amplitudes_ = std::move(amplitudes);
  if (std::abs(s.norm() - 1.0) > kNormDrift) throw ParameterError("amplitudes are not normalized");
  return s;
}

namespace {

// Plain product; skips the C99 Annex G NaN recovery that std::complex carries.
inline Complex mul(const Complex& x, const Complex& y) {
  return {x.real() * y.real() - x.imag() * y.imag(), x.real() * y.imag() + x.imag() * y.real()};
}

}  // namespace

void StateVector::apply_gate(const GateKind& kind, std::span<const Qubit> controls, Qubit target) {
  if (target >= num_qubits_) throw ParameterError("target qubit out of range");
  std::size_t control_mask = 0;
  for (Qubit c : controls) {
    if (c >= num_qubits_) throw ParameterError("control qubit out of range");
    if (c == target) throw ParameterError("target qubit listed as a control");
    const std::size_t bit = std::size_t{1} << c;
    if (control_mask & bit) throw ParameterError("duplicate control qubit");
    control_mask |= bit;
  }

  const GateMatrix g = gate_matrix(kind);
  const std::size_t target_bit = std::size_t{1} << target;
  const std::size_t low_mask = target_bit - 1;
  const std::size_t pairs = amplitudes_.size() / 2;
  Complex* amp = amplitudes_.data();

  // Enumerate indices with the target bit clear by inserting a zero bit at
  // the target position into every pair counter.
  if (kind.diagonal()) {
    const Complex d0 = g[0];
    const Complex d1 = g[3];
    const bool lower_trivial = d0 == Complex{1.0, 0.0};
    for (std::size_t p = 0; p < pairs; ++p) {
      const std::size_t i0 = ((p & ~low_mask) << 1) | (p & low_mask);
      if ((i0 & control_mask) != control_mask) continue;
      if (!lower_trivial) amp[i0] = mul(amp[i0], d0);
      amp[i0 | target_bit] = mul(amp[i0 | target_bit], d1);
    }
    return;
  }
  for (std::size_t p = 0; p < pairs; ++p) {
    const std::size_t i0 = ((p & ~low_mask) << 1) | (p & low_mask);
    if ((i0 & control_mask) != control_mask) continue;
    const std::size_t i1 = i0 | target_bit;
    const Complex a0 = amp[i0];
    const Complex a1 = amp[i1];
    amp[i0] = mul(g[0], a0) + mul(g[1], a1);
    amp[i1] = mul(g[2], a0) + mul(g[3], a1);
  }
}

double StateVector::norm() const {
  double total = 0.0;
  for (const Complex& a : amplitudes_) total += std::norm(a);
  return total;
}

void StateVector::check_normalized() const {
  const double drift = std::abs(norm() - 1.0);
  if (drift > kNormDrift)
    throw InternalError("state normalization drifted by " + std::to_string(drift));
}

StateVector new_zero_state(std::size_t num_qubits) { return StateVector(num_qubits); }

std::string basis_label(std::size_t index, std::size_t width) {
  std::string out(width, '0');
  for (std::size_t q = 0; q < width; ++q)
    if ((index >> q) & 1U) out[q] = '1';
  return out;
}

std::size_t parse_basis_label(std::string_view label) {
  if (label.empty() || label.size() > 63) throw ParameterError("basis label has invalid length");
  std::size_t index = 0;
  for (std::size_t q = 0; q < label.size(); ++q) {
    if (label[q] == '1')
      index |= std::size_t{1} << q;
    else if (label[q] != '0')
      throw ParameterError("basis label must contain only 0 and 1");
  }
  return index;
}

std::vector<double> marginal_probabilities(const StateVector& state, std::size_t measured) {
  measured = resolve_measured(state, measured);
  const std::size_t mask = (std::size_t{1} << measured) - 1;
  std::vector<double> out(std::size_t{1} << measured, 0.0);
  const auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) out[i & mask] += std::norm(amps[i]);
  return out;
}

std::map<std::string, double> probabilities(const StateVector& state, std::size_t measured) {
  measured = resolve_measured(state, measured);
  const auto probs = marginal_probabilities(state, measured);
  std::map<std::string, double> out;
  for (std::size_t i = 0; i < probs.size(); ++i) out.emplace(basis_label(i, measured), probs[i]);
  return out;
}

Histogram sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed,
                 std::size_t measured) {
  if (shots == 0) throw ParameterError("shots must be at least 1");
  state.check_normalized();
  measured = resolve_measured(state, measured);
  const auto probs = marginal_probabilities(state, measured);

  std::vector<double> cdf(probs.size());
  double running = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) cdf[i] = running += probs[i];

  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> tally(probs.size(), 0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * running;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    ++tally[static_cast<std::size_t>(it - cdf.begin())];
  }

  Histogram h;
  h.shots = shots;
  h.seed = seed;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const std::string label = basis_label(i, measured);
    h.exact_probabilities.emplace(label, probs[i]);
    if (tally[i] != 0) h.counts.emplace(label, tally[i]);
  }
  return h;
}

}  // namespace grovesim
