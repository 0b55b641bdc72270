#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "grovesim/gates.hpp"

namespace grovesim {

using Qubit = std::size_t;

/// Dense pure state over `num_qubits` qubits.
///
/// Qubit 0 is the least-significant bit of the amplitude index. Text labels
/// for basis states put qubit 0 first (leftmost), so index 0b00110 on five
/// qubits renders as "01100"; basis_label() is the single conversion point.
class StateVector {
 public:
  /// Largest register accepted: 2^26 amplitudes, 1 GiB of complex doubles.
  static constexpr std::size_t kMaxQubits = 26;

  /// |0...0> on `num_qubits` qubits. Throws SizeError for 0 or > kMaxQubits.
  explicit StateVector(std::size_t num_qubits);

  /// Adopts explicit amplitudes. Length must be a power of two >= 2 and the
  /// vector normalized within 1e-8.
  static StateVector from_amplitudes(std::vector<Complex> amplitudes);

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Complex& operator[](std::size_t index) const { return amplitudes_[index]; }

  /// Applies `kind` to `target` on every basis state whose `controls` bits are
  /// all 1. X with two controls is a Toffoli; Z with one or more is c^kZ.
  /// Throws ParameterError on out-of-range, duplicate, or overlapping indices.
  void apply_gate(const GateKind& kind, std::span<const Qubit> controls, Qubit target);
  void apply_gate(const GateKind& kind, Qubit target) { apply_gate(kind, {}, target); }

  /// Sum of |amplitude|^2.
  double norm() const;

  /// Throws InternalError when |norm - 1| exceeds 1e-8.
  void check_normalized() const;

 private:
  StateVector() = default;

  std::size_t num_qubits_ = 0;
  std::vector<Complex> amplitudes_;
};

/// Same as StateVector(num_qubits).
StateVector new_zero_state(std::size_t num_qubits);

/// Renders the basis index as a bit string of `width` characters, qubit 0 first.
std::string basis_label(std::size_t index, std::size_t width);

/// Inverse of basis_label. Throws ParameterError on characters other than 0/1.
std::size_t parse_basis_label(std::string_view label);

/// Outcome distribution over the first `measured` qubits (the remaining
/// qubits are traced out). `measured` == 0 means all qubits. Indexed by the
/// marginal basis index.
std::vector<double> marginal_probabilities(const StateVector& state, std::size_t measured = 0);

/// Every basis label of the measured register mapped to its probability.
std::map<std::string, double> probabilities(const StateVector& state, std::size_t measured = 0);

struct Histogram {
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  /// Outcomes that were drawn at least once.
  std::map<std::string, std::uint64_t> counts;
  /// Exact probability of every outcome of the measured register.
  std::map<std::string, double> exact_probabilities;
};

/// Draws `shots` outcomes of the first `measured` qubits by inverse-CDF
/// lookup. Randomness comes from std::mt19937_64 seeded with `seed`; each
/// draw takes one 64-bit output and keeps its top 53 bits as a uniform
/// double in [0, 1). Deterministic in (state, shots, seed, measured).
/// Throws ParameterError when shots == 0.
Histogram sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed,
                 std::size_t measured = 0);

}  // namespace grovesim
