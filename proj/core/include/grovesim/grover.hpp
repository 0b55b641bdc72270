#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "grovesim/circuit.hpp"

namespace grovesim {

/// Marked basis state of the search register, written qubit 0 first.
class Pattern {
 public:
  /// Throws ParameterError unless `bits` is a non-empty string of 0/1 no
  /// longer than StateVector::kMaxQubits.
  static Pattern parse(std::string_view bits);
  static Pattern all_ones(std::size_t n);

  std::size_t size() const noexcept { return bits_.size(); }
  bool bit(std::size_t qubit) const { return bits_.at(qubit) == '1'; }
  const std::string& str() const noexcept { return bits_; }
  /// Basis index of the pattern under the qubit-0-is-LSB convention.
  std::size_t index() const { return parse_basis_label(bits_); }

  bool operator==(const Pattern&) const = default;

 private:
  explicit Pattern(std::string bits) : bits_(std::move(bits)) {}
  std::string bits_;
};

enum class OracleStyle { CnZ, VOracle };

std::string_view style_name(OracleStyle style);

/// Ancillas the all-ones oracle of `style` needs on n search qubits.
std::size_t ancilla_count(std::size_t n, OracleStyle style);

/// Largest n accepted by build_cnz; its gate count grows as 2^n.
inline constexpr std::size_t kMaxCnzQubits = 10;

/// Ancilla-free C^{n-1}Z on qubits 0..n-1: flips the phase of |1...1> only.
/// Built from CNOTs and controlled-U1 phases of angle +-pi/2^{n-2}, one per
/// non-empty subset of the controls (phase-polynomial expansion of the AND).
/// Throws ParameterError unless 2 <= n <= kMaxCnzQubits.
Circuit build_cnz(std::size_t n);

/// V-shaped Toffoli ladder over n search qubits and n-2 ancillas:
///   ccx(q0, q1 -> a0), ccx(q_{k+1}, a_{k-1} -> a_k) for k = 1..n-3,
///   cz(a_{n-3}, q_{n-1}), then the ladder in reverse.
/// For n == 2 this is a bare cz with no ancillas. Throws for n < 2.
Circuit build_v_oracle(std::size_t n);

/// Phase flip of |1...1> in the given style. n == 1 yields a lone Z.
Circuit all_ones_oracle(std::size_t n, OracleStyle style);

/// Wraps an all-ones oracle in X gates on every qubit whose pattern bit is 0
/// so that it flips |pattern> instead. Result groups: "mark", "oracle", "mark"
/// (mark groups are omitted when the pattern has no zero bits).
Circuit mark_pattern(const Circuit& core, const Pattern& pattern);

/// H, X layers, the all-ones oracle, X, H layers. Maps search amplitudes a_i
/// to -(2 mu - a_i): inversion about the mean with global sign -1.
/// Groups: "diffusion", "oracle", "diffusion".
Circuit build_diffusion(std::size_t n, OracleStyle style);

/// H layer ("init"), then `rotations` x [marked oracle ; diffusion]. Ancillas
/// are allocated once and shared by every oracle instance.
Circuit build_grover(const Pattern& pattern, std::size_t rotations, OracleStyle style);

/// ceil(0.8165 * sqrt(2^n)): rotations after which the marked probability is
/// at least 2/3 under the one-over-root-N growth argument.
std::size_t bqp_rotations(std::size_t n);

/// k in [1, bqp_rotations(n) + 2] maximizing the analytic marked probability;
/// ties go to the smaller k.
std::size_t optimal_rotations(std::size_t n);

/// Phase-detection circuit: H layer, marked oracle, H layer, then X on every
/// qubit whose pattern bit is 1.
Circuit build_phase_check(const Pattern& pattern, OracleStyle style);

/// Same, with a caller-supplied oracle (for example an empty circuit to model
/// a missing phase flip). `oracle` must have pattern.size() search qubits.
Circuit build_phase_check(const Pattern& pattern, const Circuit& oracle);

struct PhaseVerdict {
  bool detected = false;
  std::string modal;
  double modal_probability = 0.0;
  double runner_up_probability = 0.0;
};

/// Tower factor: the modal outcome must be at least this many times more
/// likely than any other outcome.
inline constexpr double kTowerFactor = 2.0;

/// Reads a phase-check distribution. A flip is detected when the modal
/// outcome is the pattern, it towers over every other outcome by
/// kTowerFactor, and the other outcomes are populated. A point mass means no
/// amplitude was moved, i.e. no phase flip happened.
PhaseVerdict judge_phase_check(const std::map<std::string, double>& distribution,
                               const Pattern& pattern);

}  // namespace grovesim
