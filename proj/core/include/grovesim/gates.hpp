#pragma once

#include <array>
#include <cstddef>
#include <string_view>

#include "grovesim/matrix.hpp"

namespace grovesim {

enum class GateType { H, X, Z, T, Tdag, U1, Rz };

/// A primitive single-qubit gate, optionally parameterized by an angle in
/// radians (U1 and Rz only). Controls are attached by the caller.
struct GateKind {
  GateType type = GateType::H;
  double theta = 0.0;

  static GateKind h() { return {GateType::H}; }
  static GateKind x() { return {GateType::X}; }
  static GateKind z() { return {GateType::Z}; }
  static GateKind t() { return {GateType::T}; }
  static GateKind tdag() { return {GateType::Tdag}; }
  /// Throws ParameterError on a non-finite angle.
  static GateKind u1(double theta);
  static GateKind rz(double theta);

  bool parameterized() const noexcept { return type == GateType::U1 || type == GateType::Rz; }
  bool diagonal() const noexcept { return type != GateType::H && type != GateType::X; }

  bool operator==(const GateKind&) const = default;
};

/// Row-major 2x2: {m00, m01, m10, m11}.
using GateMatrix = std::array<Complex, 4>;

/// Standard matrix for the gate:
///   H = [[1,1],[1,-1]]/sqrt2, X = [[0,1],[1,0]], Z = diag(1,-1),
///   T = diag(1, e^{i pi/4}), Tdag = diag(1, e^{-i pi/4}),
///   U1(t) = diag(1, e^{it}), Rz(t) = diag(e^{-it/2}, e^{it/2}).
/// Throws ParameterError if the angle is not finite.
GateMatrix gate_matrix(const GateKind& kind);

/// Gate whose matrix is the adjoint of `kind`'s.
GateKind inverse(const GateKind& kind);

/// Lower-case OpenQASM-style mnemonic ("h", "x", "tdg", "u1", ...).
std::string_view gate_name(GateType type);

GateMatrix multiply(const GateMatrix& a, const GateMatrix& b);
GateMatrix adjoint(const GateMatrix& m);
double max_abs_diff(const GateMatrix& a, const GateMatrix& b);
bool is_unitary(const GateMatrix& m, double tol = 1e-12);

/// Dense matrix of the gate with `num_controls` controls. Qubits 0..c-1 are
/// controls and qubit c is the target; qubit 0 is the least-significant bit
/// of the basis index.
ComplexMatrix controlled_matrix(const GateKind& kind, std::size_t num_controls);

}  // namespace grovesim
