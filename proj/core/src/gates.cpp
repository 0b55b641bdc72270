#include "grovesim/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "grovesim/errors.hpp"

namespace grovesim {
namespace {

void require_finite(double theta) {
  if (!std::isfinite(theta)) throw ParameterError("gate angle must be finite");
}

Complex phase(double theta) { return std::polar(1.0, theta); }

}  // namespace

GateKind GateKind::u1(double theta) {
  require_finite(theta);
  return {GateType::U1, theta};
}

GateKind GateKind::rz(double theta) {
  require_finite(theta);
  return {GateType::Rz, theta};
}

GateMatrix gate_matrix(const GateKind& kind) {
  using std::numbers::pi;
  const double s = std::numbers::sqrt2 / 2.0;
  switch (kind.type) {
    case GateType::H:
      return {s, s, s, -s};
    case GateType::X:
      return {0.0, 1.0, 1.0, 0.0};
    case GateType::Z:
      return {1.0, 0.0, 0.0, -1.0};
    case GateType::T:
      return {1.0, 0.0, 0.0, phase(pi / 4)};
    case GateType::Tdag:
      return {1.0, 0.0, 0.0, phase(-pi / 4)};
    case GateType::U1:
      require_finite(kind.theta);
      return {1.0, 0.0, 0.0, phase(kind.theta)};
    case GateType::Rz:
      require_finite(kind.theta);
      return {phase(-kind.theta / 2), 0.0, 0.0, phase(kind.theta / 2)};
  }
  throw ParameterError("unknown gate type");
}

GateKind inverse(const GateKind& kind) {
  switch (kind.type) {
    case GateType::T:
      return GateKind::tdag();
    case GateType::Tdag:
      return GateKind::t();
    case GateType::U1:
      return GateKind::u1(-kind.theta);
    case GateType::Rz:
      return GateKind::rz(-kind.theta);
    default:
      return kind;
  }
}

std::string_view gate_name(GateType type) {
  switch (type) {
    case GateType::H: return "h";
    case GateType::X: return "x";
    case GateType::Z: return "z";
    case GateType::T: return "t";
    case GateType::Tdag: return "tdg";
    case GateType::U1: return "u1";
    case GateType::Rz: return "rz";
  }
  return "?";
}

GateMatrix multiply(const GateMatrix& a, const GateMatrix& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

GateMatrix adjoint(const GateMatrix& m) {
  return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

double max_abs_diff(const GateMatrix& a, const GateMatrix& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

bool is_unitary(const GateMatrix& m, double tol) {
  return max_abs_diff(multiply(adjoint(m), m), {1.0, 0.0, 0.0, 1.0}) <= tol;
}

ComplexMatrix controlled_matrix(const GateKind& kind, std::size_t num_controls) {
  if (num_controls > 8) throw SizeError("too many controls for a dense matrix");
  const GateMatrix g = gate_matrix(kind);
  const std::size_t dim = std::size_t{1} << (num_controls + 1);
  const std::size_t control_mask = (std::size_t{1} << num_controls) - 1;
  const std::size_t target_bit = std::size_t{1} << num_controls;
  ComplexMatrix m = ComplexMatrix::identity(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & control_mask) != control_mask || (i & target_bit)) continue;
    const std::size_t j = i | target_bit;
    m(i, i) = g[0];
    m(i, j) = g[1];
    m(j, i) = g[2];
    m(j, j) = g[3];
  }
  return m;
}

}  // namespace grovesim
