#include "grovesim/grover.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <vector>

#include "grovesim/analytic.hpp"
#include "grovesim/errors.hpp"

namespace grovesim {
namespace {

std::vector<GateOp> layer(GateKind kind, std::size_t n) {
  std::vector<GateOp> ops;
  ops.reserve(n);
  for (Qubit q = 0; q < n; ++q) ops.push_back(GateOp::single(kind, q));
  return ops;
}

std::vector<GateOp> x_where(const Pattern& pattern, bool value) {
  std::vector<GateOp> ops;
  for (Qubit q = 0; q < pattern.size(); ++q)
    if (pattern.bit(q) == value) ops.push_back(GateOp::single(GateKind::x(), q));
  return ops;
}

void append_layers(std::vector<GateOp>& dst, const std::vector<GateOp>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

}  // namespace

Pattern Pattern::parse(std::string_view bits) {
  if (bits.empty()) throw ParameterError("pattern must not be empty");
  if (bits.size() > StateVector::kMaxQubits)
    throw ParameterError("pattern longer than " + std::to_string(StateVector::kMaxQubits) +
                         " bits");
  for (char c : bits)
    if (c != '0' && c != '1') throw ParameterError("pattern must contain only 0 and 1");
  return Pattern(std::string(bits));
}

Pattern Pattern::all_ones(std::size_t n) { return parse(std::string(n, '1')); }

std::string_view style_name(OracleStyle style) {
  return style == OracleStyle::CnZ ? "cnz" : "v";
}

std::size_t ancilla_count(std::size_t n, OracleStyle style) {
  return style == OracleStyle::VOracle && n > 2 ? n - 2 : 0;
}

Circuit build_cnz(std::size_t n) {
  if (n < 2 || n > kMaxCnzQubits)
    throw ParameterError("build_cnz needs 2 <= n <= " + std::to_string(kMaxCnzQubits));
  // x_1 ... x_m = 2^{1-m} * sum over non-empty S of (-1)^{|S|-1} parity(S),
  // so the target picks up exp(i*theta_S) per subset whose parity is odd.
  const std::size_t controls = n - 1;
  const Qubit target = n - 1;
  const double base = std::numbers::pi / std::ldexp(1.0, static_cast<int>(controls) - 1);
  Circuit c(n);
  for (std::size_t subset = 1; subset < (std::size_t{1} << controls); ++subset) {
    const auto pivot = static_cast<Qubit>(std::bit_width(subset) - 1);
    std::vector<GateOp> fold;
    for (Qubit q = 0; q < pivot; ++q)
      if ((subset >> q) & 1U) fold.push_back(GateOp::controlled(GateKind::x(), {q}, pivot));
    const double sign = (std::popcount(subset) % 2 == 1) ? 1.0 : -1.0;
    for (const auto& op : fold) c.append(op);
    c.append(GateOp::controlled(GateKind::u1(sign * base), {pivot}, target));
    for (auto it = fold.rbegin(); it != fold.rend(); ++it) c.append(*it);
  }
  return c;
}

Circuit build_v_oracle(std::size_t n) {
  if (n < 2) throw ParameterError("build_v_oracle needs n >= 2");
  if (n == 2) return Circuit(2).append(GateOp::cz(0, 1));

  const std::size_t ancillas = n - 2;
  auto ancilla = [n](std::size_t k) { return static_cast<Qubit>(n + k); };
  std::vector<GateOp> ladder;
  ladder.push_back(GateOp::toffoli(0, 1, ancilla(0)));
  for (std::size_t k = 1; k + 2 < n; ++k)
    ladder.push_back(GateOp::toffoli(k + 1, ancilla(k - 1), ancilla(k)));

  Circuit c(n, ancillas);
  for (const auto& op : ladder) c.append(op);
  c.append(GateOp::cz(ancilla(ancillas - 1), n - 1));
  for (auto it = ladder.rbegin(); it != ladder.rend(); ++it) c.append(*it);
  return c;
}

Circuit all_ones_oracle(std::size_t n, OracleStyle style) {
  if (n == 1) return Circuit(1).append(GateOp::single(GateKind::z(), 0));
  return style == OracleStyle::CnZ ? build_cnz(n) : build_v_oracle(n);
}

Circuit mark_pattern(const Circuit& core, const Pattern& pattern) {
  if (core.search_qubits() != pattern.size())
    throw ParameterError("pattern length " + std::to_string(pattern.size()) +
                         " does not match oracle width " + std::to_string(core.search_qubits()));
  const auto flips = x_where(pattern, false);
  Circuit c(core.search_qubits(), core.ancilla_qubits());
  if (!flips.empty()) c.append_group("mark", flips);
  c.append_group("oracle", core);
  if (!flips.empty()) c.append_group("mark", flips);
  return c;
}

Circuit build_diffusion(std::size_t n, OracleStyle style) {
  if (n == 0) throw ParameterError("diffusion needs at least one qubit");
  const Circuit core = all_ones_oracle(n, style);
  std::vector<GateOp> in = layer(GateKind::h(), n);
  append_layers(in, layer(GateKind::x(), n));
  std::vector<GateOp> out = layer(GateKind::x(), n);
  append_layers(out, layer(GateKind::h(), n));

  Circuit c(n, core.ancilla_qubits());
  c.append_group("diffusion", in);
  c.append_group("oracle", core);
  c.append_group("diffusion", out);
  return c;
}

Circuit build_grover(const Pattern& pattern, std::size_t rotations, OracleStyle style) {
  if (rotations == 0) throw ParameterError("rotations must be at least 1");
  const std::size_t n = pattern.size();
  const Circuit oracle = mark_pattern(all_ones_oracle(n, style), pattern);
  const Circuit diffusion = build_diffusion(n, style);

  Circuit c(n, ancilla_count(n, style));
  c.append_group("init", layer(GateKind::h(), n));
  for (std::size_t r = 0; r < rotations; ++r) {
    c.barrier("rotation " + std::to_string(r + 1));
    c.append_circuit(oracle);
    c.append_circuit(diffusion);
  }
  return c;
}

std::size_t bqp_rotations(std::size_t n) {
  if (n == 0 || n > analytic::kMaxQubits) throw ParameterError("bqp_rotations needs n >= 1");
  return static_cast<std::size_t>(
      std::ceil(0.8165 * std::sqrt(std::ldexp(1.0, static_cast<int>(n)))));
}

std::size_t optimal_rotations(std::size_t n) {
  const std::size_t limit = bqp_rotations(n) + 2;
  const auto table = analytic::probability_table(n, limit);
  std::size_t best = 1;
  double best_p = table.front().probability;
  for (const auto& row : table) {
    if (row.probability > best_p + 1e-12) {
      best = row.k;
      best_p = row.probability;
    }
  }
  return best;
}

Circuit build_phase_check(const Pattern& pattern, OracleStyle style) {
  return build_phase_check(pattern, mark_pattern(all_ones_oracle(pattern.size(), style), pattern));
}

Circuit build_phase_check(const Pattern& pattern, const Circuit& oracle) {
  const std::size_t n = pattern.size();
  if (oracle.search_qubits() != n)
    throw ParameterError("oracle width does not match the pattern");
  Circuit c(n, oracle.ancilla_qubits());
  c.append_group("init", layer(GateKind::h(), n));
  c.barrier("oracle");
  c.append_circuit(oracle);
  c.barrier("hadamard");
  c.append_group("hadamard", layer(GateKind::h(), n));
  c.barrier("pattern");
  const auto flips = x_where(pattern, true);
  if (!flips.empty()) c.append_group("pattern", flips);
  return c;
}

PhaseVerdict judge_phase_check(const std::map<std::string, double>& distribution,
                               const Pattern& pattern) {
  PhaseVerdict v;
  for (const auto& [label, p] : distribution) {
    if (p > v.modal_probability) {
      v.runner_up_probability = v.modal_probability;
      v.modal_probability = p;
      v.modal = label;
    } else if (p > v.runner_up_probability) {
      v.runner_up_probability = p;
    }
  }
  constexpr double kPopulated = 1e-12;
  v.detected = v.modal == pattern.str() &&
               v.modal_probability >= kTowerFactor * v.runner_up_probability &&
               v.runner_up_probability > kPopulated;
  return v;
}

}  // namespace grovesim
