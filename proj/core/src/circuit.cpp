#include "grovesim/circuit.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "grovesim/errors.hpp"

namespace grovesim {

Circuit::Circuit(std::size_t search_qubits, std::size_t ancilla_qubits)
    : search_qubits_(search_qubits), ancilla_qubits_(ancilla_qubits) {
  if (search_qubits == 0) throw ParameterError("circuit needs at least one search qubit");
}

void Circuit::validate(const GateOp& op) const {
  const std::size_t total = total_qubits();
  if (op.target >= total) throw ParameterError("op target out of range");
  for (std::size_t i = 0; i < op.controls.size(); ++i) {
    const Qubit c = op.controls[i];
    if (c >= total) throw ParameterError("op control out of range");
    if (c == op.target) throw ParameterError("op target listed as a control");
    for (std::size_t j = 0; j < i; ++j)
      if (op.controls[j] == c) throw ParameterError("duplicate control qubit");
  }
  if (op.kind.parameterized()) (void)gate_matrix(op.kind);
}

Circuit& Circuit::append(GateOp op) {
  validate(op);
  ops_.push_back(std::move(op));
  return *this;
}

Circuit& Circuit::append_group(std::string name, std::span<const GateOp> ops) {
  for (const GateOp& op : ops) validate(op);
  const std::size_t begin = ops_.size();
  ops_.insert(ops_.end(), ops.begin(), ops.end());
  groups_.push_back({std::move(name), begin, ops_.size()});
  return *this;
}

Circuit& Circuit::append_group(std::string name, const Circuit& sub) {
  if (sub.search_qubits_ != search_qubits_ || sub.ancilla_qubits_ > ancilla_qubits_)
    throw ParameterError("subcircuit registers do not fit the circuit");
  return append_group(std::move(name), std::span<const GateOp>(sub.ops_));
}

Circuit& Circuit::append_circuit(const Circuit& sub) {
  if (sub.search_qubits_ != search_qubits_ || sub.ancilla_qubits_ > ancilla_qubits_)
    throw ParameterError("subcircuit registers do not fit the circuit");
  const std::size_t offset = ops_.size();
  ops_.insert(ops_.end(), sub.ops_.begin(), sub.ops_.end());
  for (const GateGroup& g : sub.groups_)
    groups_.push_back({g.name, g.begin + offset, g.end + offset});
  for (const Barrier& b : sub.barriers_) barriers_.push_back({b.position + offset, b.label});
  return *this;
}

Circuit& Circuit::barrier(std::string label) {
  barriers_.push_back({ops_.size(), std::move(label)});
  return *this;
}

std::vector<std::string> Circuit::group_names() const {
  std::vector<std::string> names;
  names.reserve(groups_.size());
  for (const auto& g : groups_) names.push_back(g.name);
  return names;
}

void apply(const Circuit& circuit, StateVector& state) {
  if (state.num_qubits() != circuit.total_qubits())
    throw ParameterError("state width " + std::to_string(state.num_qubits()) +
                         " does not match circuit width " +
                         std::to_string(circuit.total_qubits()));
  for (const GateOp& op : circuit.ops()) state.apply_gate(op.kind, op.controls, op.target);
}

StateVector run(const Circuit& circuit, std::optional<StateVector> initial) {
  StateVector state = initial ? std::move(*initial) : StateVector(circuit.total_qubits());
  apply(circuit, state);
  state.check_normalized();
  return state;
}

Circuit inverse(const Circuit& circuit) {
  Circuit out(circuit.search_qubits(), circuit.ancilla_qubits());
  const auto& ops = circuit.ops();
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    GateOp op = *it;
    op.kind = inverse(op.kind);
    out.append(std::move(op));
  }
  return out;
}

std::size_t CircuitStats::count(GateType type, std::size_t controls) const {
  const auto it = counts.find({type, controls});
  return it == counts.end() ? 0 : it->second;
}

std::map<std::string, std::size_t> CircuitStats::by_name() const {
  std::map<std::string, std::size_t> out;
  for (const auto& [key, n] : counts) out[op_name(key.first, key.second)] += n;
  return out;
}

CircuitStats stats(const Circuit& circuit) {
  CircuitStats s;
  s.total_ops = circuit.size();
  s.ancilla_qubits = circuit.ancilla_qubits();
  for (const GateOp& op : circuit.ops()) ++s.counts[{op.kind.type, op.controls.size()}];
  return s;
}

std::string op_name(GateType type, std::size_t controls) {
  const std::string base(gate_name(type));
  if (controls <= 2) return std::string(controls, 'c') + base;
  return "c" + std::to_string(controls) + base;
}

namespace {

std::string format_angle(double theta) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", theta);
  return buf;
}

std::string qasm_line(const GateOp& op, std::size_t index) {
  const GateType type = op.kind.type;
  const std::size_t arity = op.controls.size();
  bool ok = false;
  switch (arity) {
    case 0:
      ok = true;
      break;
    case 1:
      ok = type == GateType::X || type == GateType::Z || type == GateType::U1 ||
           type == GateType::Rz;
      break;
    case 2:
      ok = type == GateType::X;
      break;
    default:
      break;
  }
  if (!ok)
    throw ExportError(index, "'" + op_name(type, arity) + "' has no OpenQASM 2.0 equivalent");

  std::ostringstream line;
  line << op_name(type, arity);
  if (op.kind.parameterized()) line << '(' << format_angle(op.kind.theta) << ')';
  line << ' ';
  for (Qubit c : op.controls) line << "q[" << c << "],";
  line << "q[" << op.target << "];";
  return line.str();
}

}  // namespace

std::string export_qasm(const Circuit& circuit) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n"
      << "include \"qelib1.inc\";\n"
      << "qreg q[" << circuit.total_qubits() << "];\n"
      << "creg c[" << circuit.search_qubits() << "];\n";
  const auto& ops = circuit.ops();
  for (std::size_t i = 0; i < ops.size(); ++i) out << qasm_line(ops[i], i) << '\n';
  for (std::size_t q = 0; q < circuit.search_qubits(); ++q)
    out << "measure q[" << q << "] -> c[" << q << "];\n";
  return out.str();
}

ComplexMatrix circuit_unitary(const Circuit& circuit) {
  const std::size_t q = circuit.total_qubits();
  if (q > kMaxUnitaryQubits)
    throw SizeError("circuit_unitary is limited to " + std::to_string(kMaxUnitaryQubits) +
                    " qubits");
  const std::size_t dim = std::size_t{1} << q;
  ComplexMatrix u(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    std::vector<Complex> basis(dim);
    basis[col] = 1.0;
    StateVector state = StateVector::from_amplitudes(std::move(basis));
    apply(circuit, state);
    for (std::size_t row = 0; row < dim; ++row) u(row, col) = state[row];
  }
  return u;
}

}  // namespace grovesim
