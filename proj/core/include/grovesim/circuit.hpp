#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grovesim/gates.hpp"
#include "grovesim/matrix.hpp"
#include "grovesim/statevector.hpp"

namespace grovesim {

/// One gate application. `label` is annotation only and never affects
/// simulation, statistics, or export.
struct GateOp {
  GateKind kind;
  std::vector<Qubit> controls;
  Qubit target = 0;
  std::string label;

  static GateOp single(GateKind kind, Qubit target) { return {kind, {}, target, {}}; }
  static GateOp controlled(GateKind kind, std::vector<Qubit> controls, Qubit target) {
    return {kind, std::move(controls), target, {}};
  }
  static GateOp toffoli(Qubit c0, Qubit c1, Qubit target) {
    return controlled(GateKind::x(), {c0, c1}, target);
  }
  static GateOp cz(Qubit control, Qubit target) {
    return controlled(GateKind::z(), {control}, target);
  }

  /// Equality ignoring the label.
  bool same_gate(const GateOp& other) const {
    return kind == other.kind && controls == other.controls && target == other.target;
  }
};

/// Named half-open range [begin, end) of op indices.
struct GateGroup {
  std::string name;
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const GateGroup&) const = default;
};

/// Zero-width annotation placed before the op at `position`. Not simulated.
struct Barrier {
  std::size_t position = 0;
  std::string label;
};

/// Ordered gate list over a search register (qubits 0..n-1) followed by an
/// ancilla register (qubits n..n+m-1). Groups are flat, ordered, and
/// non-overlapping; they are metadata and do not change the op list.
class Circuit {
 public:
  explicit Circuit(std::size_t search_qubits, std::size_t ancilla_qubits = 0);

  std::size_t search_qubits() const noexcept { return search_qubits_; }
  std::size_t ancilla_qubits() const noexcept { return ancilla_qubits_; }
  std::size_t total_qubits() const noexcept { return search_qubits_ + ancilla_qubits_; }

  const std::vector<GateOp>& ops() const noexcept { return ops_; }
  const std::vector<GateGroup>& groups() const noexcept { return groups_; }
  const std::vector<Barrier>& barriers() const noexcept { return barriers_; }
  std::size_t size() const noexcept { return ops_.size(); }
  bool empty() const noexcept { return ops_.empty(); }

  /// Throws ParameterError if any index is out of range or repeated.
  Circuit& append(GateOp op);

  /// Appends `ops` and records them as one group.
  Circuit& append_group(std::string name, std::span<const GateOp> ops);

  /// Appends every op of `sub` as one group. `sub` must fit in this circuit's
  /// registers: same search width, no more ancillas.
  Circuit& append_group(std::string name, const Circuit& sub);

  /// Appends every op of `sub`, carrying its groups and barriers over with
  /// shifted positions. Same register constraint as append_group.
  Circuit& append_circuit(const Circuit& sub);

  Circuit& barrier(std::string label = {});

  /// Group names in order.
  std::vector<std::string> group_names() const;

 private:
  void validate(const GateOp& op) const;

  std::size_t search_qubits_;
  std::size_t ancilla_qubits_;
  std::vector<GateOp> ops_;
  std::vector<GateGroup> groups_;
  std::vector<Barrier> barriers_;
};

/// Applies the circuit's ops in order. Default initial state is |0...0>.
/// Throws ParameterError if `initial` has the wrong width, InternalError on
/// normalization drift.
StateVector run(const Circuit& circuit, std::optional<StateVector> initial = std::nullopt);

/// Applies the ops in place without the final normalization check.
void apply(const Circuit& circuit, StateVector& state);

/// Op-wise inverse in reverse order. Groups and barriers are dropped.
Circuit inverse(const Circuit& circuit);

/// Gate tallies keyed by (base gate, number of controls).
struct CircuitStats {
  std::map<std::pair<GateType, std::size_t>, std::size_t> counts;
  std::size_t total_ops = 0;
  std::size_t ancilla_qubits = 0;

  std::size_t count(GateType type, std::size_t controls) const;
  std::size_t toffoli() const { return count(GateType::X, 2); }
  std::size_t cz() const { return count(GateType::Z, 1); }

  /// Tallies keyed by display name: "h", "cx", "ccx", "cz", "cu1", "c4z", ...
  std::map<std::string, std::size_t> by_name() const;
};

CircuitStats stats(const Circuit& circuit);

/// Display name for a gate with `controls` controls ("ccx", "cu1", "c3z").
std::string op_name(GateType type, std::size_t controls);

/// OpenQASM 2.0 program: header, q/c registers, one line per op, then a
/// measurement of every search qubit. Supported ops are h, x, z, t, tdg,
/// u1, rz, cx, cz, cu1, crz and ccx; anything else throws ExportError naming
/// the op index. Angles print with 17 significant digits.
std::string export_qasm(const Circuit& circuit);

/// Full 2^q x 2^q unitary built column by column from basis inputs. Column j
/// is run(circuit, |j>). Throws SizeError above kMaxUnitaryQubits.
inline constexpr std::size_t kMaxUnitaryQubits = 10;
ComplexMatrix circuit_unitary(const Circuit& circuit);

}  // namespace grovesim
