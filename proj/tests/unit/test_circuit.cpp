#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "grovesim/circuit.hpp"
#include "grovesim/errors.hpp"
#include "support/oracles.hpp"

namespace grovesim {
namespace {

std::vector<Complex> amps(const StateVector& s) { return {s.amplitudes().begin(), s.amplitudes().end()}; }

GateOp random_op(std::size_t qubits, std::mt19937_64& rng) {
  std::vector<Qubit> wires(qubits);
  for (std::size_t i = 0; i < qubits; ++i) wires[i] = i;
  std::shuffle(wires.begin(), wires.end(), rng);
  const std::size_t arity = rng() % std::min<std::size_t>(3, qubits);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  GateKind kind;
  switch (rng() % 6) {
    case 0: kind = GateKind::h(); break;
    case 1: kind = GateKind::x(); break;
    case 2: kind = GateKind::z(); break;
    case 3: kind = GateKind::t(); break;
    case 4: kind = GateKind::u1(angle(rng)); break;
    default: kind = GateKind::rz(angle(rng)); break;
  }
  return GateOp::controlled(kind, std::vector<Qubit>(wires.begin() + 1, wires.begin() + 1 + arity),
                            wires[0]);
}

Circuit random_circuit(std::size_t qubits, std::size_t ops, std::mt19937_64& rng) {
  Circuit c(qubits);
  for (std::size_t i = 0; i < ops; ++i) c.append(random_op(qubits, rng));
  return c;
}

// Restricted to ops with an OpenQASM 2.0 spelling.
bool exportable(const GateOp& op) {
  switch (op.controls.size()) {
    case 0: return true;
    case 1: return op.kind.type != GateType::H && op.kind.type != GateType::T;
    case 2: return op.kind.type == GateType::X;
    default: return false;
  }
}

Circuit random_exportable_circuit(std::size_t qubits, std::size_t ops, std::mt19937_64& rng) {
  Circuit c(qubits);
  while (c.size() < ops) {
    GateOp op = random_op(qubits, rng);
    if (exportable(op)) c.append(std::move(op));
  }
  return c;
}

TEST(Circuit, EmptyRunIsZeroState) {
  const StateVector s = run(Circuit(3, 2));
  EXPECT_EQ(s.num_qubits(), 5u);
  EXPECT_EQ(s[0], Complex(1.0, 0.0));
}

TEST(Circuit, HadamardLayerIsUniform) {
  Circuit c(5);
  for (Qubit q = 0; q < 5; ++q) c.append(GateOp::single(GateKind::h(), q));
  for (const auto& [label, p] : probabilities(run(c))) EXPECT_NEAR(p, 1.0 / 32, 1e-15) << label;
}

TEST(Circuit, AppendAndGroups) {
  Circuit c(3);
  c.append(GateOp::single(GateKind::h(), 0));
  EXPECT_EQ(c.size(), 1u);

  Circuit g(3);
  std::vector<GateOp> seven(7, GateOp::single(GateKind::x(), 1));
  g.append_group("oracle", seven);
  g.append_group("oracle", seven);
  EXPECT_EQ(g.size(), 14u);
  ASSERT_EQ(g.groups().size(), 2u);
  EXPECT_EQ(g.groups()[0], (GateGroup{"oracle", 0, 7}));
  EXPECT_EQ(g.groups()[1], (GateGroup{"oracle", 7, 14}));
}

TEST(Circuit, AppendRejectsBadIndices) {
  Circuit c(2, 1);
  EXPECT_THROW(c.append(GateOp::single(GateKind::h(), 3)), ParameterError);
  EXPECT_THROW(c.append(GateOp::toffoli(0, 0, 2)), ParameterError);
  EXPECT_THROW(c.append(GateOp::cz(1, 1)), ParameterError);
  EXPECT_THROW(c.append(GateOp::cz(5, 1)), ParameterError);
  const std::vector<GateOp> bad{GateOp::single(GateKind::h(), 0), GateOp::single(GateKind::h(), 9)};
  EXPECT_THROW(c.append_group("g", bad), ParameterError);
  EXPECT_TRUE(c.empty());
  EXPECT_THROW(Circuit(0), ParameterError);
}

TEST(Circuit, AppendCircuitShiftsGroupsAndBarriers) {
  Circuit sub(2);
  sub.barrier("start");
  sub.append_group("a", std::vector<GateOp>{GateOp::single(GateKind::h(), 0)});
  Circuit c(2, 1);
  c.append(GateOp::single(GateKind::x(), 1));
  c.append_circuit(sub);
  ASSERT_EQ(c.groups().size(), 1u);
  EXPECT_EQ(c.groups()[0], (GateGroup{"a", 1, 2}));
  ASSERT_EQ(c.barriers().size(), 1u);
  EXPECT_EQ(c.barriers()[0].position, 1u);
  EXPECT_THROW(Circuit(3).append_circuit(sub), ParameterError);
  EXPECT_THROW(sub.append_circuit(c), ParameterError);
}

TEST(Circuit, WrongInitialWidth) {
  EXPECT_THROW(run(Circuit(2), new_zero_state(3)), ParameterError);
}

TEST(Circuit, RunIsCompositional) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const Circuit c = random_circuit(4, 12, rng);
    const GateOp op = random_op(4, rng);
    Circuit extended = c;
    extended.append(op);
    StateVector expected = run(c);
    expected.apply_gate(op.kind, op.controls, op.target);
    EXPECT_LT(testing::max_abs_diff(amps(run(extended)), amps(expected)), 1e-12);
  }
}

TEST(Circuit, InverseRestoresInitialState) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Circuit c = random_circuit(5, 40, rng);
    Circuit round_trip = c;
    round_trip.append_circuit(inverse(c));
    const auto initial = testing::random_state(5, rng);
    const StateVector out = run(round_trip, StateVector::from_amplitudes(initial));
    EXPECT_LT(testing::max_abs_diff(amps(out), initial), 1e-9);
  }
}

TEST(Circuit, StatsCountsByBaseKindAndArity) {
  const CircuitStats empty = stats(Circuit(3));
  EXPECT_EQ(empty.total_ops, 0u);
  EXPECT_TRUE(empty.counts.empty());
  EXPECT_EQ(empty.toffoli(), 0u);
  EXPECT_EQ(empty.cz(), 0u);

  Circuit c(3, 1);
  c.append(GateOp::toffoli(0, 1, 3));
  c.append(GateOp::cz(3, 2));
  c.append(GateOp::toffoli(0, 1, 3));
  c.append(GateOp::single(GateKind::h(), 0));
  c.append(GateOp::controlled(GateKind::z(), {0, 1, 2}, 3));
  const CircuitStats s = stats(c);
  EXPECT_EQ(s.toffoli(), 2u);
  EXPECT_EQ(s.cz(), 1u);
  EXPECT_EQ(s.count(GateType::H, 0), 1u);
  EXPECT_EQ(s.ancilla_qubits, 1u);
  EXPECT_EQ(s.total_ops, 5u);
  const auto names = s.by_name();
  EXPECT_EQ(names.at("ccx"), 2u);
  EXPECT_EQ(names.at("c3z"), 1u);
}

TEST(Circuit, StatsIgnoreGrouping) {
  std::mt19937_64 rng(4);
  const Circuit flat = random_circuit(4, 30, rng);
  Circuit grouped(4);
  const auto& ops = flat.ops();
  grouped.append_group("first", std::span<const GateOp>(ops.data(), 10));
  grouped.append_group("rest", std::span<const GateOp>(ops.data() + 10, ops.size() - 10));
  const CircuitStats a = stats(flat);
  const CircuitStats b = stats(grouped);
  EXPECT_EQ(a.counts, b.counts);
  EXPECT_EQ(a.total_ops, b.total_ops);
}

TEST(Qasm, SingleHadamard) {
  Circuit c(1);
  c.append(GateOp::single(GateKind::h(), 0));
  EXPECT_EQ(export_qasm(c),
            "OPENQASM 2.0;\n"
            "include \"qelib1.inc\";\n"
            "qreg q[1];\n"
            "creg c[1];\n"
            "h q[0];\n"
            "measure q[0] -> c[0];\n");
}

TEST(Qasm, GateSpellings) {
  Circuit c(3, 1);
  c.append(GateOp::cz(0, 1));
  c.append(GateOp::toffoli(0, 1, 3));
  c.append(GateOp::controlled(GateKind::x(), {2}, 0));
  c.append(GateOp::single(GateKind::tdag(), 2));
  c.append(GateOp::single(GateKind::u1(0.1), 1));
  c.append(GateOp::controlled(GateKind::rz(-0.25), {0}, 2));
  c.append(GateOp::controlled(GateKind::u1(1.0 / 3.0), {1}, 2));
  const std::string text = export_qasm(c);
  EXPECT_NE(text.find("qreg q[4];\ncreg c[3];\n"), std::string::npos);
  EXPECT_NE(text.find("cz q[0],q[1];\n"), std::string::npos);
  EXPECT_NE(text.find("ccx q[0],q[1],q[3];\n"), std::string::npos);
  EXPECT_NE(text.find("cx q[2],q[0];\n"), std::string::npos);
  EXPECT_NE(text.find("tdg q[2];\n"), std::string::npos);
  EXPECT_NE(text.find("u1(0.10000000000000001) q[1];\n"), std::string::npos);
  EXPECT_NE(text.find("crz(-0.25) q[0],q[2];\n"), std::string::npos);
  EXPECT_NE(text.find("cu1(0.33333333333333331) q[1],q[2];\n"), std::string::npos);
  // Only search qubits are measured.
  EXPECT_EQ(text.find("measure q[3]"), std::string::npos);
  EXPECT_NE(text.find("measure q[2] -> c[2];\n"), std::string::npos);
}

TEST(Qasm, InexpressibleOpNamesIndex) {
  Circuit c(4);
  c.append(GateOp::single(GateKind::h(), 0));
  c.append(GateOp::controlled(GateKind::z(), {0, 1, 2}, 3));
  try {
    (void)export_qasm(c);
    FAIL() << "expected ExportError";
  } catch (const ExportError& e) {
    EXPECT_EQ(e.op_index(), 1u);
    EXPECT_NE(std::string(e.what()).find("c3z"), std::string::npos);
  }
  Circuit t(2);
  t.append(GateOp::controlled(GateKind::t(), {0}, 1));
  EXPECT_THROW(export_qasm(t), ExportError);
  Circuit h(2);
  h.append(GateOp::controlled(GateKind::h(), {0}, 1));
  EXPECT_THROW(export_qasm(h), ExportError);
}

TEST(Qasm, ByteDeterministic) {
  std::mt19937_64 a(31);
  std::mt19937_64 b(31);
  const Circuit c1 = random_exportable_circuit(5, 50, a);
  const Circuit c2 = random_exportable_circuit(5, 50, b);
  EXPECT_EQ(export_qasm(c1), export_qasm(c2));
  EXPECT_EQ(export_qasm(c1), export_qasm(c1));
}

TEST(Qasm, InjectiveOnOpLists) {
  std::mt19937_64 rng(41);
  std::vector<Circuit> circuits;
  std::vector<std::string> texts;
  for (int i = 0; i < 300; ++i) {
    circuits.push_back(random_exportable_circuit(3, 1 + rng() % 3, rng));
    texts.push_back(export_qasm(circuits.back()));
  }
  for (std::size_t i = 0; i < circuits.size(); ++i)
    for (std::size_t j = i + 1; j < circuits.size(); ++j) {
      const auto& x = circuits[i].ops();
      const auto& y = circuits[j].ops();
      const bool same_ops = x.size() == y.size() &&
                            std::equal(x.begin(), x.end(), y.begin(),
                                       [](const GateOp& p, const GateOp& q) { return p.same_gate(q); });
      EXPECT_EQ(same_ops, texts[i] == texts[j]);
    }
  // Labels are metadata only.
  Circuit labelled(2);
  GateOp op = GateOp::single(GateKind::h(), 0);
  op.label = "note";
  labelled.append(op);
  Circuit plain(2);
  plain.append(GateOp::single(GateKind::h(), 0));
  EXPECT_EQ(export_qasm(labelled), export_qasm(plain));
}

TEST(Unitary, SingleHadamard) {
  Circuit c(1);
  c.append(GateOp::single(GateKind::h(), 0));
  const ComplexMatrix u = circuit_unitary(c);
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix expected(2);
  expected(0, 0) = s;
  expected(0, 1) = s;
  expected(1, 0) = s;
  expected(1, 1) = -s;
  EXPECT_LT(u.max_abs_diff(expected), 1e-15);
}

TEST(Unitary, MatchesProductOfDenseGates) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    const Circuit c = random_circuit(4, 15, rng);
    ComplexMatrix expected = ComplexMatrix::identity(16);
    for (const GateOp& op : c.ops())
      expected = testing::dense_gate(4, gate_matrix(op.kind), op.controls, op.target) * expected;
    const ComplexMatrix u = circuit_unitary(c);
    EXPECT_LT(u.max_abs_diff(expected), 1e-12);
    EXPECT_TRUE(u.is_unitary(1e-9));
  }
}

TEST(Unitary, SizeLimit) {
  EXPECT_THROW(circuit_unitary(Circuit(6, 5)), SizeError);
  EXPECT_NO_THROW(circuit_unitary(Circuit(6, 4)));
}

}  // namespace
}  // namespace grovesim
