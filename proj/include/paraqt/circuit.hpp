#pragma once

#include <paraqt/kernels.hpp>
#include <paraqt/linalg.hpp>

#include <optional>
#include <string>
#include <vector>

namespace paraqt {

enum class GateKind { kH, kX, kY, kZ, kS, kSdg, kT, kCX, kCZ, kSwap, kToffoli, kUnitary };

std::string gate_name(GateKind kind);
std::optional<GateKind> parse_gate_name(const std::string& name);

/// One gate. Toffoli means a generalized Toffoli: >= 2 controls, one X target.
/// Unitary blocks carry their matrix (targets[0] = local MSB) and may be controlled.
struct Gate {
  GateKind kind;
  std::vector<int> controls;
  std::vector<int> targets;
  ComplexMatrix matrix;  // only for kUnitary

  static Gate named(GateKind kind, int target);
  static Gate cx(int control, int target);
  static Gate cz(int control, int target);
  static Gate swap(int a, int b);
  static Gate toffoli(std::vector<int> controls, int target);
  static Gate unitary(ComplexMatrix u, std::vector<int> targets, std::vector<int> controls = {});

  int wire_count() const { return static_cast<int>(controls.size() + targets.size()); }

  /// Counts toward weft: generalized Toffolis and any unitary block on >= 3 wires.
  bool is_large() const { return kind == GateKind::kToffoli || (kind == GateKind::kUnitary && wire_count() >= 3); }

  /// X, CX, generalized Toffoli, SWAP: maps basis states to basis states.
  bool is_classical() const;

  /// Dense matrix acting on `targets` (controls excluded).
  ComplexMatrix target_matrix() const;
};

/// Gate sequence over witness qubits followed by ancilla qubits (initialized
/// to |0>). Wires 0..witness-1 are the witness; accept_qubit is measured.
class QuantumCircuit {
 public:
  QuantumCircuit(int witness_qubits, int ancilla_qubits, int accept_qubit, std::vector<Gate> gates);

  int witness_qubits() const noexcept { return witness_; }
  int ancilla_qubits() const noexcept { return ancilla_; }
  int total_qubits() const noexcept { return witness_ + ancilla_; }
  int accept_qubit() const noexcept { return accept_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }

  bool is_classical() const;

  std::vector<kernels::GateOp> gate_ops() const;
  /// Throws InvalidInput when a gate is not classical.
  std::vector<kernels::ClassicalOp> classical_ops() const;

 private:
  int witness_;
  int ancilla_;
  int accept_;
  std::vector<Gate> gates_;
};

inline constexpr int kMaxSimulatedQubits = 26;
inline constexpr int kMaxUnitaryQubits = 12;

/// Runs the circuit on input (x) |0...0>_ancilla.
StateVector simulate(const QuantumCircuit& circuit, const StateVector& input);

/// Probability that the accept qubit reads 1.
double acceptance_probability(const QuantumCircuit& circuit, const StateVector& input);

/// Full unitary on all wires, built column by column.
ComplexMatrix circuit_unitary(const QuantumCircuit& circuit);

struct CircuitMetrics {
  int weft = 0;
  int depth = 0;
  int size = 0;
};

/// Weft is the largest number of large gates on any input-to-output wire path
/// through the gate DAG; depth is the longest path counting every gate.
CircuitMetrics circuit_metrics(const QuantumCircuit& circuit);

}  // namespace paraqt
