#pragma once

#include <paraqt/circuit.hpp>
#include <paraqt/linalg.hpp>

#include <optional>
#include <string>
#include <vector>

namespace paraqt {

struct WeightProjection {
  StateVector state;   // normalized, or all-zero when probability is 0
  double probability;  // squared norm of the projection
  bool zero;
};

/// Projects onto span{|x> : HW(x) = k}.
WeightProjection project_weight_k(const StateVector& state, int k);

inline constexpr double kSupportTolerance = 1e-12;

/// Moves the amplitude of |x>, x in S_{n,k}, to |rank(x)> on index_bits(C(n,k)) qubits.
StateVector encode_weight_witness(int n, int k, const StateVector& state);
StateVector decode_weight_witness(int n, int k, const StateVector& compressed);

/// S_n (D_k|0^k> (x) |0^{n-k}>) where qubit j of the product moves to position perm[j].
StateVector prepare_classical_weight_state(int n, int k, const QuantumCircuit& generator,
                                           const std::vector<int>& perm);

/// Permutes tensor factors: qubit j of `state` becomes qubit perm[j].
StateVector permute_qubits(const StateVector& state, const std::vector<int>& perm);

/// Each block must contain exactly one '1'; its position (0 = leftmost) is
/// written with index_bits(block_size) bits. nullopt means REJECT.
std::optional<std::string> one_hot_block_decode(int num_blocks, int block_size, const std::string& bits);

enum class HadamardPart { kReal, kImag };

/// Ancilla on wire 0 (the accept qubit), system on wires 1..m. `prep` acts on
/// m wires starting from |0^m> and prepares psi. Then
/// Pr[ancilla = 0] = (1 + Re <psi|U|psi>)/2, or (1 + Im <psi|U|psi>)/2 for kImag.
QuantumCircuit hadamard_test_circuit(const ComplexMatrix& u, HadamardPart part, const QuantumCircuit& prep);

/// Empty preparation circuit on m wires (psi = |0^m>).
QuantumCircuit identity_prep(int num_qubits);

/// Pr[ancilla = 0] for a circuit built by hadamard_test_circuit.
double hadamard_zero_probability(const QuantumCircuit& test);

/// psi = prep |0^m> as a state.
StateVector prepared_state(const QuantumCircuit& prep);

}  // namespace paraqt
