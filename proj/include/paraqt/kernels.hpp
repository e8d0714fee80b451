#pragma once

// Data-parallel inner loops. Every kernel exists twice: a plain serial
// reference in `kernels::serial` and an OpenMP version in `kernels::omp`.
// Library code calls the OpenMP versions; the serial ones are kept for the
// equivalence tests and the benchmarks. Floating-point reductions in the
// OpenMP versions use a fixed chunking, so results do not depend on the
// number of threads.

#include <paraqt/linalg.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace paraqt::kernels {

/// A gate lowered to "apply `matrix` to `targets` when every control is 1".
/// targets[0] is the most significant bit of the local matrix index.
struct GateOp {
  std::vector<int> targets;
  std::vector<int> controls;
  ComplexMatrix matrix;
};

/// Reversible classical gate on a bit register: flip `target_mask` bits when
/// all `control_mask` bits are set (X / CX / Toffoli), or exchange two bits.
struct ClassicalOp {
  enum class Kind { kFlip, kSwap };
  Kind kind = Kind::kFlip;
  std::uint64_t control_mask = 0;
  std::uint64_t target_mask = 0;
  std::uint64_t swap_a = 0;
  std::uint64_t swap_b = 0;
};

std::uint64_t run_classical(std::span<const ClassicalOp> ops, std::uint64_t bits);

/// One local term of a Hamiltonian in kernel form.
struct TermOp {
  std::vector<int> support;  // sorted; support[0] is the local MSB
  ComplexMatrix block;
};

/// Compressed sparse rows, entries of each row sorted by column.
struct CsrMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> row_ptr;
  std::vector<std::size_t> col_index;
  std::vector<Complex> values;
};

inline constexpr std::size_t kReductionChunk = 4096;

namespace serial {

void apply_gate(std::span<Complex> amps, int num_qubits, const GateOp& op);
void apply_gates(std::span<Complex> amps, int num_qubits, std::span<const GateOp> ops);

/// Sum of |amp|^2 over basis states whose `qubit` is 1.
double probability_one(std::span<const Complex> amps, int num_qubits, int qubit);

/// Weight-k restriction: entry(rank x, rank y) = sum_t <x|T|y> over S_{n,k}.
CsrMatrix restrict_terms(int n, std::span<const std::uint64_t> members,
                         std::span<const TermOp> terms);

/// sum_t <psi|T|psi> (complex; imaginary part vanishes for Hermitian terms).
Complex expectation(std::span<const Complex> amps, int num_qubits, std::span<const TermOp> terms);

/// Number of inputs x in [0, 2^input_bits) whose output has `accept_mask` set.
/// Inputs occupy the top `input_bits` of a `width`-bit register.
std::uint64_t count_accepting(std::span<const ClassicalOp> ops, int input_bits, int width,
                              std::uint64_t accept_mask);

/// Number of draws i < m with Philox::uniform(seed, stream, i) < p.
std::uint64_t count_bernoulli(double p, std::uint64_t m, std::uint64_t seed, std::uint64_t stream);

/// sum_{i<m} (+1 if sampled path accepts else -1), path_i = top input_bits of a Philox draw.
std::int64_t sample_gap(std::span<const ClassicalOp> ops, int input_bits, int width,
                        std::uint64_t accept_mask, std::uint64_t m, std::uint64_t seed,
                        std::uint64_t stream);

}  // namespace serial

namespace omp {

void apply_gate(std::span<Complex> amps, int num_qubits, const GateOp& op);
void apply_gates(std::span<Complex> amps, int num_qubits, std::span<const GateOp> ops);
double probability_one(std::span<const Complex> amps, int num_qubits, int qubit);
CsrMatrix restrict_terms(int n, std::span<const std::uint64_t> members,
                         std::span<const TermOp> terms);
Complex expectation(std::span<const Complex> amps, int num_qubits, std::span<const TermOp> terms);
std::uint64_t count_accepting(std::span<const ClassicalOp> ops, int input_bits, int width,
                              std::uint64_t accept_mask);
std::uint64_t count_bernoulli(double p, std::uint64_t m, std::uint64_t seed, std::uint64_t stream);
std::int64_t sample_gap(std::span<const ClassicalOp> ops, int input_bits, int width,
                        std::uint64_t accept_mask, std::uint64_t m, std::uint64_t seed,
                        std::uint64_t stream);

/// Columns of (simulated circuit) applied to each input basis state; column j
/// is the output for `inputs[j]` over `num_qubits` qubits. Parallel over columns.
ComplexMatrix simulate_basis_columns(std::span<const GateOp> ops, int num_qubits,
                                     std::span<const std::uint64_t> inputs);

}  // namespace omp

namespace serial {
ComplexMatrix simulate_basis_columns(std::span<const GateOp> ops, int num_qubits,
                                     std::span<const std::uint64_t> inputs);
}  // namespace serial

}  // namespace paraqt::kernels
