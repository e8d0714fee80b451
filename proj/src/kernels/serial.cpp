#include "common.hpp"

#include <paraqt/rng.hpp>
#include <paraqt/weight_enumeration.hpp>

namespace paraqt::kernels::serial {

void apply_gate(std::span<Complex> amps, int num_qubits, const GateOp& op) {
  const detail::GateLayout g = detail::make_layout(num_qubits, op);
  std::vector<Complex> scratch(2 * g.offsets.size());
  for (std::uint64_t r = 0; r < g.outer_count; ++r) detail::apply_block(amps, op, g, r, scratch.data());
}

void apply_gates(std::span<Complex> amps, int num_qubits, std::span<const GateOp> ops) {
  for (const GateOp& op : ops) apply_gate(amps, num_qubits, op);
}

double probability_one(std::span<const Complex> amps, int num_qubits, int qubit) {
  const std::uint64_t mask = qubit_mask(qubit, num_qubits);
  double p = 0.0;
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (i & mask) p += std::norm(amps[i]);
  }
  return p;
}

CsrMatrix restrict_terms(int n, std::span<const std::uint64_t> members, std::span<const TermOp> terms) {
  std::vector<std::vector<std::pair<std::size_t, Complex>>> rows(members.size());
  for (std::size_t r = 0; r < members.size(); ++r) rows[r] = detail::restricted_row(n, members[r], terms);
  return detail::assemble_csr(members.size(), rows);
}

Complex expectation(std::span<const Complex> amps, int num_qubits, std::span<const TermOp> terms) {
  Complex acc{0.0, 0.0};
  for (std::uint64_t x = 0; x < amps.size(); ++x) acc += detail::expectation_at(amps, num_qubits, terms, x);
  return acc;
}

std::uint64_t count_accepting(std::span<const ClassicalOp> ops, int input_bits, int width,
                              std::uint64_t accept_mask) {
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << input_bits;
  for (std::uint64_t x = 0; x < total; ++x) {
    if (run_classical(ops, x << (width - input_bits)) & accept_mask) ++count;
  }
  return count;
}

std::uint64_t count_bernoulli(double p, std::uint64_t m, std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < m; ++i) {
    if (Philox::uniform(seed, stream, i) < p) ++count;
  }
  return count;
}

std::int64_t sample_gap(std::span<const ClassicalOp> ops, int input_bits, int width,
                        std::uint64_t accept_mask, std::uint64_t m, std::uint64_t seed,
                        std::uint64_t stream) {
  std::int64_t sum = 0;
  for (std::uint64_t i = 0; i < m; ++i) {
    sum += detail::gap_sample_at(ops, input_bits, width, accept_mask, seed, stream, i);
  }
  return sum;
}

ComplexMatrix simulate_basis_columns(std::span<const GateOp> ops, int num_qubits,
                                     std::span<const std::uint64_t> inputs) {
  const std::size_t dim = std::size_t{1} << num_qubits;
  ComplexMatrix out(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(inputs.size()));
  ComplexVector work(static_cast<Eigen::Index>(dim));
  for (std::size_t j = 0; j < inputs.size(); ++j) {
    work.setZero();
    work[static_cast<Eigen::Index>(inputs[j])] = 1.0;
    apply_gates(std::span<Complex>(work.data(), dim), num_qubits, ops);
    out.col(static_cast<Eigen::Index>(j)) = work;
  }
  return out;
}

}  // namespace paraqt::kernels::serial
