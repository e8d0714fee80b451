#include "common.hpp"

#include <paraqt/rng.hpp>

#include <omp.h>

namespace paraqt::kernels::omp {
namespace {

std::int64_t as_signed(std::uint64_t v) { return static_cast<std::int64_t>(v); }

/// Sum of f(i) for i in [0, n) with fixed chunk boundaries, chunks added in order.
template <typename T, typename F>
T chunked_sum(std::uint64_t n, F&& f) {
  const std::uint64_t chunks = (n + kReductionChunk - 1) / kReductionChunk;
  std::vector<T> partial(chunks, T{});
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < as_signed(chunks); ++c) {
    const std::uint64_t lo = static_cast<std::uint64_t>(c) * kReductionChunk;
    const std::uint64_t hi = std::min<std::uint64_t>(n, lo + kReductionChunk);
    T acc{};
    for (std::uint64_t i = lo; i < hi; ++i) acc += f(i);
    partial[static_cast<std::size_t>(c)] = acc;
  }
  T total{};
  for (const T& p : partial) total += p;
  return total;
}

}  // namespace

void apply_gate(std::span<Complex> amps, int num_qubits, const GateOp& op) {
  const detail::GateLayout g = detail::make_layout(num_qubits, op);
#pragma omp parallel
  {
    std::vector<Complex> scratch(2 * g.offsets.size());
#pragma omp for schedule(static)
    for (std::int64_t r = 0; r < as_signed(g.outer_count); ++r) {
      detail::apply_block(amps, op, g, static_cast<std::uint64_t>(r), scratch.data());
    }
  }
}

void apply_gates(std::span<Complex> amps, int num_qubits, std::span<const GateOp> ops) {
  for (const GateOp& op : ops) apply_gate(amps, num_qubits, op);
}

double probability_one(std::span<const Complex> amps, int num_qubits, int qubit) {
  const std::uint64_t mask = qubit_mask(qubit, num_qubits);
  return chunked_sum<double>(amps.size(), [&](std::uint64_t i) { return (i & mask) ? std::norm(amps[i]) : 0.0; });
}

CsrMatrix restrict_terms(int n, std::span<const std::uint64_t> members, std::span<const TermOp> terms) {
  std::vector<std::vector<std::pair<std::size_t, Complex>>> rows(members.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t r = 0; r < as_signed(members.size()); ++r) {
    rows[static_cast<std::size_t>(r)] = detail::restricted_row(n, members[static_cast<std::size_t>(r)], terms);
  }
  return detail::assemble_csr(members.size(), rows);
}

Complex expectation(std::span<const Complex> amps, int num_qubits, std::span<const TermOp> terms) {
  return chunked_sum<Complex>(amps.size(), [&](std::uint64_t x) {
    return detail::expectation_at(amps, num_qubits, terms, x);
  });
}

std::uint64_t count_accepting(std::span<const ClassicalOp> ops, int input_bits, int width,
                              std::uint64_t accept_mask) {
  const std::uint64_t total = std::uint64_t{1} << input_bits;
  std::uint64_t count = 0;
#pragma omp parallel for schedule(static) reduction(+ : count)
  for (std::int64_t x = 0; x < as_signed(total); ++x) {
    if (run_classical(ops, static_cast<std::uint64_t>(x) << (width - input_bits)) & accept_mask) ++count;
  }
  return count;
}

std::uint64_t count_bernoulli(double p, std::uint64_t m, std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t count = 0;
#pragma omp parallel for schedule(static) reduction(+ : count)
  for (std::int64_t i = 0; i < as_signed(m); ++i) {
    if (Philox::uniform(seed, stream, static_cast<std::uint64_t>(i)) < p) ++count;
  }
  return count;
}

std::int64_t sample_gap(std::span<const ClassicalOp> ops, int input_bits, int width,
                        std::uint64_t accept_mask, std::uint64_t m, std::uint64_t seed,
                        std::uint64_t stream) {
  std::int64_t sum = 0;
#pragma omp parallel for schedule(static) reduction(+ : sum)
  for (std::int64_t i = 0; i < as_signed(m); ++i) {
    sum += detail::gap_sample_at(ops, input_bits, width, accept_mask, seed, stream, static_cast<std::uint64_t>(i));
  }
  return sum;
}

ComplexMatrix simulate_basis_columns(std::span<const GateOp> ops, int num_qubits,
                                     std::span<const std::uint64_t> inputs) {
  const std::size_t dim = std::size_t{1} << num_qubits;
  ComplexMatrix out(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(inputs.size()));
#pragma omp parallel
  {
    ComplexVector work(static_cast<Eigen::Index>(dim));
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t j = 0; j < as_signed(inputs.size()); ++j) {
      work.setZero();
      work[static_cast<Eigen::Index>(inputs[static_cast<std::size_t>(j)])] = 1.0;
      serial::apply_gates(std::span<Complex>(work.data(), dim), num_qubits, ops);
      out.col(static_cast<Eigen::Index>(j)) = work;
    }
  }
  return out;
}

}  // namespace paraqt::kernels::omp
