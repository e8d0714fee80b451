#pragma once

#include <paraqt/kernels.hpp>
#include <paraqt/rng.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace paraqt::kernels::detail {

/// Scatter the low bits of `value` into the zero positions of `holes`
/// (ascending bit positions that must stay zero).
inline std::uint64_t insert_zero_bits(std::uint64_t value, std::span<const int> holes_ascending) {
  for (int pos : holes_ascending) {
    const std::uint64_t low = value & ((std::uint64_t{1} << pos) - 1);
    value = ((value >> pos) << (pos + 1)) | low;
  }
  return value;
}

/// Precomputed addressing for one gate on an n-qubit register.
struct GateLayout {
  std::vector<int> holes;              // target bit positions, ascending
  std::vector<std::uint64_t> offsets;  // local index -> global bit pattern
  std::uint64_t control_mask = 0;
  std::uint64_t outer_count = 0;       // 2^(n - |targets|)
};

inline GateLayout make_layout(int num_qubits, const GateOp& op) {
  GateLayout g;
  const int t = static_cast<int>(op.targets.size());
  for (int q : op.targets) g.holes.push_back(num_qubits - 1 - q);
  std::sort(g.holes.begin(), g.holes.end());
  g.offsets.assign(std::size_t{1} << t, 0);
  for (std::size_t j = 0; j < g.offsets.size(); ++j) {
    std::uint64_t off = 0;
    for (int p = 0; p < t; ++p) {
      if ((j >> (t - 1 - p)) & 1u) off |= qubit_mask(op.targets[p], num_qubits);
    }
    g.offsets[j] = off;
  }
  for (int c : op.controls) g.control_mask |= qubit_mask(c, num_qubits);
  g.outer_count = std::uint64_t{1} << (num_qubits - t);
  return g;
}

/// Apply one gate to the block rooted at outer index `r`; `scratch` sized 2 * 2^t.
inline void apply_block(std::span<Complex> amps, const GateOp& op, const GateLayout& g, std::uint64_t r,
                        Complex* scratch) {
  const std::uint64_t base = insert_zero_bits(r, g.holes);
  if ((base & g.control_mask) != g.control_mask) return;
  const std::size_t d = g.offsets.size();
  Complex* in = scratch;
  Complex* out = scratch + d;
  for (std::size_t j = 0; j < d; ++j) in[j] = amps[base | g.offsets[j]];
  for (std::size_t i = 0; i < d; ++i) {
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < d; ++j) {
      acc += op.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * in[j];
    }
    out[i] = acc;
  }
  for (std::size_t i = 0; i < d; ++i) amps[base | g.offsets[i]] = out[i];
}

/// Local index of `bits` on `support` (support[0] -> local MSB).
inline std::uint64_t extract_local(std::uint64_t bits, std::span<const int> support, int num_qubits) {
  const int l = static_cast<int>(support.size());
  std::uint64_t local = 0;
  for (int p = 0; p < l; ++p) {
    if (bits & qubit_mask(support[p], num_qubits)) local |= std::uint64_t{1} << (l - 1 - p);
  }
  return local;
}

inline std::uint64_t deposit_local(std::uint64_t local, std::span<const int> support, int num_qubits) {
  const int l = static_cast<int>(support.size());
  std::uint64_t bits = 0;
  for (int p = 0; p < l; ++p) {
    if ((local >> (l - 1 - p)) & 1u) bits |= qubit_mask(support[p], num_qubits);
  }
  return bits;
}

inline std::uint64_t support_mask(std::span<const int> support, int num_qubits) {
  std::uint64_t m = 0;
  for (int q : support) m |= qubit_mask(q, num_qubits);
  return m;
}

/// Row r of the weight-restricted operator: (column, value) pairs sorted by
/// column, duplicates summed in term order.
std::vector<std::pair<std::size_t, Complex>> restricted_row(int n, std::uint64_t x,
                                                            std::span<const TermOp> terms);

CsrMatrix assemble_csr(std::size_t dim, std::vector<std::vector<std::pair<std::size_t, Complex>>>& rows);

/// <psi|T|psi> contribution of basis index x.
Complex expectation_at(std::span<const Complex> amps, int num_qubits, std::span<const TermOp> terms,
                       std::uint64_t x);

inline std::int64_t gap_sample_at(std::span<const ClassicalOp> ops, int input_bits, int width,
                                  std::uint64_t accept_mask, std::uint64_t seed, std::uint64_t stream,
                                  std::uint64_t i) {
  const std::uint64_t path = Philox::bits64(seed, stream, i) >> (64 - input_bits);
  const std::uint64_t out = run_classical(ops, path << (width - input_bits));
  return (out & accept_mask) ? 1 : -1;
}

}  // namespace paraqt::kernels::detail
