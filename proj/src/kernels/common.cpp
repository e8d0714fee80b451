#include "common.hpp"

#include <paraqt/weight_enumeration.hpp>

namespace paraqt::kernels {

std::uint64_t run_classical(std::span<const ClassicalOp> ops, std::uint64_t bits) {
  for (const ClassicalOp& op : ops) {
    if (op.kind == ClassicalOp::Kind::kFlip) {
      if ((bits & op.control_mask) == op.control_mask) bits ^= op.target_mask;
    } else {
      const bool a = (bits & op.swap_a) != 0;
      const bool b = (bits & op.swap_b) != 0;
      if (a != b) bits ^= (op.swap_a | op.swap_b);
    }
  }
  return bits;
}

namespace detail {

std::vector<std::pair<std::size_t, Complex>> restricted_row(int n, std::uint64_t x,
                                                            std::span<const TermOp> terms) {
  const int k = hamming_weight(x);
  const WeightEnumeration en(n, k);
  std::vector<std::pair<std::size_t, Complex>> entries;
  for (const TermOp& term : terms) {
    const std::uint64_t mask = support_mask(term.support, n);
    const std::uint64_t lx = extract_local(x, term.support, n);
    const std::uint64_t rest = x & ~mask;
    const std::uint64_t local_dim = std::uint64_t{1} << term.support.size();
    for (std::uint64_t lc = 0; lc < local_dim; ++lc) {
      const std::uint64_t y = rest | deposit_local(lc, term.support, n);
      if (hamming_weight(y) != k) continue;
      const Complex v = term.block(static_cast<Eigen::Index>(lx), static_cast<Eigen::Index>(lc));
      if (v == Complex{0.0, 0.0}) continue;
      entries.emplace_back(static_cast<std::size_t>(en.rank(y)), v);
    }
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<std::size_t, Complex>> merged;
  for (const auto& e : entries) {
    if (!merged.empty() && merged.back().first == e.first) {
      merged.back().second += e.second;
    } else {
      merged.push_back(e);
    }
  }
  return merged;
}

CsrMatrix assemble_csr(std::size_t dim, std::vector<std::vector<std::pair<std::size_t, Complex>>>& rows) {
  CsrMatrix m;
  m.rows = dim;
  m.cols = dim;
  m.row_ptr.assign(dim + 1, 0);
  for (std::size_t r = 0; r < dim; ++r) m.row_ptr[r + 1] = m.row_ptr[r] + rows[r].size();
  m.col_index.reserve(m.row_ptr[dim]);
  m.values.reserve(m.row_ptr[dim]);
  for (auto& row : rows) {
    for (const auto& [c, v] : row) {
      m.col_index.push_back(c);
      m.values.push_back(v);
    }
  }
  return m;
}

Complex expectation_at(std::span<const Complex> amps, int num_qubits, std::span<const TermOp> terms,
                       std::uint64_t x) {
  const Complex ax = amps[x];
  if (ax == Complex{0.0, 0.0}) return {};
  Complex acc{0.0, 0.0};
  for (const TermOp& term : terms) {
    const std::uint64_t mask = support_mask(term.support, num_qubits);
    const std::uint64_t lx = extract_local(x, term.support, num_qubits);
    const std::uint64_t rest = x & ~mask;
    const std::uint64_t local_dim = std::uint64_t{1} << term.support.size();
    Complex row{0.0, 0.0};
    for (std::uint64_t lc = 0; lc < local_dim; ++lc) {
      row += term.block(static_cast<Eigen::Index>(lx), static_cast<Eigen::Index>(lc)) *
             amps[rest | deposit_local(lc, term.support, num_qubits)];
    }
    acc += row;
  }
  return std::conj(ax) * acc;
}

}  // namespace detail
}  // namespace paraqt::kernels
