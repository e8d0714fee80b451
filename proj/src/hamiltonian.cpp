#include <paraqt/errors.hpp>
#include <paraqt/hamiltonian.hpp>
#include <paraqt/weight_enumeration.hpp>

#include <algorithm>
#include <span>
#include <string>

namespace paraqt {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kYes:
      return "YES";
    case Verdict::kNo:
      return "NO";
    case Verdict::kPromiseViolated:
      return "PROMISE_VIOLATED";
  }
  return "UNKNOWN";
}

LocalHamiltonian::LocalHamiltonian(int n, int locality, std::vector<LocalTerm> terms, double a, double b)
    : n_(n), locality_(locality), terms_(std::move(terms)), a_(a), b_(b) {
  if (n < 1 || n > 62) throw InvalidInput("Hamiltonian qubit count must be in [1, 62]");
  if (locality < 1) throw InvalidInput("locality must be positive");
  if (!(b > a)) throw InvalidInput("thresholds must satisfy b > a");
  for (std::size_t t = 0; t < terms_.size(); ++t) {
    const LocalTerm& term = terms_[t];
    const std::string where = "term " + std::to_string(t) + ": ";
    if (term.support.empty()) throw InvalidInput(where + "empty support");
    if (static_cast<int>(term.support.size()) > locality) throw InvalidInput(where + "support exceeds locality");
    if (!std::is_sorted(term.support.begin(), term.support.end()) ||
        std::adjacent_find(term.support.begin(), term.support.end()) != term.support.end()) {
      throw InvalidInput(where + "support must be sorted and distinct");
    }
    if (term.support.front() < 0 || term.support.back() >= n) throw InvalidInput(where + "qubit index out of range");
    const Eigen::Index dim = Eigen::Index{1} << term.support.size();
    if (term.block.rows() != dim || term.block.cols() != dim) {
      throw InvalidInput(where + "block must be " + std::to_string(dim) + "x" + std::to_string(dim));
    }
    if (!is_hermitian(term.block, 1e-12)) throw InvalidInput(where + "block is not Hermitian");
    if (term.norm_bound && spectral_norm(term.block) > *term.norm_bound + 1e-12) {
      throw InvalidInput(where + "operator norm exceeds declared bound");
    }
  }
}

std::vector<kernels::TermOp> LocalHamiltonian::term_ops() const {
  std::vector<kernels::TermOp> ops;
  ops.reserve(terms_.size());
  for (const LocalTerm& t : terms_) ops.push_back({t.support, t.block});
  return ops;
}

ComplexMatrix assemble_full(const LocalHamiltonian& h) {
  if (h.n() > kMaxFullAssemblyQubits) {
    throw ResourceError("assemble_full limited to n <= " + std::to_string(kMaxFullAssemblyQubits));
  }
  const int n = h.n();
  const std::uint64_t dim = std::uint64_t{1} << n;
  ComplexMatrix full = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const LocalTerm& term : h.terms()) {
    std::uint64_t mask = 0;
    for (int q : term.support) mask |= qubit_mask(q, n);
    const int l = static_cast<int>(term.support.size());
    auto local_of = [&](std::uint64_t x) {
      std::uint64_t local = 0;
      for (int p = 0; p < l; ++p) {
        if (x & qubit_mask(term.support[p], n)) local |= std::uint64_t{1} << (l - 1 - p);
      }
      return local;
    };
    auto place = [&](std::uint64_t local) {
      std::uint64_t x = 0;
      for (int p = 0; p < l; ++p) {
        if ((local >> (l - 1 - p)) & 1u) x |= qubit_mask(term.support[p], n);
      }
      return x;
    };
    for (std::uint64_t x = 0; x < dim; ++x) {
      const std::uint64_t rest = x & ~mask;
      const std::uint64_t lx = local_of(x);
      for (std::uint64_t lc = 0; lc < (std::uint64_t{1} << l); ++lc) {
        full(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(rest | place(lc))) +=
            term.block(static_cast<Eigen::Index>(lx), static_cast<Eigen::Index>(lc));
      }
    }
  }
  return full;
}

SparseComplexMatrix restrict_to_weight(const LocalHamiltonian& h, int k) {
  const WeightEnumeration en(h.n(), k);
  const std::vector<std::uint64_t> members = en.members();
  const std::vector<kernels::TermOp> ops = h.term_ops();
  const kernels::CsrMatrix csr = kernels::omp::restrict_terms(h.n(), members, ops);

  std::vector<Eigen::Triplet<Complex>> triplets;
  triplets.reserve(csr.values.size());
  for (std::size_t r = 0; r < csr.rows; ++r) {
    for (std::size_t e = csr.row_ptr[r]; e < csr.row_ptr[r + 1]; ++e) {
      triplets.emplace_back(static_cast<int>(r), static_cast<int>(csr.col_index[e]), csr.values[e]);
    }
  }
  SparseComplexMatrix m(static_cast<Eigen::Index>(csr.rows), static_cast<Eigen::Index>(csr.cols));
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

double expectation_value(const LocalHamiltonian& h, const StateVector& state) {
  if (state.num_qubits() != h.n()) {
    throw InvalidInput("state has " + std::to_string(state.num_qubits()) + " qubits, Hamiltonian has " +
                       std::to_string(h.n()));
  }
  const std::vector<kernels::TermOp> ops = h.term_ops();
  const ComplexVector& a = state.amplitudes();
  return kernels::omp::expectation(std::span<const Complex>(a.data(), state.dim()), h.n(), ops).real();
}

HamiltonianDecision decide_weight_k_local_hamiltonian(const LocalHamiltonian& h, int k, EigenMode mode) {
  const SparseComplexMatrix restricted = restrict_to_weight(h, k);
  const double lambda = min_eigenvalue(restricted, mode);
  Verdict v = Verdict::kPromiseViolated;
  if (lambda <= h.a()) {
    v = Verdict::kYes;
  } else if (lambda >= h.b()) {
    v = Verdict::kNo;
  }
  return {v, lambda, static_cast<std::uint64_t>(restricted.rows()), k};
}

LocalHamiltonian sum_of_z(int n, double a, double b) {
  ComplexMatrix z(2, 2);
  z << 1.0, 0.0, 0.0, -1.0;
  std::vector<LocalTerm> terms;
  for (int q = 0; q < n; ++q) terms.push_back({{q}, z, 1.0});
  return LocalHamiltonian(n, 1, std::move(terms), a, b);
}

}  // namespace paraqt
