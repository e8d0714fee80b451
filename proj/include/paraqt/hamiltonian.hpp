#pragma once

#include <paraqt/eigensolver.hpp>
#include <paraqt/kernels.hpp>
#include <paraqt/linalg.hpp>

#include <optional>
#include <string>
#include <vector>

namespace paraqt {

/// Verdict of a promise problem decided exactly.
enum class Verdict { kYes, kNo, kPromiseViolated };

std::string to_string(Verdict v);

/// Hermitian block acting on a sorted set of distinct qubits.
struct LocalTerm {
  std::vector<int> support;
  ComplexMatrix block;
  /// Declared bound on the operator norm; validated against the block's spectral norm.
  std::optional<double> norm_bound;
};

class LocalHamiltonian {
 public:
  LocalHamiltonian(int n, int locality, std::vector<LocalTerm> terms, double a, double b);

  int n() const noexcept { return n_; }
  int locality() const noexcept { return locality_; }
  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  const std::vector<LocalTerm>& terms() const noexcept { return terms_; }

  std::vector<kernels::TermOp> term_ops() const;

 private:
  int n_;
  int locality_;
  std::vector<LocalTerm> terms_;
  double a_;
  double b_;
};

inline constexpr int kMaxFullAssemblyQubits = 12;

/// Dense 2^n matrix of sum_i H_i. ResourceError for n > 12.
ComplexMatrix assemble_full(const LocalHamiltonian& h);

/// C(n,k)-dimensional restriction with entry(rank x, rank y) = <x|H|y>,
/// assembled term by term without forming the 2^n matrix.
SparseComplexMatrix restrict_to_weight(const LocalHamiltonian& h, int k);

double expectation_value(const LocalHamiltonian& h, const StateVector& state);

struct HamiltonianDecision {
  Verdict verdict;
  double lambda_min;
  std::uint64_t dimension;
  int k;
};

HamiltonianDecision decide_weight_k_local_hamiltonian(const LocalHamiltonian& h, int k,
                                                      EigenMode mode = EigenMode::kAuto);

/// sum_i Z_i on n qubits; eigenvalue on |x> is n - 2 HW(x).
LocalHamiltonian sum_of_z(int n, double a, double b);

}  // namespace paraqt
