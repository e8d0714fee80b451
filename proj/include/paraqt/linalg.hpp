#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace paraqt {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using SparseComplexMatrix = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

/// Bit ordering used everywhere: qubit 0 is the most significant bit of a
/// basis-state index over `num_qubits` qubits.
constexpr std::uint64_t qubit_mask(int qubit, int num_qubits) {
  return std::uint64_t{1} << (num_qubits - 1 - qubit);
}

bool is_hermitian(const ComplexMatrix& m, double tol = 1e-12);
bool is_unitary(const ComplexMatrix& m, double tol = 1e-10);

/// Largest singular value; used to validate declared norm bounds.
double spectral_norm(const ComplexMatrix& m);

/// Pure state on `num_qubits` qubits, 2^num_qubits amplitudes.
class StateVector {
 public:
  StateVector() : StateVector(0) {}
  explicit StateVector(int num_qubits);
  StateVector(int num_qubits, ComplexVector amplitudes);

  static StateVector basis(int num_qubits, std::uint64_t index);

  int num_qubits() const noexcept { return num_qubits_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(amps_.size()); }

  const ComplexVector& amplitudes() const noexcept { return amps_; }
  ComplexVector& amplitudes() noexcept { return amps_; }

  Complex operator[](std::size_t i) const { return amps_[static_cast<Eigen::Index>(i)]; }
  Complex& operator[](std::size_t i) { return amps_[static_cast<Eigen::Index>(i)]; }

  double norm() const { return amps_.norm(); }
  void normalize();

  /// |this> (x) |other>, with this state on the most significant qubits.
  StateVector tensor(const StateVector& other) const;

 private:
  int num_qubits_;
  ComplexVector amps_;
};

Complex inner_product(const StateVector& bra, const StateVector& ket);

}  // namespace paraqt
