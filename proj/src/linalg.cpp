#include <paraqt/errors.hpp>
#include <paraqt/linalg.hpp>

#include <Eigen/SVD>

#include <string>

namespace paraqt {

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
    }
  }
  return true;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const ComplexMatrix gram = m.adjoint() * m;
  return (gram - ComplexMatrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= tol;
}

double spectral_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 0 || num_qubits > 30) {
    throw ResourceError("state vector qubit count out of range: " + std::to_string(num_qubits));
  }
  amps_ = ComplexVector::Zero(Eigen::Index{1} << num_qubits);
  amps_[0] = 1.0;
}

StateVector::StateVector(int num_qubits, ComplexVector amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
  if (num_qubits < 0 || num_qubits > 30) {
    throw ResourceError("state vector qubit count out of range: " + std::to_string(num_qubits));
  }
  if (amps_.size() != (Eigen::Index{1} << num_qubits)) {
    throw InvalidInput("state vector needs 2^" + std::to_string(num_qubits) + " amplitudes, got " +
                       std::to_string(amps_.size()));
  }
}

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
  StateVector s(num_qubits);
  if (index >= s.dim()) throw InvalidInput("basis index out of range");
  s.amps_.setZero();
  s.amps_[static_cast<Eigen::Index>(index)] = 1.0;
  return s;
}

void StateVector::normalize() {
  const double n = norm();
  if (n == 0.0) throw InvalidInput("cannot normalize the zero vector");
  amps_ /= n;
}

StateVector StateVector::tensor(const StateVector& other) const {
  ComplexVector out(amps_.size() * other.amps_.size());
  for (Eigen::Index i = 0; i < amps_.size(); ++i) {
    out.segment(i * other.amps_.size(), other.amps_.size()) = amps_[i] * other.amps_;
  }
  return StateVector(num_qubits_ + other.num_qubits_, std::move(out));
}

Complex inner_product(const StateVector& bra, const StateVector& ket) {
  if (bra.num_qubits() != ket.num_qubits()) throw InvalidInput("inner product of states on different registers");
  return bra.amplitudes().dot(ket.amplitudes());
}

}  // namespace paraqt
