#include <paraqt/eigensolver.hpp>
#include <paraqt/errors.hpp>
#include <paraqt/rng.hpp>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <string>

namespace paraqt {
namespace {

void require_hermitian(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("matrix is not square");
  if (!is_hermitian(m, 1e-10)) throw InvalidInput("matrix is not Hermitian");
}

void require_hermitian(const SparseComplexMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("matrix is not square");
  const SparseComplexMatrix diff = m - SparseComplexMatrix(m.adjoint());
  for (Eigen::Index k = 0; k < diff.outerSize(); ++k) {
    for (SparseComplexMatrix::InnerIterator it(diff, k); it; ++it) {
      if (std::abs(it.value()) > 1e-10) throw InvalidInput("matrix is not Hermitian");
    }
  }
}

double dense_min(const ComplexMatrix& m) {
  if (m.rows() == 0) throw InvalidInput("empty matrix has no eigenvalues");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw ConvergenceError("dense eigensolver failed", std::nan(""));
  return es.eigenvalues()(0);
}

}  // namespace

double lanczos_min_eigenvalue(const LinearOperator& apply, std::size_t dim, const LanczosOptions& options) {
  if (dim == 0) throw InvalidInput("empty operator has no eigenvalues");
  const std::size_t cap = options.max_iterations ? options.max_iterations : 10 * dim;
  const auto n = static_cast<Eigen::Index>(dim);

  ComplexVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto u = static_cast<std::uint64_t>(i);
    v[i] = Complex(Philox::uniform(options.start_seed, 0, u) - 0.5, Philox::uniform(options.start_seed, 1, u) - 0.5);
  }
  v.normalize();

  std::vector<ComplexVector> basis;
  std::vector<double> alpha;
  std::vector<double> beta;
  ComplexVector w(n);
  double previous = std::numeric_limits<double>::infinity();
  double best = previous;

  for (std::size_t iter = 0; iter < cap; ++iter) {
    basis.push_back(v);
    apply(v, w);
    const double a = v.dot(w).real();
    alpha.push_back(a);
    w -= a * v;
    if (iter > 0) w -= beta.back() * basis[iter - 1];
    // Full reorthogonalization, twice for stability.
    for (int pass = 0; pass < 2; ++pass) {
      for (const ComplexVector& q : basis) w -= q.dot(w) * q;
    }
    const double b = w.norm();

    const auto m = static_cast<Eigen::Index>(alpha.size());
    Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), m);
    Eigen::VectorXd sub = m > 1 ? Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(beta.data(), m - 1))
                                : Eigen::VectorXd(0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    const double theta = tri.eigenvalues()(0);
    const double residual = b * std::abs(tri.eigenvectors()(m - 1, 0));
    best = theta;

    const bool invariant = b <= 1e-12 * std::max(1.0, std::abs(theta));
    if (invariant || static_cast<std::size_t>(m) == dim) return theta;
    if (std::abs(theta - previous) < options.tolerance && residual < 1e-9) return theta;
    previous = theta;

    beta.push_back(b);
    v = w / b;
  }
  throw ConvergenceError("Lanczos did not converge within " + std::to_string(cap) + " iterations", best);
}

double min_eigenvalue(const ComplexMatrix& matrix, EigenMode mode) {
  require_hermitian(matrix);
  const auto dim = static_cast<std::size_t>(matrix.rows());
  if (mode == EigenMode::kDense || (mode == EigenMode::kAuto && dim <= kDenseThreshold)) return dense_min(matrix);
  return lanczos_min_eigenvalue([&](const ComplexVector& in, ComplexVector& out) { out.noalias() = matrix * in; },
                                dim);
}

double min_eigenvalue(const SparseComplexMatrix& matrix, EigenMode mode) {
  require_hermitian(matrix);
  const auto dim = static_cast<std::size_t>(matrix.rows());
  if (mode == EigenMode::kDense || (mode == EigenMode::kAuto && dim <= kDenseThreshold)) {
    return dense_min(ComplexMatrix(matrix));
  }
  return lanczos_min_eigenvalue([&](const ComplexVector& in, ComplexVector& out) { out.noalias() = matrix * in; },
                                dim);
}

std::vector<double> full_spectrum(const ComplexMatrix& matrix) {
  if (static_cast<std::size_t>(matrix.rows()) > kDenseThreshold) {
    throw ResourceError("full_spectrum limited to dimension " + std::to_string(kDenseThreshold));
  }
  require_hermitian(matrix);
  if (matrix.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(matrix, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double max_eigenvalue(const ComplexMatrix& matrix) {
  require_hermitian(matrix);
  if (matrix.rows() == 0) throw InvalidInput("empty matrix has no eigenvalues");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(matrix, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(es.eigenvalues().size() - 1);
}

}  // namespace paraqt
