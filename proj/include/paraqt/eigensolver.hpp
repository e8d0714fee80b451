#pragma once

#include <paraqt/linalg.hpp>

#include <cstddef>
#include <functional>
#include <vector>

namespace paraqt {

enum class EigenMode { kDense, kIterative, kAuto };

/// Dimension at or below which dense diagonalization is used in kAuto mode,
/// and the ceiling for full_spectrum.
inline constexpr std::size_t kDenseThreshold = 2048;

struct LanczosOptions {
  double tolerance = 1e-10;       // on successive lowest Ritz values
  std::size_t max_iterations = 0;  // 0 means 10 * dim
  std::uint64_t start_seed = 0x5eed;
};

/// Smallest eigenvalue of a Hermitian matrix.
/// Throws InvalidInput for non-Hermitian input, ConvergenceError if Lanczos
/// does not settle within its cap.
double min_eigenvalue(const ComplexMatrix& matrix, EigenMode mode = EigenMode::kAuto);
double min_eigenvalue(const SparseComplexMatrix& matrix, EigenMode mode = EigenMode::kAuto);

/// Lanczos with full reorthogonalization against an abstract Hermitian operator.
using LinearOperator = std::function<void(const ComplexVector& in, ComplexVector& out)>;
double lanczos_min_eigenvalue(const LinearOperator& apply, std::size_t dim,
                              const LanczosOptions& options = {});

/// All eigenvalues, ascending. ResourceError above kDenseThreshold.
std::vector<double> full_spectrum(const ComplexMatrix& matrix);

double max_eigenvalue(const ComplexMatrix& matrix);

}  // namespace paraqt
