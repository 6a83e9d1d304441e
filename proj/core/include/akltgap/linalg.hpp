#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>

namespace akltgap {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Thrown when a computation would exceed a configured dimension cap.
/// The CLI maps it to a dedicated exit code.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Matrix kron(const Matrix& a, const Matrix& b);

/// Eigenvalues of a symmetric matrix, ascending.
Vector symmetric_eigenvalues(const Matrix& m);

struct SymmetricEig {
  Vector values;  // ascending
  Matrix vectors; // columns
};
SymmetricEig symmetric_eigendecomposition(const Matrix& m);

/// Orthonormal basis of the column space of a (typically very tall) matrix.
struct ColumnBasis {
  Matrix q;               // orthonormal columns spanning col(m)
  Vector singular_values; // of m, descending, all retained columns
  Index rank;
};

/// Computed through the small Gram matrix m^T m plus one Cholesky
/// re-orthonormalization pass, so m with millions of rows and <=64 columns
/// stays cheap. Columns with singular value <= rel_tol * s_max are dropped.
ColumnBasis orthonormal_column_basis(const Matrix& m, double rel_tol = 1e-10);

/// min eigenvalue >= threshold together with kernel bookkeeping.
struct SpectrumSplit {
  std::int64_t kernel_count = 0;     // eigenvalues below threshold
  double largest_below = 0.0;        // largest eigenvalue below threshold (0 if none)
  double min_above = 0.0;            // smallest eigenvalue >= threshold
  bool has_above = false;
  double max = 0.0;
};
SpectrumSplit split_spectrum(const Vector& ascending, double threshold);

}  // namespace akltgap
