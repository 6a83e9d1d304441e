#include "akltgap/linalg.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

namespace akltgap {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vector symmetric_eigenvalues(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("symmetric eigensolver failed to converge");
  return es.eigenvalues();
}

SymmetricEig symmetric_eigendecomposition(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("symmetric eigensolver failed to converge");
  return {es.eigenvalues(), es.eigenvectors()};
}

ColumnBasis orthonormal_column_basis(const Matrix& m, double rel_tol) {
  const Matrix gram = m.transpose() * m;
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("gram eigensolver failed to converge");
  const Index n = gram.rows();
  const double lam_max = std::max(es.eigenvalues()(n - 1), 0.0);
  // the Gram route cannot resolve singular-value ratios below sqrt(eps);
  // without this floor, eigensolver noise shows up as spurious rank
  const double noise = 64.0 * std::numeric_limits<double>::epsilon();
  const double cut = std::max(rel_tol * rel_tol, noise) * lam_max;

  Index rank = 0;
  for (Index i = 0; i < n; ++i)
    if (es.eigenvalues()(i) > cut) ++rank;

  ColumnBasis out;
  out.rank = rank;
  out.singular_values.resize(rank);
  Matrix v(n, rank);
  for (Index k = 0; k < rank; ++k) {
    const Index src = n - 1 - k;  // descending
    const double s = std::sqrt(std::max(es.eigenvalues()(src), 0.0));
    out.singular_values(k) = s;
    v.col(k) = es.eigenvectors().col(src) / s;
  }
  out.q.noalias() = m * v;

  // One re-orthonormalization pass; the Gram route alone can lose digits
  // when the singular values of m span many orders of magnitude.
  Matrix g2 = out.q.transpose() * out.q;
  Eigen::LLT<Matrix> llt(g2);
  if (llt.info() == Eigen::Success) {
    Matrix l = llt.matrixL();
    out.q = l.triangularView<Eigen::Lower>()
                .transpose()
                .solve<Eigen::OnTheRight>(out.q);
  }
  return out;
}

SpectrumSplit split_spectrum(const Vector& ascending, double threshold) {
  SpectrumSplit s;
  const Index n = ascending.size();
  if (n == 0) return s;
  s.max = ascending(n - 1);
  for (Index i = 0; i < n; ++i) {
    const double v = ascending(i);
    if (v < threshold) {
      ++s.kernel_count;
      s.largest_below = v;
    } else {
      s.min_above = v;
      s.has_above = true;
      break;
    }
  }
  return s;
}

}  // namespace akltgap
