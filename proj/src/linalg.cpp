#include "interferoq/linalg.hpp"

#include <algorithm>

namespace iq {

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(max_abs(m), 1.0);
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

bool is_diagonal(const Matrix& m, double tol) {
  const double scale = std::max(max_abs(m), 1.0);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (i != j && std::abs(m(i, j)) > tol * scale) return false;
  return true;
}

int SpectralDecomposition::support_dim() const {
  int d = 0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i)
    if (eigenvalues[i] > support_tol) ++d;
  return d;
}

double SpectralDecomposition::discarded_weight() const {
  double w = 0.0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i)
    if (eigenvalues[i] <= support_tol) w += std::abs(eigenvalues[i]);
  return w;
}

SpectralDecomposition eigendecompose_hermitian(const Matrix& m, double support_tol) {
  if (!is_hermitian(m))
    throw SymmetryError("eigendecompose_hermitian: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> solver((m + m.adjoint()) / 2.0);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecompose_hermitian: solver failed");
  SpectralDecomposition out;
  out.support_tol = support_tol;
  const Eigen::Index n = m.rows();
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  // Eigen returns ascending order; flip to descending.
  for (Eigen::Index i = 0; i < n; ++i) {
    out.eigenvalues[i] = solver.eigenvalues()[n - 1 - i];
    out.eigenvectors.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  return out;
}

}  // namespace iq
