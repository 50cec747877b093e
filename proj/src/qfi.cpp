#include "interferoq/qfi.hpp"

#include <cmath>

namespace iq {

namespace {

double default_step(double chi) { return 1e-5 * std::max(1.0, std::abs(chi)); }

// Multiply v by the phase making component `pivot` real positive.
void align_phase(Vector& v, Eigen::Index pivot) {
  const Complex c = v[pivot];
  if (std::abs(c) > 0.0) v *= std::conj(c) / std::abs(c);
}

Eigen::Index argmax_abs(const Vector& v) {
  Eigen::Index k = 0;
  v.cwiseAbs().maxCoeff(&k);
  return k;
}

}  // namespace

double qfi_pure_generator(const PureState& state, const Matrix& generator) {
  if (!is_hermitian(generator))
    throw SymmetryError("qfi_pure_generator: generator not Hermitian");
  const Vector gpsi = generator * state.amplitudes;
  const double mean = state.amplitudes.dot(gpsi).real();
  const double mean_sq = gpsi.squaredNorm();
  return 4.0 * (mean_sq - mean * mean);
}

Matrix sld_operator(const DensityMatrix& rho, const Matrix& drho,
                    double support_tol) {
  if (!is_hermitian(drho))
    throw SymmetryError("sld_operator: drho not Hermitian");
  if (std::abs(drho.trace()) > 1e-9)
    throw DomainError("sld_operator: drho trace nonzero; not a state derivative");
  const SpectralDecomposition eig = eigendecompose_hermitian(rho.matrix, support_tol);
  const Matrix d_eig = eig.eigenvectors.adjoint() * drho * eig.eigenvectors;
  const Eigen::Index dim = rho.dim();
  Matrix l_eig = Matrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) {
      const double psum = eig.eigenvalues[i] + eig.eigenvalues[j];
      if (psum > support_tol) l_eig(i, j) = 2.0 * d_eig(i, j) / psum;
    }
  Matrix l = eig.eigenvectors * l_eig * eig.eigenvectors.adjoint();
  return (l + Matrix(l.adjoint())) / 2.0;
}

QfiResult qfi_spectral(const StateFamily& family, double chi, double support_tol) {
  const double h = family.fd_step > 0.0 ? family.fd_step : default_step(chi);
  const DensityMatrix rho0 = family.evaluator(chi);
  const DensityMatrix rho_p = family.evaluator(chi + h);
  const DensityMatrix rho_m = family.evaluator(chi - h);
  SpectralDecomposition e0 = eigendecompose_hermitian(rho0.matrix, support_tol);
  SpectralDecomposition ep = eigendecompose_hermitian(rho_p.matrix, support_tol);
  SpectralDecomposition em = eigendecompose_hermitian(rho_m.matrix, support_tol);

  const int d = e0.support_dim();
  QfiResult out;
  out.method = QfiMethod::kSpectral;
  out.support_dim = d;
  out.discarded_weight = e0.discarded_weight();
  out.smallest_retained = d > 0 ? e0.eigenvalues[d - 1] : 0.0;

  // Descending order must be stable across the stencil; a crossing or a
  // degeneracy inside the support invalidates the eigenvector differences.
  for (int i = 0; i + 1 < d; ++i) {
    if (e0.eigenvalues[i] - e0.eigenvalues[i + 1] <=
        std::max({100.0 * support_tol, 10.0 * h, 1e-3}))
      throw StencilError(
          "qfi_spectral: (near-)degenerate support eigenvalues; use qfi_sld "
          "or a smaller fd_step");
  }
  for (int i = 0; i < d; ++i) {
    const double op = std::abs(e0.eigenvectors.col(i).dot(ep.eigenvectors.col(i)));
    const double om = std::abs(e0.eigenvectors.col(i).dot(em.eigenvectors.col(i)));
    if (op < 0.99 || om < 0.99)
      throw StencilError(
          "qfi_spectral: eigenvalue ordering mismatch across the stencil; "
          "reduce fd_step");
  }

  double f = 0.0;
  std::vector<Vector> dpsi(d);
  std::vector<Vector> psi(d);
  for (int i = 0; i < d; ++i) {
    Vector v0 = e0.eigenvectors.col(i);
    Vector vp = ep.eigenvectors.col(i);
    Vector vm = em.eigenvectors.col(i);
    const Eigen::Index pivot = argmax_abs(v0);
    align_phase(v0, pivot);
    align_phase(vp, pivot);
    align_phase(vm, pivot);
    psi[i] = v0;
    dpsi[i] = (vp - vm) / (2.0 * h);
    const double dp = (ep.eigenvalues[i] - em.eigenvalues[i]) / (2.0 * h);
    f += dp * dp / e0.eigenvalues[i];
    f += 4.0 * e0.eigenvalues[i] * dpsi[i].squaredNorm();
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const double pi = e0.eigenvalues[i], pj = e0.eigenvalues[j];
      const double overlap = std::norm(psi[i].dot(dpsi[j]));
      f -= 8.0 * pi * pj / (pi + pj) * overlap;
    }
  out.value = std::max(f, 0.0);
  return out;
}

QfiResult qfi_sld(const StateFamily& family, double chi, double support_tol) {
  const double h = family.fd_step > 0.0 ? family.fd_step : default_step(chi);
  const DensityMatrix rho0 = family.evaluator(chi);
  const Matrix drho =
      (family.evaluator(chi + h).matrix - family.evaluator(chi - h).matrix) /
      (2.0 * h);
  const Matrix l = sld_operator(rho0, (drho + Matrix(drho.adjoint())) / 2.0,
                                support_tol);
  const SpectralDecomposition eig = eigendecompose_hermitian(rho0.matrix, support_tol);
  QfiResult out;
  out.method = QfiMethod::kSld;
  out.support_dim = eig.support_dim();
  out.discarded_weight = eig.discarded_weight();
  out.smallest_retained =
      out.support_dim > 0 ? eig.eigenvalues[out.support_dim - 1] : 0.0;
  out.value = std::max((rho0.matrix * l * l).trace().real(), 0.0);
  return out;
}

QfiResult qfi_auto(const StateFamily& family, double chi, double support_tol) {
  try {
    return qfi_spectral(family, chi, support_tol);
  } catch (const StencilError&) {
    return qfi_sld(family, chi, support_tol);
  }
}

}  // namespace iq
