#include "interferoq/states.hpp"

#include <bit>
#include <cmath>
#include <random>

namespace iq {

namespace {

void check_nqubits(int nqubits) {
  if (nqubits < 1 || nqubits > kMaxQubits)
    throw SizeError("nqubits must be in [1, " + std::to_string(kMaxQubits) +
                    "], got " + std::to_string(nqubits));
}

}  // namespace

void DensityMatrix::validate() const {
  if (matrix.rows() != matrix.cols() || matrix.rows() != (Eigen::Index{1} << nqubits))
    throw SizeError("DensityMatrix: dimension does not match nqubits");
  if (std::abs(matrix.trace() - Complex{1.0}) > kTraceTol)
    throw DomainError("DensityMatrix: trace deviates from 1");
  if (!is_hermitian(matrix))
    throw SymmetryError("DensityMatrix: not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kTraceTol)
    throw DomainError("DensityMatrix: negative eigenvalue");
}

DensityMatrix density_from_pure(const PureState& psi) {
  return DensityMatrix{psi.density_matrix(), psi.nqubits};
}

PureState ghz_state(int nqubits) {
  check_nqubits(nqubits);
  const Eigen::Index dim = Eigen::Index{1} << nqubits;
  PureState psi{Vector::Zero(dim), nqubits};
  psi.amplitudes[0] = 1.0 / std::sqrt(2.0);
  psi.amplitudes[dim - 1] = 1.0 / std::sqrt(2.0);
  return psi;
}

PureState product_plus_state(int nqubits) {
  check_nqubits(nqubits);
  const Eigen::Index dim = Eigen::Index{1} << nqubits;
  const double amp = std::pow(2.0, -0.5 * nqubits);
  return PureState{Vector::Constant(dim, Complex{amp}), nqubits};
}

Matrix collective_jz(int nqubits) {
  check_nqubits(nqubits);
  const Eigen::Index dim = Eigen::Index{1} << nqubits;
  Matrix jz = Matrix::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    const int ones = std::popcount(static_cast<unsigned long long>(b));
    jz(b, b) = (nqubits - 2 * ones) / 2.0;
  }
  return jz;
}

DensityMatrix phase_gate(const DensityMatrix& state, double phase,
                         const Matrix& generator) {
  if (!is_diagonal(generator))
    throw SymmetryError("phase_gate: generator must be diagonal in the computational basis");
  if (generator.rows() != state.dim())
    throw SizeError("phase_gate: generator dimension mismatch");
  const Eigen::Index dim = state.dim();
  DensityMatrix out{Matrix(dim, dim), state.nqubits};
  // rho_ab -> exp(-i phase (g_a - g_b)) rho_ab
  for (Eigen::Index a = 0; a < dim; ++a)
    for (Eigen::Index b = 0; b < dim; ++b) {
      const double gap = generator(a, a).real() - generator(b, b).real();
      out.matrix(a, b) = std::polar(1.0, -phase * gap) * state.matrix(a, b);
    }
  return out;
}

DensityMatrix random_density_matrix(int nqubits, std::uint64_t seed) {
  check_nqubits(nqubits);
  const Eigen::Index dim = Eigen::Index{1} << nqubits;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) g(i, j) = Complex{gauss(rng), gauss(rng)};
  Matrix rho = g * g.adjoint();
  rho /= rho.trace();
  return DensityMatrix{std::move(rho), nqubits};
}

}  // namespace iq
