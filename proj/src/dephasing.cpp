#include "interferoq/dephasing.hpp"

#include <cmath>

#include "interferoq/kernels.hpp"

namespace iq {

DensityMatrix GhzReadoutState::to_density_matrix() const {
  const Eigen::Index dim = Eigen::Index{1} << nqubits;
  Matrix rho = Matrix::Zero(dim, dim);
  rho(0, 0) = 0.5;
  rho(dim - 1, dim - 1) = 0.5;
  rho(0, dim - 1) = 0.5 * coherence * std::polar(1.0, phase);
  rho(dim - 1, 0) = std::conj(rho(0, dim - 1));
  return DensityMatrix{std::move(rho), nqubits};
}

double single_qubit_error_prob(double gamma, double tau) {
  if (gamma < 0.0 || tau < 0.0)
    throw DomainError("single_qubit_error_prob: negative argument");
  return -0.5 * std::expm1(-gamma * tau);
}

DensityMatrix apply_independent_dephasing(const DensityMatrix& state,
                                          double gamma, double tau) {
  if (gamma < 0.0 || tau < 0.0)
    throw DomainError("apply_independent_dephasing: negative argument");
  DensityMatrix out = state;
  kernels::damp_hamming_omp(out.matrix, gamma * tau);
  return out;
}

DensityMatrix apply_collective_dephasing(const DensityMatrix& state,
                                         double Gamma, double tau) {
  if (Gamma < 0.0 || tau < 0.0)
    throw DomainError("apply_collective_dephasing: negative argument");
  DensityMatrix out = state;
  kernels::damp_jz_gap_omp(out.matrix, Gamma * tau, state.nqubits);
  return out;
}

DensityMatrix integrate_master_equation(const DensityMatrix& state,
                                        const DephasingParams& params, int steps) {
  params.validate();
  if (steps < 1) throw DomainError("integrate_master_equation: steps < 1");
  if (state.nqubits > kIntegratorMaxQubits)
    throw SizeError("integrate_master_equation: oracle limited to " +
                    std::to_string(kIntegratorMaxQubits) + " qubits");
  const int n = state.nqubits;
  const double g = params.strength;
  const auto rhs = [&](const Matrix& rho) {
    return params.mode == DephasingMode::kIndependent
               ? kernels::lindblad_rhs_independent(rho, g, n)
               : kernels::lindblad_rhs_collective(rho, g, n);
  };
  const double h = params.duration / steps;
  Matrix rho = state.matrix;
  for (int s = 0; s < steps; ++s) {
    const Matrix k1 = rhs(rho);
    const Matrix k2 = rhs(rho + 0.5 * h * k1);
    const Matrix k3 = rhs(rho + 0.5 * h * k2);
    const Matrix k4 = rhs(rho + h * k3);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return DensityMatrix{std::move(rho), n};
}

GhzReadoutState ghz_readout(int nqubits, double phase, const DephasingParams& params) {
  params.validate();
  if (nqubits < 1 || nqubits > kMaxQubits)
    throw SizeError("ghz_readout: nqubits out of range");
  const double nt = params.strength * params.duration;
  const double exponent = params.mode == DephasingMode::kIndependent
                              ? nqubits * nt
                              : static_cast<double>(nqubits) * nqubits * nt;
  return GhzReadoutState{nqubits, phase, std::exp(-exponent)};
}

}  // namespace iq
