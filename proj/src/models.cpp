#include "interferoq/models.hpp"

#include <cmath>

namespace iq {

double phase(const InterferometerSpec& spec, double chi, double tau) {
  spec.validate();
  if (tau < 0.0) throw DomainError("phase: tau < 0");
  return spec.prefactor * spec.nqubits * chi * std::pow(tau, spec.lambda);
}

double qfi_closed_form(const InterferometerSpec& spec, double tau) {
  spec.validate();
  if (tau < 0.0) throw DomainError("qfi_closed_form: tau < 0");
  const double c = spec.prefactor;
  const double n = spec.nqubits;
  const double t2l = std::pow(tau, 2.0 * spec.lambda);
  if (spec.probe == ProbeKind::kGhz) {
    const double rate = spec.noise_mode == DephasingMode::kIndependent
                            ? 2.0 * n * spec.noise_strength
                            : 2.0 * n * n * spec.noise_strength;
    return c * c * n * n * t2l * std::exp(-rate * tau);
  }
  if (spec.noise_mode == DephasingMode::kCollective)
    throw UnsupportedError(
        "qfi_closed_form: no closed form for uncorrelated probes under "
        "collective dephasing");
  return c * c * n * t2l * std::exp(-2.0 * spec.noise_strength * tau);
}

SensitivityReport optimal_interrogation(const InterferometerSpec& spec) {
  spec.validate();
  const double lambda = spec.lambda;
  if (lambda <= 0.5)
    throw NoOptimumError("optimal_interrogation: requires lambda > 1/2");
  if (spec.probe == ProbeKind::kUncorrelated &&
      spec.noise_mode == DephasingMode::kCollective)
    throw UnsupportedError(
        "optimal_interrogation: uncorrelated + collective unsupported");
  if (spec.noise_strength <= 0.0)
    throw NoOptimumError("optimal_interrogation: noiseless F/tau is unbounded");

  const double c = spec.prefactor;
  const double n = spec.nqubits;
  const double q = 2.0 * lambda - 1.0;
  const double rate = spec.noise_strength;
  SensitivityReport report;
  if (spec.probe == ProbeKind::kGhz && spec.noise_mode == DephasingMode::kIndependent) {
    report.tau_opt = q / (2.0 * n * rate);
    report.f_over_tau_opt =
        c * c * std::pow(n, 3.0 - 2.0 * lambda) * std::pow(q / (2.0 * rate * M_E), q);
    report.scaling_exponent = 3.0 - 2.0 * lambda;
  } else if (spec.probe == ProbeKind::kGhz) {
    report.tau_opt = q / (2.0 * n * n * rate);
    report.f_over_tau_opt =
        c * c * std::pow(n, 4.0 * (1.0 - lambda)) * std::pow(q / (2.0 * rate * M_E), q);
    report.scaling_exponent = 4.0 * (1.0 - lambda);
  } else {
    report.tau_opt = q / (2.0 * rate);
    report.f_over_tau_opt = c * c * n * std::pow(q / (2.0 * rate * M_E), q);
    report.scaling_exponent = 1.0;
  }
  report.qcrb_normalized = 1.0 / std::sqrt(report.f_over_tau_opt);
  return report;
}

double scaling_exponent(double lambda, DephasingMode mode) {
  if (lambda <= 0.5) throw NoOptimumError("scaling_exponent: requires lambda > 1/2");
  return mode == DephasingMode::kIndependent ? 3.0 - 2.0 * lambda
                                             : 4.0 * (1.0 - lambda);
}

SensitivityReport qcrb(double f_over_tau, std::optional<double> total_time,
                       double tau) {
  if (f_over_tau <= 0.0) throw DomainError("qcrb: f_over_tau <= 0");
  SensitivityReport report;
  report.f_over_tau_opt = f_over_tau;
  report.qcrb_normalized = 1.0 / std::sqrt(f_over_tau);
  if (total_time) {
    if (tau <= 0.0 || *total_time < tau)
      throw DomainError("qcrb: need 0 < tau <= total_time");
    report.tau_opt = tau;
    report.rounds = *total_time / tau;
  }
  return report;
}

ScanResult scan_f_over_tau(const InterferometerSpec& spec,
                           const std::vector<double>& tau_grid) {
  spec.validate();
  if (tau_grid.empty()) throw DomainError("scan_f_over_tau: empty grid");
  for (std::size_t i = 0; i < tau_grid.size(); ++i) {
    if (tau_grid[i] <= 0.0 || (i > 0 && tau_grid[i] <= tau_grid[i - 1]))
      throw DomainError("scan_f_over_tau: grid must be strictly increasing and positive");
  }
  ScanResult out;
  out.points.resize(tau_grid.size());
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < tau_grid.size(); ++i) {
    const double tau = tau_grid[i];
    out.points[i] = {tau, qfi_closed_form(spec, tau) / tau};
  }
  for (std::size_t i = 1; i < out.points.size(); ++i)
    if (out.points[i].f_over_tau > out.points[out.argmax].f_over_tau) out.argmax = i;
  return out;
}

}  // namespace iq
