#pragma once

#include <optional>
#include <vector>

#include "interferoq/dephasing.hpp"

namespace iq {

enum class ProbeKind { kGhz, kUncorrelated };

// One closed-form interferometer class: accumulated phase
// phi = prefactor * N * chi * tau^lambda under the selected dephasing mode.
struct InterferometerSpec {
  double lambda = 2.0;     // time exponent of the scale factor
  double prefactor = 1.0;  // c in phi = c N chi tau^lambda (beta for Sagnac)
  int nqubits = 1;
  DephasingMode noise_mode = DephasingMode::kIndependent;
  double noise_strength = 0.0;  // gamma or Gamma
  ProbeKind probe = ProbeKind::kGhz;

  void validate() const {
    if (lambda <= 0.0) throw DomainError("InterferometerSpec: lambda <= 0");
    if (prefactor <= 0.0) throw DomainError("InterferometerSpec: prefactor <= 0");
    if (nqubits < 1) throw DomainError("InterferometerSpec: nqubits < 1");
    if (noise_strength < 0.0) throw DomainError("InterferometerSpec: noise < 0");
  }
};

struct SensitivityReport {
  double tau_opt = 0.0;
  double f_over_tau_opt = 0.0;
  double qcrb_normalized = 0.0;  // delta_chi * sqrt(T) = 1/sqrt(F/tau)
  double scaling_exponent = 0.0;
  std::optional<double> rounds;  // nu = T/tau when a total time is given
};

// Ring geometry behind the lambda = 2, c = beta Sagnac class.
struct SagnacGeometry {
  double hbar = 1.0;
  double mass = 1.0;
  double speed = 1.0;   // v
  double radius = 1.0;  // R

  double area() const { return M_PI * radius * radius; }
  double beta() const { return 2.0 * mass * speed * speed / (M_PI * hbar); }
  // Single-particle Sagnac phase 2 m Omega A / hbar.
  double single_particle_phase(double omega) const {
    return 2.0 * mass * omega * area() / hbar;
  }
};

// phi = prefactor * N * chi * tau^lambda
double phase(const InterferometerSpec& spec, double chi, double tau);

// Noisy QFI closed forms:
//   ghz/independent:          c^2 N^2 tau^{2 lambda} e^{-2 N gamma tau}
//   ghz/collective:           c^2 N^2 tau^{2 lambda} e^{-2 N^2 Gamma tau}
//   uncorrelated/independent: c^2 N   tau^{2 lambda} e^{-2 gamma tau}
// uncorrelated/collective has no closed form and throws UnsupportedError.
double qfi_closed_form(const InterferometerSpec& spec, double tau);

// Interior maximum of F/tau over tau; requires lambda > 1/2.
SensitivityReport optimal_interrogation(const InterferometerSpec& spec);

// d log (F/tau)_opt / d log N: 3 - 2 lambda (independent), 4 (1 - lambda)
// (collective). GHZ probe only.
double scaling_exponent(double lambda, DephasingMode mode);

// delta_chi sqrt(T) = 1/sqrt(f_over_tau); with a total time also
// delta_chi = 1/sqrt(nu F) via nu = T/tau.
SensitivityReport qcrb(double f_over_tau,
                       std::optional<double> total_time = std::nullopt,
                       double tau = 0.0);

struct ScanPoint {
  double tau = 0.0;
  double f_over_tau = 0.0;
};

struct ScanResult {
  std::vector<ScanPoint> points;
  std::size_t argmax = 0;
};

// Pointwise F(tau)/tau over a strictly increasing positive grid.
ScanResult scan_f_over_tau(const InterferometerSpec& spec,
                           const std::vector<double>& tau_grid);

}  // namespace iq
