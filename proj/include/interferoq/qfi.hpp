#pragma once

#include <functional>
#include <string>

#include "interferoq/states.hpp"

namespace iq {

// One-parameter family of density matrices chi -> rho(chi).
struct StateFamily {
  std::function<DensityMatrix(double)> evaluator;
  std::string parameter_name = "chi";
  double fd_step = 0.0;  // 0 selects the default 1e-5 * max(1, |chi|)
};

enum class QfiMethod { kGenerator, kSld, kSpectral };

struct QfiResult {
  double value = 0.0;
  QfiMethod method = QfiMethod::kSpectral;
  int support_dim = 0;
  double smallest_retained = 0.0;  // smallest eigenvalue kept in the support
  double discarded_weight = 0.0;   // eigenvalue weight dropped below support_tol
};

// Pure-state QFI: 4 (<G^2> - <G>^2).
double qfi_pure_generator(const PureState& state, const Matrix& generator);

// Symmetric logarithmic derivative L solving drho = (rho L + L rho)/2,
// built in the eigenbasis of rho; modes with p_i + p_j <= support_tol are
// projected out.
Matrix sld_operator(const DensityMatrix& rho, const Matrix& drho,
                    double support_tol = kSupportTolDefault);

// Spectral-decomposition QFI (eigen-derivatives via central differences
// after deterministic eigenvector phase alignment).
QfiResult qfi_spectral(const StateFamily& family, double chi,
                       double support_tol = kSupportTolDefault);

// SLD-route QFI: F = Tr(rho L^2) with drho from central differences.
QfiResult qfi_sld(const StateFamily& family, double chi,
                  double support_tol = kSupportTolDefault);

// Spectral route when it accepts; falls back to the SLD route when the
// spectral route refuses on (near-)degenerate support eigenvalues, where
// the SLD route is the authoritative one.
QfiResult qfi_auto(const StateFamily& family, double chi,
                   double support_tol = kSupportTolDefault);

}  // namespace iq
