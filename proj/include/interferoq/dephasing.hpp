#pragma once

#include "interferoq/states.hpp"

namespace iq {

enum class DephasingMode { kIndependent, kCollective };

struct DephasingParams {
  DephasingMode mode = DephasingMode::kIndependent;
  double strength = 0.0;  // gamma (independent) or Gamma (collective), 1/time
  double duration = 0.0;  // tau

  void validate() const {
    if (strength < 0.0) throw DomainError("DephasingParams: strength < 0");
    if (duration < 0.0) throw DomainError("DephasingParams: duration < 0");
  }
};

// Dephased GHZ state in its effective 2x2 block:
// rho = [|0..0><0..0| + |1..1><1..1| + (c e^{i phi} |0..0><1..1| + h.c.)] / 2
struct GhzReadoutState {
  int nqubits = 0;
  double phase = 0.0;
  double coherence = 1.0;  // in [0, 1]

  DensityMatrix to_density_matrix() const;
};

// p(tau) = (1 - e^{-gamma tau}) / 2
double single_qubit_error_prob(double gamma, double tau);

// Exact CPTP solution of per-qubit dephasing: the tensor-product Kraus map,
// equivalently rho_ab *= exp(-gamma tau * hamming(a, b)).
DensityMatrix apply_independent_dephasing(const DensityMatrix& state,
                                          double gamma, double tau);

// Exact solution of collective J_z dephasing:
// rho_ab *= exp(-Gamma tau (m_a - m_b)^2).
DensityMatrix apply_collective_dephasing(const DensityMatrix& state,
                                         double Gamma, double tau);

// Fixed-step RK4 integration of the selected Lindblad generator.
// Cross-check oracle only; the exact maps above are the production path.
inline constexpr int kIntegratorMaxQubits = 8;
DensityMatrix integrate_master_equation(const DensityMatrix& state,
                                        const DephasingParams& params, int steps);

GhzReadoutState ghz_readout(int nqubits, double phase, const DephasingParams& params);

}  // namespace iq
