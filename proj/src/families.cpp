#include "interferoq/families.hpp"

#include <cmath>

namespace iq {

StateFamily ghz_dephased_family(int nqubits, double lambda, double prefactor,
                                double tau, DephasingMode mode, double strength) {
  StateFamily family;
  family.parameter_name = "chi";
  family.evaluator = [=, ghz = density_from_pure(ghz_state(nqubits)),
                      jz = collective_jz(nqubits)](double chi) {
    const double angle = prefactor * chi * std::pow(tau, lambda);
    DensityMatrix encoded = phase_gate(ghz, angle, jz);
    return mode == DephasingMode::kIndependent
               ? apply_independent_dephasing(encoded, strength, tau)
               : apply_collective_dephasing(encoded, strength, tau);
  };
  return family;
}

StateFamily ghz_rotation_family(int nqubits) {
  StateFamily family;
  family.parameter_name = "chi";
  family.evaluator = [ghz = density_from_pure(ghz_state(nqubits)),
                      jz = collective_jz(nqubits)](double chi) {
    return phase_gate(ghz, chi, jz);
  };
  return family;
}

}  // namespace iq
