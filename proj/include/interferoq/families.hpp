#pragma once

#include "interferoq/dephasing.hpp"
#include "interferoq/models.hpp"
#include "interferoq/qfi.hpp"

namespace iq {

// chi -> dephase(U(phi) |GHZ><GHZ| U^dag) with per-qubit phase gate angle
// prefactor * chi * tau^lambda (relative GHZ phase prefactor * N * chi *
// tau^lambda), as a full 2^N x 2^N matrix family for the brute-force QFI
// routes. Gate and channel commute; the channel is applied last.
StateFamily ghz_dephased_family(int nqubits, double lambda, double prefactor,
                                double tau, DephasingMode mode, double strength);

// Pure family exp(-i chi Jz) |GHZ>.
StateFamily ghz_rotation_family(int nqubits);

}  // namespace iq
