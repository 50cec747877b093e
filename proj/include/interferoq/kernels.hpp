#pragma once

#include <cstdint>

#include "interferoq/linalg.hpp"

// Hot inner loops, each in an OpenMP and a serial variant. The serial
// variants are the reference implementations the tests compare against;
// tools/bench times the two side by side. Both variants of a kernel must
// produce bit-identical results.

namespace iq::kernels {

// rho_ab *= exp(-gamma_tau * hamming(a, b))   (independent dephasing)
void damp_hamming_serial(Matrix& rho, double gamma_tau);
void damp_hamming_omp(Matrix& rho, double gamma_tau);

// rho_ab *= exp(-Gamma_tau * (m_a - m_b)^2) with m the J_z eigenvalue
// of the basis state (collective dephasing).
void damp_jz_gap_serial(Matrix& rho, double Gamma_tau, int nqubits);
void damp_jz_gap_omp(Matrix& rho, double Gamma_tau, int nqubits);

// Lindblad right-hand sides, built by applying the jump operators
// (sigma_iz per qubit, or J_z) rather than any closed-form solution.
Matrix lindblad_rhs_independent(const Matrix& rho, double gamma, int nqubits);
Matrix lindblad_rhs_collective(const Matrix& rho, double Gamma, int nqubits);

// Majority-vote failure count for n i.i.d. phase flips of probability p.
// Trials are split into fixed chunks with per-chunk seeds, so the result
// depends only on (n, p, trials, seed), not on the thread count.
std::uint64_t mc_majority_failures_serial(int n, double p, std::uint64_t trials,
                                          std::uint64_t seed);
std::uint64_t mc_majority_failures_omp(int n, double p, std::uint64_t trials,
                                       std::uint64_t seed);

}  // namespace iq::kernels
