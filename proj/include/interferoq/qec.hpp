#pragma once

#include <cstdint>
#include <vector>

#include "interferoq/errors.hpp"

namespace iq {

// Phase-flip repetition code: n physical qubits per logical block (n odd),
// N total physical qubits, N/n logical qubits.
struct QecCode {
  int block_size = 1;      // n
  long long total_qubits = 1;  // N, multiple of n

  void validate() const {
    if (block_size < 1 || block_size % 2 == 0)
      throw DomainError("QecCode: block size must be odd and positive");
    if (total_qubits < 1 || total_qubits % block_size != 0)
      throw DomainError("QecCode: total qubits must be a positive multiple of n");
  }
  long long logical_count() const { return total_qubits / block_size; }
};

// p_L = sum_{k=0}^{(n-1)/2} C(n,k) p^{n-k} (1-p)^k  (majority-vote failure).
// Exact term-by-term for n <= 9; log-space (log-binomial + log-sum-exp)
// above that.
double logical_error_prob(int n, double p);

// F_L = beta^2 N^2 tau^4 (1 - 2 p_L)^{2N/n} with p = (1 - e^{-gamma tau})/2.
double logical_qfi(const QecCode& code, double beta, double tau, double gamma);

struct QcrbPoint {
  double gamma_tau = 0.0;
  double qcrb = 0.0;  // delta_Omega sqrt(T) = 1/sqrt(F_L/tau)
};

struct QcrbCurve {
  std::vector<QcrbPoint> points;
  std::size_t argmin = 0;
};

QcrbCurve logical_qcrb_curve(const QecCode& code, double beta, double gamma,
                             const std::vector<double>& tau_grid);

struct OptimalQubits {
  long long scan = 0;     // argmax over N in {n, 2n, ...} of N^2 (1-2p_L)^{2N/n}
  double closed_form = 0.0;  // n / |ln(1 - 2 p_L)|
};

OptimalQubits optimal_total_qubits(int n, double p);

// Rate whose exponential decay reproduces the logical coherence at tau:
// gamma_eff = -ln(1 - 2 p_L(tau)) / tau; returns gamma exactly for n = 1.
double effective_dephasing(int n, double gamma, double tau);

// Monte-Carlo oracle: majority-vote failure frequency over `trials` samples
// of n i.i.d. phase flips with probability p. Deterministic in (seed, trials).
double mc_logical_error_rate(int n, double p, std::uint64_t trials,
                             std::uint64_t seed);

}  // namespace iq
