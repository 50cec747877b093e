#include "interferoq/qec.hpp"

#include <cmath>
#include <limits>

#include "interferoq/dephasing.hpp"
#include "interferoq/kernels.hpp"

namespace iq {

namespace {

double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double binomial(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

double logical_error_prob(int n, double p) {
  if (n < 1 || n % 2 == 0) throw DomainError("logical_error_prob: n must be odd");
  if (p < 0.0 || p > 0.5) throw DomainError("logical_error_prob: p outside [0, 1/2]");
  const int kmax = (n - 1) / 2;
  if (n <= 9) {
    double sum = 0.0;
    for (int k = 0; k <= kmax; ++k)
      sum += binomial(n, k) * std::pow(p, n - k) * std::pow(1.0 - p, k);
    return sum;
  }
  // Log-sum-exp path; individual terms underflow for large n.
  if (p == 0.0) return 0.0;
  double max_log = -std::numeric_limits<double>::infinity();
  std::vector<double> logs(kmax + 1);
  for (int k = 0; k <= kmax; ++k) {
    logs[k] = log_binomial(n, k) + (n - k) * std::log(p) + k * std::log1p(-p);
    max_log = std::max(max_log, logs[k]);
  }
  double acc = 0.0;
  for (double lg : logs) acc += std::exp(lg - max_log);
  return std::exp(max_log) * acc;
}

double logical_qfi(const QecCode& code, double beta, double tau, double gamma) {
  code.validate();
  if (tau < 0.0 || gamma < 0.0) throw DomainError("logical_qfi: negative argument");
  const double p = single_qubit_error_prob(gamma, tau);
  const double p_l = logical_error_prob(code.block_size, p);
  const double n_total = static_cast<double>(code.total_qubits);
  return beta * beta * n_total * n_total * std::pow(tau, 4.0) *
         std::pow(1.0 - 2.0 * p_l, 2.0 * code.logical_count());
}

QcrbCurve logical_qcrb_curve(const QecCode& code, double beta, double gamma,
                             const std::vector<double>& tau_grid) {
  code.validate();
  if (tau_grid.empty()) throw DomainError("logical_qcrb_curve: empty grid");
  QcrbCurve curve;
  curve.points.resize(tau_grid.size());
  for (std::size_t i = 0; i < tau_grid.size(); ++i) {
    const double tau = tau_grid[i];
    if (tau <= 0.0 || (i > 0 && tau <= tau_grid[i - 1]))
      throw DomainError("logical_qcrb_curve: grid must be strictly increasing, positive");
    const double f = logical_qfi(code, beta, tau, gamma);
    curve.points[i] = {gamma * tau, 1.0 / std::sqrt(f / tau)};
    if (curve.points[i].qcrb < curve.points[curve.argmin].qcrb) curve.argmin = i;
  }
  return curve;
}

OptimalQubits optimal_total_qubits(int n, double p) {
  if (p <= 0.0 || p >= 0.5)
    throw DomainError("optimal_total_qubits: p must be in (0, 1/2)");
  const double p_l = logical_error_prob(n, p);
  const double decay = -std::log1p(-2.0 * p_l);  // |ln(1 - 2 p_L)|
  OptimalQubits out;
  out.closed_form = n / decay;
  // log f(N) = 2 ln N + (2N/n) ln(1-2p_L) is concave in N, so walk the
  // multiples of n until the first decrease.
  const auto log_f = [&](long long total) {
    return 2.0 * std::log(static_cast<double>(total)) -
           (2.0 * total / n) * decay;
  };
  long long best = n;
  double best_val = log_f(best);
  for (long long total = 2LL * n;; total += n) {
    const double val = log_f(total);
    if (val < best_val) break;
    best = total;
    best_val = val;
  }
  out.scan = best;
  return out;
}

double effective_dephasing(int n, double gamma, double tau) {
  if (tau <= 0.0) throw DomainError("effective_dephasing: tau <= 0");
  if (gamma < 0.0) throw DomainError("effective_dephasing: gamma < 0");
  if (n == 1) return gamma;
  const double p_l = logical_error_prob(n, single_qubit_error_prob(gamma, tau));
  if (p_l >= 0.5)
    throw DomainError("effective_dephasing: fully dephased, rate diverges");
  return -std::log1p(-2.0 * p_l) / tau;
}

double mc_logical_error_rate(int n, double p, std::uint64_t trials,
                             std::uint64_t seed) {
  if (n < 1 || n % 2 == 0) throw DomainError("mc_logical_error_rate: n must be odd");
  if (p < 0.0 || p > 1.0) throw DomainError("mc_logical_error_rate: p outside [0, 1]");
  if (trials == 0) throw DomainError("mc_logical_error_rate: no trials");
  const std::uint64_t failures = kernels::mc_majority_failures_omp(n, p, trials, seed);
  return static_cast<double>(failures) / static_cast<double>(trials);
}

}  // namespace iq
