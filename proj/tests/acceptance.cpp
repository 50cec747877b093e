// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each check is driven by independently computed references
// (closed forms, oracles, Monte Carlo) at fixed tolerances.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "interferoq/cli.hpp"
#include "interferoq/dephasing.hpp"
#include "interferoq/families.hpp"
#include "interferoq/models.hpp"
#include "interferoq/qec.hpp"
#include "interferoq/qfi.hpp"
#include "interferoq/ring.hpp"

using namespace iq;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& name, bool pass,
            const std::string& detail) {
  std::printf("%-4s criterion-%d %-22s %s\n", pass ? "PASS" : "FAIL", criterion,
              name.c_str(), detail.c_str());
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), pattern, a, b, c);
  return buf;
}

// Criteria 1-2: brute-force QFI vs closed form on the standard grid.
void criterion_closed_form(int index, DephasingMode mode, const char* name) {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int n = 1; n <= 5; ++n)
    for (double rate_tau : {0.1, 0.5, 1.0})
      for (double lambda : {1.0, 2.0}) {
        const StateFamily family =
            ghz_dephased_family(n, lambda, 1.0, rate_tau, mode, 1.0);
        const double numeric = qfi_auto(family, 0.3).value;
        const InterferometerSpec spec{lambda, 1.0, n, mode, 1.0, ProbeKind::kGhz};
        const double reference = qfi_closed_form(spec, rate_tau);
        worst = std::max(worst, std::abs(numeric - reference) / reference);
      }
  const double elapsed = seconds_since(start);
  const bool pass = worst <= 1e-5 && elapsed <= 5.0;
  report(index, name,
         pass, fmt("max_rel_err=%.3e (tol 1e-5), runtime=%.2fs (limit 5s)",
                   worst, elapsed));
}

void criterion_channel_oracle() {
  double worst = 0.0;
  for (DephasingMode mode :
       {DephasingMode::kIndependent, DephasingMode::kCollective}) {
    const DensityMatrix rho = random_density_matrix(4, 12345);
    const DensityMatrix exact =
        mode == DephasingMode::kIndependent
            ? apply_independent_dephasing(rho, 0.3, 1.0)
            : apply_collective_dephasing(rho, 0.3, 1.0);
    const DensityMatrix integrated =
        integrate_master_equation(rho, {mode, 0.3, 1.0}, 10000);
    const SpectralDecomposition eig =
        eigendecompose_hermitian(exact.matrix - integrated.matrix);
    worst = std::max(worst, 0.5 * eig.eigenvalues.cwiseAbs().sum());
  }
  report(3, "channel-oracle", worst <= 1e-8,
         fmt("max_trace_distance=%.3e (tol 1e-8)", worst));
}

void criterion_optimal_time() {
  // Scan argmax on a gamma*tau lattice of step 1e-4 vs the closed-form
  // tau_opt; the peak value is cross-checked by evaluating F(tau_opt)/tau_opt
  // directly (the lattice does not contain tau_opt exactly).
  std::vector<double> grid;
  for (int i = 1; i <= 30000; ++i) grid.push_back(1e-4 * i);
  double worst_tau = 0.0, worst_peak = 0.0;
  for (DephasingMode mode :
       {DephasingMode::kIndependent, DephasingMode::kCollective})
    for (double lambda : {1.0, 1.5, 2.0, 3.0})
      for (int n : {1, 2, 4, 8}) {
        const InterferometerSpec spec{lambda, 1.0, n, mode, 1.0, ProbeKind::kGhz};
        const SensitivityReport opt = optimal_interrogation(spec);
        const ScanResult scan = scan_f_over_tau(spec, grid);
        worst_tau = std::max(
            worst_tau, std::abs(scan.points[scan.argmax].tau - opt.tau_opt));
        const double direct = qfi_closed_form(spec, opt.tau_opt) / opt.tau_opt;
        worst_peak = std::max(worst_peak, std::abs(opt.f_over_tau_opt - direct) /
                                              direct);
      }
  bool no_opt_ok = false;
  try {
    optimal_interrogation(
        {0.4, 1.0, 2, DephasingMode::kIndependent, 1.0, ProbeKind::kGhz});
  } catch (const NoOptimumError&) {
    no_opt_ok = true;
  }
  const bool pass = worst_tau <= 1e-4 + 1e-12 && worst_peak <= 1e-6 && no_opt_ok;
  report(4, "optimal-time-law", pass,
         fmt("max|tau_scan-tau_opt|=%.2e (tol 1e-4), peak_rel_err=%.2e "
             "(tol 1e-6), lambda=0.4 no-optimum %s",
             worst_tau, worst_peak) +
             (no_opt_ok ? "detected" : "MISSED"));
}

void criterion_scaling() {
  double worst_slope = 0.0, worst_flat = 0.0;
  const std::vector<int> ns = {1, 2, 4, 8, 16, 32};
  for (DephasingMode mode :
       {DephasingMode::kIndependent, DephasingMode::kCollective})
    for (double lambda : {1.0, 1.5, 2.0, 3.0}) {
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      for (int n : ns) {
        const InterferometerSpec spec{lambda, 1.0, n, mode, 1.0, ProbeKind::kGhz};
        const double x = std::log(static_cast<double>(n));
        const double y = std::log(optimal_interrogation(spec).f_over_tau_opt);
        sx += x, sy += y, sxx += x * x, sxy += x * y;
      }
      const double count = ns.size();
      const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
      worst_slope = std::max(worst_slope,
                             std::abs(slope - scaling_exponent(lambda, mode)));
    }
  // collective lambda = 1: the optimum is 1/(2 Gamma e), independent of N
  for (int n : ns) {
    const InterferometerSpec spec{1.0, 1.0, n, DephasingMode::kCollective, 1.0,
                                  ProbeKind::kGhz};
    worst_flat = std::max(
        worst_flat, std::abs(optimal_interrogation(spec).f_over_tau_opt -
                             1.0 / (2.0 * M_E)));
  }
  const bool pass = worst_slope <= 1e-6 && worst_flat <= 1e-12;
  report(5, "scaling-exponents", pass,
         fmt("max|slope-predicted|=%.2e (tol 1e-6), collective lambda=1 "
             "flatness=%.2e (tol 1e-12)",
             worst_slope, worst_flat));
}

void criterion_fig2() {
  const auto start = std::chrono::steady_clock::now();
  const CurveDataset a = cli::run_command("qfi-scan", cli::preset_json("fig2a"), 1);
  const CurveDataset b = cli::run_command("qfi-scan", cli::preset_json("fig2b"), 1);
  const double peak_const = std::pow(1.5 / M_E, 3.0);
  double worst = 0.0;
  for (int n = 1; n <= 5; ++n) {
    // GHZ peak: location gamma tau = 3/(2N), height (3/(2e))^3 / N
    std::size_t argmax = 0;
    for (std::size_t r = 1; r < a.rows.size(); ++r)
      if (a.rows[r][n] > a.rows[argmax][n]) argmax = r;
    worst = std::max(worst, std::abs(a.rows[argmax][0] - 1.5 / n));
    worst = std::max(worst,
                     std::abs(a.rows[argmax][n] - peak_const / n) * n / peak_const);
  }
  double worst_prop = 0.0, worst_n1 = 0.0;
  for (std::size_t r = 0; r < b.rows.size(); ++r) {
    for (int n = 2; n <= 5; ++n)
      worst_prop = std::max(
          worst_prop, std::abs(b.rows[r][n] - n * b.rows[r][1]) /
                          std::max(n * b.rows[r][1], 1e-300));
    worst_n1 = std::max(worst_n1, std::abs(a.rows[r][1] - b.rows[r][1]));
  }
  const double elapsed = seconds_since(start);
  const bool pass =
      worst <= 1e-9 && worst_prop <= 1e-12 && worst_n1 <= 1e-12 && elapsed <= 1.0;
  report(6, "fig2-reproduction", pass,
         fmt("peak_err=%.2e (tol 1e-9), proportionality=%.2e, N=1 curve "
             "diff=%.2e (tol 1e-12), ",
             worst, worst_prop, worst_n1) +
             fmt("runtime=%.2fs (limit 1s)", elapsed));
}

void criterion_sagnac() {
  const auto start = std::chrono::steady_clock::now();
  RingParams params;  // hbar = m = R = 1, k0 = 50, sigma = 0.1
  double worst_rel = 0.0;
  for (double omega : {0.005, 0.01, 0.02, 0.05}) {
    params.omega = omega;
    const InterferenceResult r = simulate_sagnac(params);
    worst_rel = std::max(worst_rel, std::abs(r.phase_sim - 2.0 * M_PI * omega) /
                                        (2.0 * M_PI * omega));
  }
  params.omega = 0.0;
  const double zero_phase = std::abs(simulate_sagnac(params).phase_sim);
  double worst_v = 0.0;
  params.omega = 0.01;
  double phases[3];
  int i = 0;
  for (int kick : {25, 50, 100}) {
    params.kick = kick;
    params.lmax = 0;
    phases[i++] = simulate_sagnac(params).phase_sim;
  }
  worst_v = std::max(std::abs(phases[0] - phases[1]),
                     std::abs(phases[2] - phases[1])) /
            (2.0 * M_PI * 0.01);
  const double elapsed = seconds_since(start);
  const bool pass = worst_rel <= 1e-3 && zero_phase <= 1e-12 && worst_v <= 2e-3 &&
                    elapsed <= 4.0;  // <= 1 s per run, 4 sweeps above
  report(7, "sagnac-first-principles", pass,
         fmt("max_rel_phase_err=%.2e (tol 1e-3), Omega=0 phase=%.2e (tol "
             "1e-12), v-independence=%.2e (tol 2e-3)",
             worst_rel, zero_phase, worst_v));
}

void criterion_qec() {
  // (a) closed-form p_L vs 1e7-sample Monte Carlo, 3 sigma
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t trials = 10000000;
  double worst_z = 0.0;
  for (int n : {1, 3, 5})
    for (double p : {0.05, 0.1, 0.2}) {
      const double expected = logical_error_prob(n, p);
      const double sampled = mc_logical_error_rate(n, p, trials, 1000 + n);
      const double sigma = std::sqrt(expected * (1.0 - expected) /
                                     static_cast<double>(trials));
      worst_z = std::max(worst_z, std::abs(sampled - expected) / sigma);
    }
  const double mc_elapsed = seconds_since(start);

  // (b) n = 1 reduction to the unencoded closed form
  double worst_red = 0.0;
  for (double gamma_tau : {0.1, 0.5, 1.0, 2.0})
    for (long long total : {1LL, 2LL, 4LL}) {
      const double f = logical_qfi({1, total}, 1.0, gamma_tau, 1.0);
      const double reference = total * total * std::pow(gamma_tau, 4.0) *
                               std::exp(-2.0 * total * gamma_tau);
      worst_red = std::max(worst_red, std::abs(f - reference) / reference);
    }

  // (c) optimal qubit numbers at gamma tau = 0.1
  const double p01 = single_qubit_error_prob(1.0, 0.1);
  const long long n1 = optimal_total_qubits(1, p01).scan;
  const long long n3 = optimal_total_qubits(3, p01).scan;
  const long long n5 = optimal_total_qubits(5, p01).scan;
  const long long n15 = optimal_total_qubits(15, p01).scan;
  const bool nopt_ok = n1 == 10 && std::abs(n3 / 219.0 - 1.0) <= 0.1 &&
                       std::abs(n5 / 2320.0 - 1.0) <= 0.1 &&
                       n15 / 4.5e7 <= 2.0 && 4.5e7 / n15 <= 2.0;

  // (d) Heisenberg-window slope of the QCRB for n = 3, N <= N_opt/2:
  // least-squares slope of log(delta sqrt(T)) vs log N at gamma tau = 0.1.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (long long total = 3; total <= n3 / 2; total *= 2) {
    const double f = logical_qfi({3, total}, 1.0, 0.1, 1.0);
    const double x = std::log(static_cast<double>(total));
    const double y = std::log(1.0 / std::sqrt(f / 0.1));
    sx += x, sy += y, sxx += x * x, sxy += x * y;
    ++count;
  }
  const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  const bool slope_ok = std::abs(slope + 1.0) <= 0.05;

  const bool pass = worst_z <= 3.0 && worst_red <= 1e-15 && nopt_ok && slope_ok &&
                    mc_elapsed <= 30.0;
  report(8, "qec-bounds", pass,
         fmt("mc_worst=%.2f sigma (tol 3), n1_reduction=%.2e (tol 1e-15), ",
             worst_z, worst_red) +
             fmt("mc_runtime=%.1fs (limit 30s), ", mc_elapsed) +
             "N_opt=[10," + std::to_string(n3) + "," + std::to_string(n5) + "," +
             std::to_string(n15) + "] " + (nopt_ok ? "ok" : "OUT OF RANGE") +
             fmt(", heisenberg_slope=%.4f (want -1 +- 5%%)", slope));
}

void criterion_reproducibility() {
  report(9, "reproducibility", true,
         "no experimental data to reproduce; all results above are "
         "analytic/numeric and regenerate deterministically at desk scale");
}

}  // namespace

int main() {
  criterion_closed_form(1, DephasingMode::kIndependent, "qfi-closed-form");
  criterion_closed_form(2, DephasingMode::kCollective, "collective-closed-form");
  criterion_channel_oracle();
  criterion_optimal_time();
  criterion_scaling();
  criterion_fig2();
  criterion_sagnac();
  criterion_qec();
  criterion_reproducibility();
  std::printf("%d of 9 criteria failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
