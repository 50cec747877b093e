#include "interferoq/cli.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "json.hpp"

#include "interferoq/families.hpp"
#include "interferoq/qec.hpp"
#include "interferoq/ring.hpp"

namespace iq::cli {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------- presets

const std::map<std::string, const char*> kPresets = {
    // Fig. 2(a): GHZ probe, lambda = 2, independent dephasing. The
    // gamma*tau range (0, 3] covers every peak, and step 0.005 puts each
    // tau_opt = 3/(2N) exactly on the grid.
    {"fig2a", R"({
      "command": "qfi-scan",
      "probe": "ghz", "lambda": 2.0, "prefactor": 1.0,
      "nqubits": [1, 2, 3, 4, 5], "noise_mode": "independent",
      "grid": {"start": 0.005, "stop": 3.0, "count": 600, "scale": "linear"}
    })"},
    // Fig. 2(b): same grid, uncorrelated qubits.
    {"fig2b", R"({
      "command": "qfi-scan",
      "probe": "uncorrelated", "lambda": 2.0, "prefactor": 1.0,
      "nqubits": [1, 2, 3, 4, 5], "noise_mode": "independent",
      "grid": {"start": 0.005, "stop": 3.0, "count": 600, "scale": "linear"}
    })"},
    // Fig. 3(a): QCRB vs gamma*tau at fixed N = 15.
    {"fig3a", R"({
      "command": "qec-curves",
      "panel": "a", "block_sizes": [1, 3, 5, 15], "beta": 1.0,
      "total_qubits": 15,
      "grid": {"start": 0.01, "stop": 10.0, "count": 400, "scale": "log"}
    })"},
    // Fig. 3(b): QCRB vs N at gamma*tau = 0.1. Per-block multipliers are
    // log-spaced so every n-curve resolves its own N_opt.
    {"fig3b", R"({
      "command": "qec-curves",
      "panel": "b", "block_sizes": [1, 3, 5, 15], "beta": 1.0,
      "gamma_tau": 0.1,
      "multiplier_grid": {"start": 1, "stop": 10000000, "count": 120, "scale": "log"}
    })"},
    {"sagnac-default", R"({
      "command": "sagnac-sim",
      "hbar": 1.0, "mass": 1.0, "radius": 1.0, "kick": 50, "sigma": 0.1,
      "omega_grid": {"start": 0.0, "stop": 0.05, "count": 11, "scale": "linear"}
    })"},
    {"scaling-default", R"({
      "command": "scaling-table",
      "lambdas": [0.4, 1.0, 1.5, 2.0, 3.0],
      "noise_modes": ["independent", "collective"],
      "nqubits": [1, 2, 4, 8, 16, 32],
      "prefactor": 1.0, "strength": 1.0
    })"}};

// ------------------------------------------------------------ config utils

[[noreturn]] void config_fail(const std::string& path, const std::string& what) {
  throw ConfigError(path + ": " + what);
}

double get_number(const json& j, const std::string& scope, const std::string& key,
                  double fallback = std::nan(""), bool required = false) {
  if (!j.contains(key)) {
    if (required) config_fail(scope + "." + key, "missing required field");
    return fallback;
  }
  if (!j[key].is_number()) config_fail(scope + "." + key, "expected a number");
  return j[key].get<double>();
}

std::string get_string(const json& j, const std::string& scope, const std::string& key,
                       const std::string& fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_string()) config_fail(scope + "." + key, "expected a string");
  return j[key].get<std::string>();
}

DephasingMode parse_mode(const std::string& text, const std::string& path) {
  if (text == "independent") return DephasingMode::kIndependent;
  if (text == "collective") return DephasingMode::kCollective;
  config_fail(path, "expected 'independent' or 'collective', got '" + text + "'");
}

struct GridSpec {
  double start = 0.0;
  double stop = 1.0;
  int count = 2;
  bool log_scale = false;

  std::vector<double> values() const {
    std::vector<double> v(count);
    if (log_scale) {
      const double la = std::log(start), lb = std::log(stop);
      for (int i = 0; i < count; ++i)
        v[i] = std::exp(la + (lb - la) * i / (count - 1));
    } else {
      for (int i = 0; i < count; ++i)
        v[i] = start + (stop - start) * i / (count - 1);
    }
    return v;
  }
};

GridSpec parse_grid(const json& j, const std::string& scope, const std::string& key) {
  if (!j.contains(key)) config_fail(scope + "." + key, "missing required field");
  const json& g = j[key];
  const std::string path = scope + "." + key;
  GridSpec grid;
  grid.start = get_number(g, path, "start", std::nan(""), true);
  grid.stop = get_number(g, path, "stop", std::nan(""), true);
  grid.count = static_cast<int>(get_number(g, path, "count", std::nan(""), true));
  const std::string scale = get_string(g, path, "scale", "linear");
  if (scale != "linear" && scale != "log")
    config_fail(path + ".scale", "expected 'linear' or 'log'");
  grid.log_scale = scale == "log";
  if (grid.count < 2) config_fail(path + ".count", "need at least 2 points");
  if (!(grid.stop > grid.start)) config_fail(path, "stop must exceed start");
  if (grid.log_scale && grid.start <= 0.0)
    config_fail(path + ".start", "log grid needs start > 0");
  return grid;
}

void reject_unknown(const json& j, const std::string& scope,
                    const std::set<std::string>& known) {
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) config_fail(scope + "." + key, "unknown field");
}

void append_flag(std::string& flags, const std::string& flag) {
  if (!flags.empty()) flags += ";";
  flags += flag;
}

// ---------------------------------------------------------------- commands

CurveDataset cmd_qfi_scan(const json& cfg) {
  const std::string scope = "qfi-scan";
  reject_unknown(cfg, scope,
                 {"command", "probe", "lambda", "prefactor", "nqubits",
                  "noise_mode", "grid"});
  const std::string probe_text = get_string(cfg, scope, "probe", "ghz");
  if (probe_text != "ghz" && probe_text != "uncorrelated")
    config_fail(scope + ".probe", "expected 'ghz' or 'uncorrelated'");
  const double lambda = get_number(cfg, scope, "lambda", 2.0);
  const double prefactor = get_number(cfg, scope, "prefactor", 1.0);
  const DephasingMode mode =
      parse_mode(get_string(cfg, scope, "noise_mode", "independent"),
                 scope + ".noise_mode");
  std::vector<int> nlist;
  if (!cfg.contains("nqubits") || !cfg["nqubits"].is_array())
    config_fail(scope + ".nqubits", "expected an array of qubit numbers");
  for (const auto& n : cfg["nqubits"]) nlist.push_back(n.get<int>());
  const GridSpec grid = parse_grid(cfg, scope, "grid");

  // Natural units: strength = 1, so the grid is gamma*tau and F/tau values
  // come out in prefactor^2 * strength^{2 lambda - 1} units directly.
  const std::string unit =
      (mode == DephasingMode::kIndependent ? "beta^2*gamma^-" : "beta^2*Gamma^-") +
      format_double(2.0 * lambda - 1.0);
  CurveDataset data;
  data.command = "qfi-scan";
  data.columns.push_back({mode == DephasingMode::kIndependent ? "gamma_tau" : "Gamma_tau",
                          "dimensionless"});
  std::vector<ScanResult> scans;
  for (int n : nlist) {
    InterferometerSpec spec{lambda, 1.0, n, mode, 1.0,
                            probe_text == "ghz" ? ProbeKind::kGhz
                                                : ProbeKind::kUncorrelated};
    scans.push_back(scan_f_over_tau(spec, grid.values()));
    data.columns.push_back({"f_over_tau_N" + std::to_string(n), unit});
  }
  const double c2 = prefactor * prefactor;
  for (int i = 0; i < grid.count; ++i) {
    std::vector<double> row{scans.front().points[i].tau};
    std::string flags;
    for (std::size_t k = 0; k < scans.size(); ++k) {
      row.push_back(c2 * scans[k].points[i].f_over_tau);
      if (scans[k].argmax == static_cast<std::size_t>(i))
        append_flag(flags, "argmax:" + data.columns[k + 1].name);
    }
    data.add_row(std::move(row), std::move(flags));
  }
  return data;
}

CurveDataset cmd_qec_curves(const json& cfg) {
  const std::string scope = "qec-curves";
  reject_unknown(cfg, scope,
                 {"command", "panel", "block_sizes", "beta", "total_qubits",
                  "grid", "gamma_tau", "multiplier_grid"});
  const std::string panel = get_string(cfg, scope, "panel", "a");
  const double beta = get_number(cfg, scope, "beta", 1.0);
  std::vector<int> block_sizes;
  if (!cfg.contains("block_sizes") || !cfg["block_sizes"].is_array())
    config_fail(scope + ".block_sizes", "expected an array");
  for (const auto& n : cfg["block_sizes"]) block_sizes.push_back(n.get<int>());

  CurveDataset data;
  data.command = "qec-curves";
  if (panel == "a") {
    const long long total =
        static_cast<long long>(get_number(cfg, scope, "total_qubits", 15));
    const GridSpec grid = parse_grid(cfg, scope, "grid");
    data.columns.push_back({"gamma_tau", "dimensionless"});
    std::vector<QcrbCurve> curves;
    for (int n : block_sizes) {
      if (total % n != 0)
        config_fail(scope + ".block_sizes",
                    std::to_string(n) + " does not divide total_qubits");
      curves.push_back(logical_qcrb_curve({n, total}, beta, 1.0, grid.values()));
      data.columns.push_back({"qcrb_n" + std::to_string(n), "gamma^(3/2)/beta"});
    }
    for (int i = 0; i < grid.count; ++i) {
      std::vector<double> row{curves.front().points[i].gamma_tau};
      std::string flags;
      for (std::size_t k = 0; k < curves.size(); ++k) {
        row.push_back(curves[k].points[i].qcrb);
        if (curves[k].argmin == static_cast<std::size_t>(i))
          append_flag(flags, "argmin:" + data.columns[k + 1].name);
      }
      data.add_row(std::move(row), std::move(flags));
    }
    return data;
  }
  if (panel != "b") config_fail(scope + ".panel", "expected 'a' or 'b'");

  const double gamma_tau = get_number(cfg, scope, "gamma_tau", 0.1);
  const GridSpec multipliers = parse_grid(cfg, scope, "multiplier_grid");
  std::set<long long> totals;
  for (int n : block_sizes)
    for (double m : multipliers.values())
      totals.insert(n * std::llround(std::max(1.0, m)));
  data.columns.push_back({"N", "qubits"});
  for (int n : block_sizes)
    data.columns.push_back({"qcrb_n" + std::to_string(n), "gamma^(3/2)/beta"});

  std::vector<std::vector<double>> values(block_sizes.size());
  std::vector<long long> total_list(totals.begin(), totals.end());
  std::vector<std::size_t> argmin(block_sizes.size(), 0);
  for (std::size_t r = 0; r < total_list.size(); ++r)
    for (std::size_t k = 0; k < block_sizes.size(); ++k) {
      const int n = block_sizes[k];
      if (total_list[r] % n != 0) {
        values[k].push_back(std::nan(""));
        continue;
      }
      const double f = logical_qfi({n, total_list[r]}, beta, gamma_tau, 1.0);
      values[k].push_back(1.0 / std::sqrt(f / gamma_tau));
      if (!std::isfinite(values[k][r])) continue;  // coherence underflowed
      if (!std::isfinite(values[k][argmin[k]]) || values[k][r] < values[k][argmin[k]])
        argmin[k] = r;
    }
  for (std::size_t r = 0; r < total_list.size(); ++r) {
    std::vector<double> row{static_cast<double>(total_list[r])};
    std::string flags;
    for (std::size_t k = 0; k < block_sizes.size(); ++k) {
      row.push_back(values[k][r]);
      if (std::isnan(values[k][r]))
        append_flag(flags, "skipped:" + data.columns[k + 1].name);
      else if (std::isinf(values[k][r]))
        append_flag(flags, "diverged:" + data.columns[k + 1].name);
      else if (argmin[k] == r)
        append_flag(flags, "argmin:" + data.columns[k + 1].name);
    }
    data.add_row(std::move(row), std::move(flags));
  }
  return data;
}

CurveDataset cmd_sagnac_sim(const json& cfg) {
  const std::string scope = "sagnac-sim";
  reject_unknown(cfg, scope,
                 {"command", "hbar", "mass", "radius", "kick", "sigma", "lmax",
                  "omega_grid"});
  RingParams params;
  params.hbar = get_number(cfg, scope, "hbar", 1.0);
  params.mass = get_number(cfg, scope, "mass", 1.0);
  params.radius = get_number(cfg, scope, "radius", 1.0);
  params.kick = static_cast<int>(get_number(cfg, scope, "kick", 50));
  params.sigma = get_number(cfg, scope, "sigma", 0.1);
  params.lmax = static_cast<int>(get_number(cfg, scope, "lmax", 0));
  try {
    params.validate();
  } catch (const DomainError& err) {
    config_fail(scope, err.what());
  }
  const GridSpec grid = parse_grid(cfg, scope, "omega_grid");

  CurveDataset data;
  data.command = "sagnac-sim";
  data.columns = {{"Omega", "rad/time"},          {"phase_sim", "rad"},
                  {"phase_predicted", "rad"},     {"visibility", "dimensionless"},
                  {"width_at_tau", "rad"},        {"condition_ok", "bool"}};
  for (double omega : grid.values()) {
    params.omega = omega;
    try {
      const InterferenceResult r = simulate_sagnac(params);
      data.add_row({omega, r.phase_sim, r.phase_predicted, r.visibility,
                    r.width_at_tau, r.condition_ok ? 1.0 : 0.0},
                   r.condition_ok ? "" : "width-condition-violated");
    } catch (const TruncationError& err) {
      data.add_row({omega, std::nan(""), std::nan(""), std::nan(""), std::nan(""),
                    0.0},
                   std::string("truncation:") + err.what());
    }
  }
  return data;
}

CurveDataset cmd_scaling_table(const json& cfg) {
  const std::string scope = "scaling-table";
  reject_unknown(cfg, scope,
                 {"command", "lambdas", "noise_modes", "nqubits", "prefactor",
                  "strength"});
  if (!cfg.contains("lambdas") || !cfg["lambdas"].is_array())
    config_fail(scope + ".lambdas", "expected an array");
  const double prefactor = get_number(cfg, scope, "prefactor", 1.0);
  const double strength = get_number(cfg, scope, "strength", 1.0);
  std::vector<DephasingMode> modes;
  if (cfg.contains("noise_modes"))
    for (const auto& m : cfg["noise_modes"])
      modes.push_back(parse_mode(m.get<std::string>(), scope + ".noise_modes"));
  else
    modes = {DephasingMode::kIndependent, DephasingMode::kCollective};
  std::vector<int> nlist;
  if (!cfg.contains("nqubits") || !cfg["nqubits"].is_array())
    config_fail(scope + ".nqubits", "expected an array");
  for (const auto& n : cfg["nqubits"]) nlist.push_back(n.get<int>());

  CurveDataset data;
  data.command = "scaling-table";
  data.columns = {{"lambda", "dimensionless"},
                  {"mode", "0=independent,1=collective"},
                  {"tau_opt_N1", "1/strength"},
                  {"f_over_tau_opt_N1", "prefactor^2*strength^(1-2*lambda)"},
                  {"fitted_exponent", "dimensionless"},
                  {"predicted_exponent", "dimensionless"}};
  for (const auto& lj : cfg["lambdas"]) {
    const double lambda = lj.get<double>();
    for (DephasingMode mode : modes) {
      const double mode_id = mode == DephasingMode::kCollective ? 1.0 : 0.0;
      if (lambda <= 0.5) {
        data.add_row({lambda, mode_id, std::nan(""), std::nan(""), std::nan(""),
                      std::nan("")},
                     "no-optimum");
        continue;
      }
      // Least-squares slope of log (F/tau)_opt against log N.
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      for (int n : nlist) {
        InterferometerSpec spec{lambda, prefactor, n, mode, strength,
                                ProbeKind::kGhz};
        const double x = std::log(static_cast<double>(n));
        const double y = std::log(optimal_interrogation(spec).f_over_tau_opt);
        sx += x, sy += y, sxx += x * x, sxy += x * y;
      }
      const double count = static_cast<double>(nlist.size());
      const double fitted = (count * sxy - sx * sy) / (count * sxx - sx * sx);
      InterferometerSpec one{lambda, prefactor, 1, mode, strength, ProbeKind::kGhz};
      const SensitivityReport report = optimal_interrogation(one);
      data.add_row({lambda, mode_id, report.tau_opt, report.f_over_tau_opt, fitted,
                    scaling_exponent(lambda, mode)});
    }
  }
  return data;
}

}  // namespace

std::string preset_json(const std::string& name) {
  const auto it = kPresets.find(name);
  if (it == kPresets.end()) throw ConfigError("unknown preset '" + name + "'");
  return it->second;
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : kPresets) names.push_back(name);
  return names;
}

CurveDataset run_command(const std::string& command, const std::string& config_json,
                         std::uint64_t seed) {
  json cfg;
  try {
    cfg = json::parse(config_json);
  } catch (const json::exception& err) {
    throw ConfigError(std::string("config: invalid JSON: ") + err.what());
  }
  if (cfg.contains("command") && cfg["command"].get<std::string>() != command)
    config_fail("config.command",
                "preset/config is for '" + cfg["command"].get<std::string>() +
                    "', not '" + command + "'");
  cfg["command"] = command;
  cfg["seed"] = seed;  // recorded in provenance; only the MC checks consume it
  json provenance = cfg;
  cfg.erase("seed");

  CurveDataset data;
  if (command == "qfi-scan")
    data = cmd_qfi_scan(cfg);
  else if (command == "qec-curves")
    data = cmd_qec_curves(cfg);
  else if (command == "sagnac-sim")
    data = cmd_sagnac_sim(cfg);
  else if (command == "scaling-table")
    data = cmd_scaling_table(cfg);
  else
    throw ConfigError("unknown command '" + command + "'");
  data.config_json = provenance.dump();
  return data;
}

// ---------------------------------------------------------------- verify

double max_closed_form_qfi_error(
    DephasingMode mode,
    const std::function<double(const InterferometerSpec&, double)>& closed_form) {
  double worst = 0.0;
  for (int n = 1; n <= 5; ++n)
    for (double rate_tau : {0.1, 0.5, 1.0})
      for (double lambda : {1.0, 2.0}) {
        const double tau = rate_tau;  // strength = 1
        const StateFamily family =
            ghz_dephased_family(n, lambda, 1.0, tau, mode, 1.0);
        const double numeric = qfi_auto(family, 0.3).value;
        InterferometerSpec spec{lambda, 1.0, n, mode, 1.0, ProbeKind::kGhz};
        const double reference = closed_form(spec, tau);
        worst = std::max(worst,
                         std::abs(numeric - reference) / std::max(reference, 1e-300));
      }
  return worst;
}

namespace {

double trace_distance(const Matrix& a, const Matrix& b) {
  const SpectralDecomposition eig = eigendecompose_hermitian(a - b);
  return 0.5 * eig.eigenvalues.cwiseAbs().sum();
}

CheckResult check_channel_vs_rk4(DephasingMode mode, const VerifyOptions& options) {
  const DensityMatrix rho = random_density_matrix(4, options.seed);
  const double strength = 0.3, tau = 1.0;
  const DensityMatrix exact =
      mode == DephasingMode::kIndependent
          ? apply_independent_dephasing(rho, strength, tau)
          : apply_collective_dephasing(rho, strength, tau);
  const DensityMatrix integrated = integrate_master_equation(
      rho, {mode, strength, tau}, options.rk4_steps);
  const double err = trace_distance(exact.matrix, integrated.matrix);
  const std::string name = mode == DephasingMode::kIndependent
                               ? "channel-rk4-independent"
                               : "channel-rk4-collective";
  return {name, err <= 1e-8, err, 1e-8};
}

CheckResult check_sagnac_phase() {
  RingParams params;  // hbar = m = R = 1, k0 = 50, sigma = 0.1
  double worst = 0.0;
  for (double omega : {0.005, 0.01, 0.02, 0.05}) {
    params.omega = omega;
    const InterferenceResult r = simulate_sagnac(params);
    worst = std::max(worst, std::abs(r.phase_sim - r.phase_predicted) /
                                std::abs(r.phase_predicted));
  }
  params.omega = 0.0;
  worst = std::max(worst, std::abs(simulate_sagnac(params).phase_sim) / 1e-9);
  return {"sagnac-phase", worst <= 1e-3, worst, 1e-3};
}

CheckResult check_logical_error_mc(const VerifyOptions& options) {
  double worst = 0.0;  // in units of 3 sigma
  for (int n : {1, 3, 5}) {
    const double p = 0.1;
    const double expected = logical_error_prob(n, p);
    const double sampled = mc_logical_error_rate(n, p, options.mc_trials,
                                                 options.seed + n);
    const double sigma = std::sqrt(expected * (1.0 - expected) /
                                   static_cast<double>(options.mc_trials));
    worst = std::max(worst, std::abs(sampled - expected) / (3.0 * sigma));
  }
  return {"logical-error-mc", worst <= 1.0, worst, 1.0};
}

CheckResult check_nopt_scan() {
  double worst = 0.0;  // |scan - rounded closed form| in units of n
  const double p = single_qubit_error_prob(1.0, 0.1);
  for (int n : {1, 3, 5}) {
    const OptimalQubits opt = optimal_total_qubits(n, p);
    const long long rounded = n * std::llround(opt.closed_form / n);
    worst = std::max(worst, std::abs(static_cast<double>(opt.scan - rounded)) / n);
  }
  return {"nopt-scan-vs-formula", worst <= 1.0, worst, 1.0};
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  std::vector<CheckResult> results;
  const double err_ind =
      max_closed_form_qfi_error(DephasingMode::kIndependent, qfi_closed_form);
  results.push_back({"qfi-closed-form-independent", err_ind <= 1e-5, err_ind, 1e-5});
  const double err_col =
      max_closed_form_qfi_error(DephasingMode::kCollective, qfi_closed_form);
  results.push_back({"qfi-closed-form-collective", err_col <= 1e-5, err_col, 1e-5});
  results.push_back(check_channel_vs_rk4(DephasingMode::kIndependent, options));
  results.push_back(check_channel_vs_rk4(DephasingMode::kCollective, options));
  results.push_back(check_sagnac_phase());
  results.push_back(check_logical_error_mc(options));
  results.push_back(check_nopt_scan());
  return results;
}

}  // namespace iq::cli
