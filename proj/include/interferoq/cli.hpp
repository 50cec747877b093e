#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "interferoq/dataset.hpp"
#include "interferoq/models.hpp"

namespace iq::cli {

// Exit codes of the interferoq binary.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 1;
inline constexpr int kExitVerifyFailure = 2;

// Returns the embedded preset JSON for `name`, or throws ConfigError.
// Known presets: fig2a, fig2b, fig3a, fig3b, sagnac-default.
std::string preset_json(const std::string& name);
std::vector<std::string> preset_names();

// Resolve preset + config-file overlays into one JSON object for `command`,
// validate it, and run. `config_json` entries override preset entries.
CurveDataset run_command(const std::string& command, const std::string& config_json,
                         std::uint64_t seed);

struct CheckResult {
  std::string name;
  bool pass = false;
  double max_err = 0.0;
  double tol = 0.0;
};

struct VerifyOptions {
  std::uint64_t seed = 12345;
  std::uint64_t mc_trials = 1000000;
  int rk4_steps = 10000;
};

// The oracle cross-check suite behind `interferoq verify`.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

// Largest relative error between `closed_form(spec, tau)` and the
// brute-force spectral QFI over the standard small grid (N <= 5,
// gamma*tau in {0.1, 0.5, 1.0}, lambda in {1, 2}) for one noise mode.
// Exposed so tests can demonstrate fault isolation by passing a wrong
// closed form.
double max_closed_form_qfi_error(
    DephasingMode mode,
    const std::function<double(const InterferometerSpec&, double)>& closed_form);

}  // namespace iq::cli
