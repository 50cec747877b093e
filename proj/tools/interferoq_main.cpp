#include <omp.h>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "interferoq/cli.hpp"

namespace {

struct CommonOptions {
  std::string config_path;
  std::string preset;
  std::string out_path;
  std::uint64_t seed = 12345;
  int threads = 0;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--config", opts.config_path, "JSON config file");
  cmd->add_option("--preset", opts.preset, "named embedded preset");
  cmd->add_option("--out", opts.out_path, "output CSV path (default: stdout)");
  cmd->add_option("--seed", opts.seed, "PRNG seed for Monte-Carlo checks");
  cmd->add_option("--threads", opts.threads, "OpenMP thread count (0 = runtime default)");
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw iq::ConfigError("cannot read config file: " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

int run_data_command(const std::string& command, const std::string& default_preset,
                     const CommonOptions& opts) {
  if (opts.threads > 0) omp_set_num_threads(opts.threads);
  nlohmann::json cfg =
      nlohmann::json::parse(iq::cli::preset_json(
          opts.preset.empty() ? default_preset : opts.preset));
  if (!opts.config_path.empty()) {
    try {
      cfg.update(nlohmann::json::parse(read_file(opts.config_path)));
    } catch (const nlohmann::json::exception& err) {
      throw iq::ConfigError(std::string("config: invalid JSON: ") + err.what());
    }
  }
  const iq::CurveDataset data = iq::cli::run_command(command, cfg.dump(), opts.seed);
  if (opts.out_path.empty())
    std::cout << data.to_csv();
  else
    data.write_csv(opts.out_path);
  return iq::cli::kExitOk;
}

int run_verify(const iq::cli::VerifyOptions& options) {
  const auto results = iq::cli::run_verification(options);
  bool all_pass = true;
  for (const auto& r : results) {
    std::printf("%-4s %-28s max_err=%-12.3e tol=%.0e\n", r.pass ? "PASS" : "FAIL",
                r.name.c_str(), r.max_err, r.tol);
    all_pass = all_pass && r.pass;
  }
  std::printf("%s\n", all_pass ? "verification passed" : "verification FAILED");
  return all_pass ? iq::cli::kExitOk : iq::cli::kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"interferoq: sensitivity bounds for multiqubit matter-wave "
               "interferometers under dephasing"};
  app.require_subcommand(1);

  struct DataCmd {
    const char* name;
    const char* preset;
    const char* help;
  };
  const DataCmd data_cmds[] = {
      {"qfi-scan", "fig2a", "F/tau curves over the interrogation time"},
      {"qec-curves", "fig3a", "logical-code QCRB curves"},
      {"sagnac-sim", "sagnac-default", "first-principles ring interferometer sweep"},
      {"scaling-table", "scaling-default", "optimal-precision scaling exponents"},
  };
  CommonOptions opts[4];
  for (int i = 0; i < 4; ++i)
    add_common(app.add_subcommand(data_cmds[i].name, data_cmds[i].help), opts[i]);

  iq::cli::VerifyOptions verify_options;
  int verify_threads = 0;
  CLI::App* verify = app.add_subcommand("verify", "run the oracle cross-check suite");
  verify->add_option("--seed", verify_options.seed, "PRNG seed");
  verify->add_option("--trials", verify_options.mc_trials, "Monte-Carlo trials");
  verify->add_option("--rk4-steps", verify_options.rk4_steps, "integrator steps");
  verify->add_option("--threads", verify_threads, "OpenMP thread count");

  CLI11_PARSE(app, argc, argv);

  try {
    for (int i = 0; i < 4; ++i)
      if (app.get_subcommand(data_cmds[i].name)->parsed())
        return run_data_command(data_cmds[i].name, data_cmds[i].preset, opts[i]);
    if (verify_threads > 0) omp_set_num_threads(verify_threads);
    return run_verify(verify_options);
  } catch (const iq::ConfigError& err) {
    std::cerr << "config error: " << err.what() << "\n";
    return iq::cli::kExitConfigError;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return iq::cli::kExitVerifyFailure;
  }
}
