#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "curvebody/driver.hpp"

namespace {

// Flags shared by the config-driven subcommands.
void add_common_options(CLI::App* cmd, std::string& config_path,
                        curvebody::CliOptions& options) {
  cmd->add_option("--config", config_path, "run configuration (flat key = value text)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--out", options.out_dir, "output directory")->capture_default_str();
  cmd->add_option("--format", options.format, "spectrum file format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--seed", options.seed, "seed for randomized sweeps")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-body dynamics and spectra on constant-curvature spaces"};
  app.require_subcommand(1);

  auto* algebra = app.add_subcommand("algebra", "operator-algebra verification");
  algebra->require_subcommand(1);
  auto* verify = algebra->add_subcommand(
      "verify", "check the commutator relations, eigenvector series and bracket tables");
  int max_two_ell = 5;
  bool corrupt_d3 = false;
  verify->add_option("--max-two-ell", max_two_ell, "largest doubled spin per factor")
      ->capture_default_str();
  // Fault-injection hook for the exit-code tests; deliberately undocumented.
  verify->add_flag("--corrupt-d3", corrupt_d3)->group("");

  std::string config_path;
  curvebody::CliOptions options;
  auto* spectrum =
      app.add_subcommand("spectrum", "closed-form and grid energy levels");
  add_common_options(spectrum, config_path, options);
  auto* simulate =
      app.add_subcommand("simulate", "integrate a reduced or orbit-chart trajectory");
  add_common_options(simulate, config_path, options);
  auto* poincare = app.add_subcommand("poincare", "section of a reduced trajectory");
  add_common_options(poincare, config_path, options);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // bad invocation is a config error
  }

  try {
    if (verify->parsed()) {
      return curvebody::cmd_algebra_verify(max_two_ell, corrupt_d3, std::cout);
    }
    const auto config = curvebody::RunConfig::parse_file(config_path);
    if (spectrum->parsed()) return curvebody::cmd_spectrum(config, options, std::cout);
    if (simulate->parsed()) return curvebody::cmd_simulate(config, options, std::cout);
    return curvebody::cmd_poincare(config, options, std::cout);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
