#pragma once

#include <ostream>
#include <string>

#include "curvebody/config.hpp"

namespace curvebody {

// Options shared by the file-producing subcommands: where output goes, how
// the spectrum file is formatted, and the seed forwarded to randomized
// sweeps (none of the current commands draw random numbers, but the flag is
// part of the interface so batch scripts never need to change).
struct CliOptions {
  std::string out_dir = ".";
  std::string format = "csv";  // csv | json
  long seed = 0;
};

// Subcommand bodies.  The split keeps the executable a thin argument parser
// and lets the test suite drive everything in-process.  Error contract:
// std::invalid_argument marks a configuration problem (bad key, bad value,
// state outside the chart) and becomes exit code 2; verification failures
// return 1; anything else that throws is a runtime failure, also 1.
int cmd_algebra_verify(int max_two_ell, bool corrupt_d3, std::ostream& out);
int cmd_spectrum(const RunConfig& config, const CliOptions& options, std::ostream& out);
int cmd_simulate(const RunConfig& config, const CliOptions& options, std::ostream& out);
int cmd_poincare(const RunConfig& config, const CliOptions& options, std::ostream& out);

}  // namespace curvebody
