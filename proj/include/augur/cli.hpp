#pragma once

namespace augur {

// Experiment front end. Exit codes: 0 success, 1 invalid parameter (with a
// diagnostic naming it), 2 unknown/missing subcommand (with usage text).
int run_cli(int argc, const char* const* argv);

}  // namespace augur
