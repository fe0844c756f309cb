#pragma once

namespace nhsw {

/// Command-line entry point (see `--help` for the subcommand reference).
/// Exit codes: 0 success, 1 usage or configuration error, 2 numerical
/// failure, 3 verification criteria not met.
int run_cli(int argc, const char* const* argv);

}  // namespace nhsw
