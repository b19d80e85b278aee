#pragma once

namespace trislit::cli {

/// Full command-line entry point (subcommands: sweep, verify, figure2).
/// Returns the process exit code. Kept out of main() so tests can drive the
/// real CLI surface in-process.
int run(int argc, const char* const* argv);

}  // namespace trislit::cli
