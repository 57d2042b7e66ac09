#pragma once

#include <ostream>

namespace pdm::app {

/// Parses argv, runs one subcommand and returns its exit code. Reports go to
/// `out` (or the --out file); diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pdm::app
