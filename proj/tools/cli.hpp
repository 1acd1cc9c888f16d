#pragma once

namespace wavefeas {

/// Entry point of the command-line tool.  Exit codes: 0 on success, 1 when a
/// solve fails to converge (or a cascade diverges), 2 on invalid arguments
/// or unreadable input files.
int run_cli(int argc, const char* const* argv);

}  // namespace wavefeas
