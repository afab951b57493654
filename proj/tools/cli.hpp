#pragma once
// In-process entry point for the command-line driver so tests can invoke
// commands without spawning a process.  `main` is a two-line wrapper.

#include <ostream>
#include <string>
#include <vector>

namespace cyclica::cli {

// Exit codes: 0 success, 1 invalid input (unknown flags, out-of-domain
// parameters), 2 a budget stopped the run early; the emitted report is
// then flagged "partial": true and carries whatever was computed.
inline constexpr int kOk = 0;
inline constexpr int kInvalid = 1;
inline constexpr int kBudget = 2;

// args excludes the program name.  Reports go to `out` (or the --output
// path), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace cyclica::cli
