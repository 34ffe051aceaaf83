#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pnog/netcore.hpp"

namespace pnog::cli {

// Exit codes: 0 success, 1 validation or semantic failure, 2 usage or parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Entry point shared by the `pnog` binary and the tests. `args` excludes the
// program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

// Interactive stepper over `net`; returns when the input ends or on `quit`.
void run_repl(const BoundNet& net, std::istream& in, std::ostream& out);

}  // namespace pnog::cli
