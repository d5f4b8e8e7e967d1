#pragma once

#include <iosfwd>

namespace fano7 {

// Command-line entry point; returns the process exit code.
// 0 = success, 1 = input/validation error, 2 = numerical check failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fano7
