#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crg::cli {

inline constexpr const char* kVersion = "0.1.0";

// Runs one command line (without the program name). The report goes to out,
// diagnostics to err. Returns 0 when no check failed, 1 when one did and 2 on
// usage, file or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crg::cli
