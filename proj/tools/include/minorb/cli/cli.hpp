#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace minorb::cli {

inline constexpr const char* kFormatVersion = "1.0";

/// Runs one command. `args` excludes the program name.
/// Returns 0 on success and 2 on a usage or domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minorb::cli
