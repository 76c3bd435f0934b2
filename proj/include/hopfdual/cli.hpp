#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopfdual::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kSchema = "hopfdual.report/1";

/// Exit status: 0 when every check passes, 1 when one fails, 2 on bad
/// input or usage. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace hopfdual::cli
