#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace axial::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;
inline constexpr int kSolverCap = 3;
inline constexpr int kValidation = 4;

// args excludes the program name. Human report to out, diagnostics to err,
// the structured report to the --out path when given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace axial::cli
