#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace lab {

inline constexpr const char* kToolName = "fullness-lab";
inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kReportSchema = "fullness-lab/report/1";
inline constexpr const char* kProblemSchema = "fullness-lab/problem/1";

enum ExitCode { kOk = 0, kInputError = 1, kMathError = 2 };

/// Directory of bundled problem files: $FULLNESS_CORPUS if set, otherwise
/// the directory configured at build time.
std::filesystem::path corpus_dir();

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lab
