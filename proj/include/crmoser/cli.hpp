#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace crmoser {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kReportSchema = "cr-moser-report/1";

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitParse = 2, kExitMath = 3 };

std::string sha256_hex(const std::string& data);

// Runs one command; args excludes the program name. The JSON report goes to out
// (or to --output), diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crmoser
