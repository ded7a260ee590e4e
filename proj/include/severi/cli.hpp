#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace severi::cli {

/// Exit codes: 0 success, 1 audit ANCHOR/IDENTITY failure, 2 usage or I/O
/// error (including a refused cache).
enum ExitCode : int { kOk = 0, kAuditFailed = 1, kUsage = 2 };

/// Runs one command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace severi::cli
