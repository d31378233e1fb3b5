#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace extremal::cli {

enum class Status { success = 0, domain_error = 1, usage_error = 2 };

/// Runs one command line (without the program name). Payloads go to `out`,
/// diagnostics to `err`. The returned status doubles as the exit code.
Status run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace extremal::cli
