#pragma once

#include "gmetric/report.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace gmetric {

/// Parses `args` (without the program name), runs the subcommand, writes the
/// human report (or the RunReport JSON with --json) to `out` and diagnostics
/// to `err`. Never throws; input and usage errors yield exit_code 2.
RunReport run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

}  // namespace gmetric
