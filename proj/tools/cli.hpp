#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace idsdvbs::cli {

enum ExitCode : int {
    ok = 0,
    invalid_signature = 1,
    usage_error = 2,
    crypto_error = 3,
};

/// Runs one command; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "POA|v1|<address-tag>|<threshold>" from "<address-tag>:<threshold>".
std::string asset_statement_message(const std::string& statement);

}  // namespace idsdvbs::cli
