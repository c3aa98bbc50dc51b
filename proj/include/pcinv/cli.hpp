#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pcinv {

inline constexpr const char* kToolVersion = "1.0.0";

// Runs one command line (without the program name). Reports go to out,
// diagnostics and progress to err. Exit codes: 0 success, 1 computational
// precondition failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Lowercase hex SHA-256.
std::string sha256_hex(const std::string& data);

}  // namespace pcinv
