// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The fpgasched Authors

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fpgasched::cli {

// Process exit statuses.
enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kNoFeasibleCombination = 2,
  kCapacityExceeded = 3,  // combination limit or oracle bounds
  kVerifyMismatch = 4,
};

// Entry point shared by the executable and the tests. argv[0] is the program
// name; output that would go to stdout/stderr is written to `out`/`err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Convenience overload for tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "3:6" -> 3,4,5,6; "2:8:2" -> 2,4,6,8; "2,5,7"; mixtures like "1,3:5".
std::vector<int> parse_int_list(const std::string& text);
std::vector<double> parse_double_list(const std::string& text);

}  // namespace fpgasched::cli
