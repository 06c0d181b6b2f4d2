#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "abc/arith.hpp"

namespace abc::cli {

// Bad command line: exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-negative integer expression: decimal literals, "1e18", + - * ^ and
// parentheses ("2^64+1", "3*7^2"). Throws UsageError.
Int parse_int_expr(const std::string& text);

// args excludes the program name. Returns the process exit code: 0 on
// success, 1 on a domain error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abc::cli
