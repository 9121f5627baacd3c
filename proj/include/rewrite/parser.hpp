#pragma once

#include "rewrite/checker.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rewrite {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Infix with + - * /, unary - (and +), sqrt(...), parentheses; constants
// +0, -0, inf, -inf, nan and decimals; identifiers are variables.
ExprPtr parse_expr(std::string_view text);

// "LHS => RHS".
RewriteRule parse_rule(std::string_view text);

}  // namespace rewrite
