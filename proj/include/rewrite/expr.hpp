#pragma once

#include "szval/value.hpp"

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace rewrite {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Variable {
  std::string name;
};
struct Constant {
  szval::SzValue value;
};
struct Negate {
  ExprPtr operand;
};
struct Sqrt {
  ExprPtr operand;
};
struct Add {
  ExprPtr lhs, rhs;
};
struct Subtract {
  ExprPtr lhs, rhs;
};
struct Multiply {
  ExprPtr lhs, rhs;
};
struct Divide {
  ExprPtr lhs, rhs;
};

struct Expr {
  std::variant<Variable, Constant, Negate, Sqrt, Add, Subtract, Multiply,
               Divide>
      node;
};

ExprPtr variable(std::string name);
ExprPtr constant(szval::SzValue value);
ExprPtr negate(ExprPtr operand);
ExprPtr sqrt_of(ExprPtr operand);
ExprPtr sum(ExprPtr lhs, ExprPtr rhs);
ExprPtr difference(ExprPtr lhs, ExprPtr rhs);
ExprPtr product(ExprPtr lhs, ExprPtr rhs);
ExprPtr quotient(ExprPtr lhs, ExprPtr rhs);

using Environment = std::map<std::string, szval::SzValue>;

// Bottom-up evaluation over the szval operations; the mode reaches only
// add/sub. Unbound variables throw std::invalid_argument.
szval::SzValue eval_expr(const Expr& e, const Environment& env,
                         szval::RoundingMode rm = szval::RoundingMode::ToNearest);

// Free variables in order of first appearance (left to right, depth first).
std::vector<std::string> free_variables(const Expr& e);

std::string to_string(const Expr& e);

}  // namespace rewrite
