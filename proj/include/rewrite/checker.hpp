#pragma once

#include "rewrite/expr.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace rewrite {

struct RewriteRule {
  ExprPtr lhs;
  ExprPtr rhs;
  std::vector<std::string> variables;  // declared enumeration order
};

// Variables are collected lhs-first in order of appearance.
RewriteRule make_rule(ExprPtr lhs, ExprPtr rhs);

struct Binding {
  std::string name;
  szval::SzValue value;
};

struct Verdict {
  bool legal = false;
  // Illegal only: the first distinguishing assignment in lexicographic
  // order (variable declaration order, domain order per position).
  std::vector<Binding> witness;
  std::optional<szval::SzValue> lhs_value;
  std::optional<szval::SzValue> rhs_value;
};

// 1, -1, 2.5, -2.5, +0, -0, +inf, -inf, nan. Finite values lead so witnesses
// surface the ordinary-number story before the specials.
std::vector<szval::SzValue> default_domain();

class EnumerationGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Enumerates every assignment of domain values to the rule's variables and
// compares the two sides with same_repr (the two NaNs count as the same).
// Legality is relative to the given domain, nothing stronger. Refuses with
// EnumerationGuardError when |domain|^|variables| exceeds 10^7.
Verdict check_rewrite(const RewriteRule& rule,
                      const std::vector<szval::SzValue>& domain,
                      szval::RoundingMode rm = szval::RoundingMode::ToNearest);

}  // namespace rewrite
