#include "rewrite/checker.hpp"

#include "szval/arith.hpp"

#include <algorithm>

namespace rewrite {

namespace {

constexpr unsigned long long kMaxAssignments = 10'000'000ull;

}  // namespace

RewriteRule make_rule(ExprPtr lhs, ExprPtr rhs) {
  std::vector<std::string> vars = free_variables(*lhs);
  for (const std::string& name : free_variables(*rhs)) {
    if (std::find(vars.begin(), vars.end(), name) == vars.end()) {
      vars.push_back(name);
    }
  }
  return RewriteRule{std::move(lhs), std::move(rhs), std::move(vars)};
}

std::vector<szval::SzValue> default_domain() {
  using szval::Sign;
  using szval::SzValue;
  return {SzValue::from_double(1.0),  SzValue::from_double(-1.0),
          SzValue::from_double(2.5),  SzValue::from_double(-2.5),
          SzValue::zero(Sign::Positive), SzValue::zero(Sign::Negative),
          SzValue::infinity(Sign::Positive), SzValue::infinity(Sign::Negative),
          SzValue::nan()};
}

Verdict check_rewrite(const RewriteRule& rule,
                      const std::vector<szval::SzValue>& domain,
                      szval::RoundingMode rm) {
  if (domain.empty()) throw std::invalid_argument("rewrite domain must be non-empty");

  const std::size_t nvars = rule.variables.size();
  unsigned long long assignments = 1;
  for (std::size_t i = 0; i < nvars; ++i) {
    assignments *= domain.size();
    if (assignments > kMaxAssignments) {
      throw EnumerationGuardError(
          "assignment space exceeds 10^7; shrink the domain or the variable count");
    }
  }

  std::vector<std::size_t> index(nvars, 0);
  Environment env;
  for (;;) {
    for (std::size_t i = 0; i < nvars; ++i) {
      env.insert_or_assign(rule.variables[i], domain[index[i]]);
    }
    szval::SzValue lhs = eval_expr(*rule.lhs, env, rm);
    szval::SzValue rhs = eval_expr(*rule.rhs, env, rm);
    if (!szval::same_repr(lhs, rhs)) {
      Verdict verdict;
      verdict.legal = false;
      for (std::size_t i = 0; i < nvars; ++i) {
        verdict.witness.push_back({rule.variables[i], domain[index[i]]});
      }
      verdict.lhs_value = lhs;
      verdict.rhs_value = rhs;
      return verdict;
    }
    // Odometer: last variable spins fastest, so assignments come out in
    // lexicographic order over (variables, domain positions).
    std::size_t k = nvars;
    while (k > 0) {
      if (++index[k - 1] < domain.size()) break;
      index[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }

  Verdict verdict;
  verdict.legal = true;
  return verdict;
}

}  // namespace rewrite
