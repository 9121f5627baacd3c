#include "bealcore/adjudicate.hpp"

namespace bealcore {

BealClaim make_claim(IntValue a, IntValue b, IntValue c, unsigned long x,
                     unsigned long y, unsigned long z) {
  if (x < 1 || y < 1 || z < 1) {
    throw std::invalid_argument("exponents must be naturals >= 1");
  }
  return BealClaim{std::move(a), std::move(b), std::move(c), x, y, z};
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Invalid:
      return "Invalid";
    case Classification::ConjectureConsistent:
      return "ConjectureConsistent";
    case Classification::CounterexampleCandidate:
      return "CounterexampleCandidate";
  }
  return "Invalid";
}

VerdictReport adjudicate(const BealClaim& claim, PositiveIntegerPolicy policy) {
  VerdictReport report;
  report.exponents_valid = claim.x > 2 && claim.y > 2 && claim.z > 2;

  report.base_a_admissible = admissible(claim.a, policy);
  report.base_b_admissible = admissible(claim.b, policy);
  report.base_c_admissible = admissible(claim.c, policy);
  report.bases_admissible = report.base_a_admissible &&
                            report.base_b_admissible &&
                            report.base_c_admissible;

  Natural lhs = pow_exact(claim.a, claim.x).magnitude +
                pow_exact(claim.b, claim.y).magnitude;
  Natural rhs = pow_exact(claim.c, claim.z).magnitude;
  report.equation_holds = lhs == rhs;

  report.common_prime = common_prime_factor(claim.a, claim.b, claim.c);
  report.common_factor_vacuous =
      claim.a.is_zero() && claim.b.is_zero() && claim.c.is_zero();

  bool checks_pass = report.equation_holds && report.exponents_valid &&
                     report.bases_admissible;
  if (checks_pass && !report.common_prime) {
    report.classification = Classification::CounterexampleCandidate;
  } else if (checks_pass) {
    report.classification = Classification::ConjectureConsistent;
  } else {
    report.classification = Classification::Invalid;
  }
  return report;
}

}  // namespace bealcore
