#pragma once

#include "bealcore/factor.hpp"
#include "bealcore/int_value.hpp"

#include <optional>

namespace bealcore {

struct BealClaim {
  IntValue a, b, c;
  unsigned long x, y, z;
};

// Exponents must be naturals >= 1; whether they clear the > 2 bar is part
// of the verdict, not a construction error.
BealClaim make_claim(IntValue a, IntValue b, IntValue c, unsigned long x,
                     unsigned long y, unsigned long z);

enum class Classification { Invalid, ConjectureConsistent, CounterexampleCandidate };

std::string to_string(Classification c);

struct VerdictReport {
  bool exponents_valid = false;
  bool base_a_admissible = false;
  bool base_b_admissible = false;
  bool base_c_admissible = false;
  bool bases_admissible = false;
  bool equation_holds = false;
  std::optional<Natural> common_prime;
  // All three bases zero: every prime divides them, so no single prime is
  // reported and common_prime stays absent.
  bool common_factor_vacuous = false;
  Classification classification = Classification::Invalid;
};

// Runs every check regardless of earlier failures and classifies:
// CounterexampleCandidate when the equation, exponents and admissibility all
// hold and no common prime factor exists; ConjectureConsistent when they
// hold and one does; Invalid otherwise. Exact arithmetic throughout; zero
// signs never reach the magnitude computations.
VerdictReport adjudicate(const BealClaim& claim, PositiveIntegerPolicy policy);

}  // namespace bealcore
