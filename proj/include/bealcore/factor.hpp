#pragma once

#include "bealcore/int_value.hpp"

#include <optional>
#include <vector>

namespace bealcore {

// Prime factors of n >= 1 with multiplicity, sorted ascending; empty for 1.
// Trial division, which is all desk-scale magnitudes ask for. n = 0 throws
// std::invalid_argument.
std::vector<Natural> factorize(const Natural& n);

bool is_prime(const Natural& n);

// Smallest prime dividing all three magnitudes, where every prime divides
// zero. Absent when the nonzero values share nothing (in particular when a
// nonzero value is 1) and, by convention, for the all-zero triple — there
// the set of common primes is "all of them" and naming one would be wrong.
std::optional<Natural> common_prime_factor(const IntValue& a, const IntValue& b,
                                           const IntValue& c);

}  // namespace bealcore
