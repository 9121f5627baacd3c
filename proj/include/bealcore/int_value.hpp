#pragma once

#include "szval/value.hpp"

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bealcore {

using Natural = mpz_class;

/// A nonnegative exact integer. A zero may carry a sign ("+0" or "-0") or
/// none at all (a bare "0", whose author declined to pick one); nonzero
/// values never carry a zero sign.
struct IntValue {
  Natural magnitude;
  std::optional<szval::Sign> zero_sign;

  static IntValue from_natural(Natural value);
  static IntValue zero(szval::Sign sign);
  static IntValue unsigned_zero();

  bool is_zero() const { return magnitude == 0; }
};

bool same_value(const IntValue& a, const IntValue& b);

// Decimal digits, or the exact spellings "+0", "-0", "0".
IntValue parse_int_value(std::string_view text);  // std::invalid_argument on junk
std::string to_string(const IntValue& v);

/// Who counts as a "positive integer".
enum class PositiveIntegerPolicy {
  Strict,              // magnitude >= 1
  ZeroInclusive,       // any zero admitted, sign ignored
  SignedZeroInclusive  // magnitude >= 1, or a zero explicitly signed positive
};

bool admissible(const IntValue& v, PositiveIntegerPolicy policy);

std::string to_string(PositiveIntegerPolicy policy);
std::optional<PositiveIntegerPolicy> parse_policy(std::string_view name);

class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact base^exp for exp >= 1. Zero bases keep a zero result whose sign
// follows the multiplication sign rule: positive for even exponents,
// otherwise the base's own zero sign. Refuses with SizeGuardError when the
// result would run past 10^6 decimal digits.
IntValue pow_exact(const IntValue& base, unsigned long exp);

}  // namespace bealcore
