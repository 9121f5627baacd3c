#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace szval {

enum class Sign : std::uint8_t { Positive, Negative };

constexpr Sign flipped(Sign s) {
  return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}

// Sign of a product or quotient: negative iff exactly one operand is.
constexpr Sign combined(Sign a, Sign b) {
  return a == b ? Sign::Positive : Sign::Negative;
}

enum class ValueClass : std::uint8_t { Finite, Zero, Infinity, NaN };

// Only the cancellation sign depends on the mode; everything else is
// computed as if to-nearest.
enum class RoundingMode : std::uint8_t { ToNearest, TowardNegative };

/// A binary64 value split into class, sign and positive magnitude.
///
/// Zeros and infinities carry an explicit sign. There is a single
/// canonical quiet NaN; payloads and the NaN sign bit are not modeled.
class SzValue {
 public:
  // Magnitude must be a strictly positive finite double.
  static SzValue finite(Sign sign, double magnitude);
  static SzValue zero(Sign sign);
  static SzValue infinity(Sign sign);
  static SzValue nan();

  // Total: classifies any host double (NaNs collapse to the canonical one).
  static SzValue from_double(double d);

  ValueClass cls() const { return cls_; }
  Sign sign() const { return sign_; }

  // Finite only; zero for the other classes.
  double magnitude() const { return magnitude_; }

  bool is_finite() const { return cls_ == ValueClass::Finite; }
  bool is_zero() const { return cls_ == ValueClass::Zero; }
  bool is_infinity() const { return cls_ == ValueClass::Infinity; }
  bool is_nan() const { return cls_ == ValueClass::NaN; }
  bool is_negative() const { return sign_ == Sign::Negative; }

  // The host double with this class, sign and magnitude.
  double to_double() const;

 private:
  SzValue(ValueClass cls, Sign sign, double magnitude)
      : cls_(cls), sign_(sign), magnitude_(magnitude) {}

  ValueClass cls_;
  Sign sign_;
  double magnitude_;
};

// Standard binary64 bit layout. encode_bits is total; decode_bits rejects
// subnormal patterns (the modeled domain stops at normal finites) and
// collapses every NaN pattern to the canonical one.
std::uint64_t encode_bits(const SzValue& v);
SzValue decode_bits(std::uint64_t bits);  // throws std::domain_error on subnormals

// "+0", "-0", "+inf", "-inf", "nan"; shortest round-trip decimal otherwise.
std::string to_string(const SzValue& v);

// Bit pattern as 16 hex digits.
std::string to_hex_bits(const SzValue& v);

// Parses the to_string spellings (plus bare "inf"). Empty on junk.
std::optional<SzValue> parse_value(std::string_view text);

}  // namespace szval
