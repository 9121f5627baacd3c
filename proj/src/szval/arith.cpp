#include "szval/arith.hpp"

#include <cmath>

namespace szval {

namespace {

SzValue cancellation_zero(RoundingMode rm) {
  return SzValue::zero(rm == RoundingMode::TowardNegative ? Sign::Negative
                                                          : Sign::Positive);
}

// Classifies a nonnegative host magnitude and attaches the given sign.
SzValue from_magnitude(Sign sign, double magnitude) {
  if (magnitude == 0.0) return SzValue::zero(sign);
  if (std::isinf(magnitude)) return SzValue::infinity(sign);
  return SzValue::finite(sign, magnitude);
}

}  // namespace

SzValue add(const SzValue& a, const SzValue& b, RoundingMode rm) {
  if (a.is_nan() || b.is_nan()) return SzValue::nan();
  if (a.is_infinity() && b.is_infinity()) {
    return a.sign() == b.sign() ? a : SzValue::nan();
  }
  if (a.is_infinity()) return a;
  if (b.is_infinity()) return b;
  if (a.is_zero() && b.is_zero()) {
    if (a.sign() == b.sign()) return a;
    return cancellation_zero(rm);
  }
  if (a.is_zero()) return b;  // x + (+-0) = x
  if (b.is_zero()) return a;
  if (a.magnitude() == b.magnitude() && a.sign() != b.sign()) {
    return cancellation_zero(rm);
  }
  return SzValue::from_double(a.to_double() + b.to_double());
}

SzValue sub(const SzValue& a, const SzValue& b, RoundingMode rm) {
  return add(a, neg(b), rm);
}

SzValue mul(const SzValue& a, const SzValue& b) {
  if (a.is_nan() || b.is_nan()) return SzValue::nan();
  Sign sign = combined(a.sign(), b.sign());
  if (a.is_zero() || b.is_zero()) {
    if (a.is_infinity() || b.is_infinity()) return SzValue::nan();
    return SzValue::zero(sign);
  }
  if (a.is_infinity() || b.is_infinity()) return SzValue::infinity(sign);
  return from_magnitude(sign, a.magnitude() * b.magnitude());
}

SzValue div(const SzValue& a, const SzValue& b) {
  if (a.is_nan() || b.is_nan()) return SzValue::nan();
  Sign sign = combined(a.sign(), b.sign());
  if (a.is_zero()) {
    if (b.is_zero()) return SzValue::nan();
    return SzValue::zero(sign);
  }
  if (a.is_infinity()) {
    if (b.is_infinity()) return SzValue::nan();
    return SzValue::infinity(sign);
  }
  if (b.is_zero()) return SzValue::infinity(sign);
  if (b.is_infinity()) return SzValue::zero(sign);
  return from_magnitude(sign, a.magnitude() / b.magnitude());
}

SzValue sqrt(const SzValue& a) {
  if (a.is_nan()) return SzValue::nan();
  if (a.is_zero()) return a;  // sqrt(-0) = -0
  if (a.is_negative()) return SzValue::nan();
  if (a.is_infinity()) return a;
  return SzValue::finite(Sign::Positive, std::sqrt(a.magnitude()));
}

SzValue neg(const SzValue& a) {
  if (a.is_nan()) return a;
  switch (a.cls()) {
    case ValueClass::Zero:
      return SzValue::zero(flipped(a.sign()));
    case ValueClass::Infinity:
      return SzValue::infinity(flipped(a.sign()));
    default:
      return SzValue::finite(flipped(a.sign()), a.magnitude());
  }
}

SzValue reciprocal(const SzValue& a) {
  return div(SzValue::finite(Sign::Positive, 1.0), a);
}

SzValue copysign(const SzValue& magnitude_source, const SzValue& sign_source) {
  if (magnitude_source.is_nan()) return SzValue::nan();
  switch (magnitude_source.cls()) {
    case ValueClass::Zero:
      return SzValue::zero(sign_source.sign());
    case ValueClass::Infinity:
      return SzValue::infinity(sign_source.sign());
    default:
      return SzValue::finite(sign_source.sign(), magnitude_source.magnitude());
  }
}

Sign sign_bit(const SzValue& a) { return a.sign(); }

bool numeric_eq(const SzValue& a, const SzValue& b) {
  if (a.is_nan() || b.is_nan()) return false;
  if (a.is_zero() && b.is_zero()) return true;  // +0 == -0
  if (a.cls() != b.cls() || a.sign() != b.sign()) return false;
  return !a.is_finite() || a.magnitude() == b.magnitude();
}

bool same_repr(const SzValue& a, const SzValue& b) {
  return encode_bits(a) == encode_bits(b);
}

}  // namespace szval
