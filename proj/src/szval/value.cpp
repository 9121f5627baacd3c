#include "szval/value.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace szval {

namespace {

constexpr std::uint64_t kSignBit = 0x8000000000000000ull;
constexpr std::uint64_t kExponentMask = 0x7ff0000000000000ull;
constexpr std::uint64_t kFractionMask = 0x000fffffffffffffull;
constexpr std::uint64_t kCanonicalNan = 0x7ff8000000000000ull;

}  // namespace

SzValue SzValue::finite(Sign sign, double magnitude) {
  if (!(magnitude > 0.0) || !std::isfinite(magnitude)) {
    throw std::invalid_argument("finite magnitude must be strictly positive and finite");
  }
  return SzValue(ValueClass::Finite, sign, magnitude);
}

SzValue SzValue::zero(Sign sign) { return SzValue(ValueClass::Zero, sign, 0.0); }

SzValue SzValue::infinity(Sign sign) { return SzValue(ValueClass::Infinity, sign, 0.0); }

SzValue SzValue::nan() { return SzValue(ValueClass::NaN, Sign::Positive, 0.0); }

SzValue SzValue::from_double(double d) {
  if (std::isnan(d)) return nan();
  Sign sign = std::signbit(d) ? Sign::Negative : Sign::Positive;
  if (std::isinf(d)) return infinity(sign);
  if (d == 0.0) return zero(sign);
  return finite(sign, std::fabs(d));
}

double SzValue::to_double() const {
  double base;
  switch (cls_) {
    case ValueClass::Finite:
      base = magnitude_;
      break;
    case ValueClass::Zero:
      base = 0.0;
      break;
    case ValueClass::Infinity:
      base = std::numeric_limits<double>::infinity();
      break;
    case ValueClass::NaN:
      return std::bit_cast<double>(kCanonicalNan);
  }
  return sign_ == Sign::Negative ? -base : base;
}

std::uint64_t encode_bits(const SzValue& v) {
  std::uint64_t sign = v.sign() == Sign::Negative ? kSignBit : 0;
  switch (v.cls()) {
    case ValueClass::Zero:
      return sign;
    case ValueClass::Infinity:
      return sign | kExponentMask;
    case ValueClass::NaN:
      return kCanonicalNan;
    case ValueClass::Finite:
      return sign | std::bit_cast<std::uint64_t>(v.magnitude());
  }
  return 0;  // unreachable
}

SzValue decode_bits(std::uint64_t bits) {
  Sign sign = (bits & kSignBit) ? Sign::Negative : Sign::Positive;
  std::uint64_t exponent = bits & kExponentMask;
  std::uint64_t fraction = bits & kFractionMask;
  if (exponent == kExponentMask) {
    return fraction == 0 ? SzValue::infinity(sign) : SzValue::nan();
  }
  if (exponent == 0) {
    if (fraction == 0) return SzValue::zero(sign);
    throw std::domain_error("subnormal bit pattern is outside the modeled domain");
  }
  return SzValue::finite(sign, std::bit_cast<double>(bits & ~kSignBit));
}

std::string to_string(const SzValue& v) {
  switch (v.cls()) {
    case ValueClass::Zero:
      return v.is_negative() ? "-0" : "+0";
    case ValueClass::Infinity:
      return v.is_negative() ? "-inf" : "+inf";
    case ValueClass::NaN:
      return "nan";
    case ValueClass::Finite:
      break;
  }
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v.to_double());
  return std::string(buf, res.ptr);
}

std::string to_hex_bits(const SzValue& v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(encode_bits(v)));
  return std::string(buf, 16);
}

std::optional<SzValue> parse_value(std::string_view text) {
  if (text == "+0") return SzValue::zero(Sign::Positive);
  if (text == "-0") return SzValue::zero(Sign::Negative);
  if (text == "inf" || text == "+inf") return SzValue::infinity(Sign::Positive);
  if (text == "-inf") return SzValue::infinity(Sign::Negative);
  if (text == "nan") return SzValue::nan();
  if (text.empty()) return std::nullopt;
  std::string owned(text);
  char* end = nullptr;
  double d = std::strtod(owned.c_str(), &end);
  if (end != owned.c_str() + owned.size()) return std::nullopt;
  if (std::isnan(d) || std::isinf(d)) return std::nullopt;  // only the spellings above
  return SzValue::from_double(d);
}

}  // namespace szval
