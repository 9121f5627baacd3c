#include "szval/arith.hpp"
#include "szval/value.hpp"

#include "doctest.h"

#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

using namespace szval;

namespace {

const SzValue pz = SzValue::zero(Sign::Positive);
const SzValue nz = SzValue::zero(Sign::Negative);
const SzValue pinf = SzValue::infinity(Sign::Positive);
const SzValue ninf = SzValue::infinity(Sign::Negative);
const SzValue qnan = SzValue::nan();

SzValue fin(double d) { return SzValue::from_double(d); }

// The nine-value special set used throughout: finites first, then the
// signed specials.
std::vector<SzValue> special_set() {
  return {fin(1.0), fin(-1.0), fin(2.5), fin(-2.5), pz, nz, pinf, ninf, qnan};
}

// Model result vs. a host double: exact bit pattern, except that any host
// NaN matches the canonical model NaN (payloads are not modeled).
bool matches_host(const SzValue& model, double host) {
  if (model.is_nan()) return std::isnan(host);
  return encode_bits(model) == std::bit_cast<std::uint64_t>(host);
}

}  // namespace

TEST_CASE("rule table: arithmetic sign rules") {
  CHECK(same_repr(div(nz, fin(4.0)), nz));        // -0/|x| = -0
  CHECK(same_repr(div(nz, fin(123.25)), nz));
  CHECK(same_repr(mul(nz, nz), pz));              // (-0)*(-0) = +0
}

TEST_CASE("rule table: cancellation rules") {
  CHECK(same_repr(add(fin(5.0), pz), fin(5.0)));  // x + (+-0) = x
  CHECK(same_repr(add(fin(5.0), nz), fin(5.0)));
  CHECK(same_repr(add(fin(-2.5), pz), fin(-2.5)));
  CHECK(same_repr(add(nz, nz), nz));              // (-0)+(-0) = -0
  CHECK(same_repr(sub(nz, pz), nz));              // (-0)-(+0) = -0
  CHECK(same_repr(add(pz, pz), pz));              // (+0)+(+0) = +0
  CHECK(same_repr(sub(pz, nz), pz));              // (+0)-(-0) = +0
  CHECK(same_repr(sub(fin(3.0), fin(3.0)), pz));  // x - x = +0
  CHECK(same_repr(add(fin(3.0), fin(-3.0)), pz)); // x + (-x) = +0
  CHECK(same_repr(sub(fin(3.0), fin(3.0), RoundingMode::TowardNegative), nz));
  CHECK(same_repr(add(fin(3.0), fin(-3.0), RoundingMode::TowardNegative), nz));
}

TEST_CASE("rule table: other special rules") {
  CHECK(same_repr(sqrt(nz), nz));                 // sqrt(-0) = -0
  CHECK(same_repr(div(nz, ninf), pz));            // -0/-inf = +0
  CHECK(same_repr(div(fin(4.0), nz), ninf));      // |x|/-0 = -inf
  CHECK(mul(pz, pinf).is_nan());                  // +-0 * +-inf = NaN
  CHECK(mul(pz, ninf).is_nan());
  CHECK(mul(nz, pinf).is_nan());
  CHECK(mul(ninf, nz).is_nan());
  CHECK(div(pz, pz).is_nan());                    // +-0 / +-0 = NaN
  CHECK(div(pz, nz).is_nan());
  CHECK(div(nz, pz).is_nan());
  CHECK(div(nz, nz).is_nan());
}

TEST_CASE("rule table: zero-distinguishing tricks") {
  CHECK(same_repr(reciprocal(pz), pinf));         // 1/(+0) = +inf
  CHECK(same_repr(reciprocal(nz), ninf));         // 1/(-0) = -inf
  CHECK(same_repr(reciprocal(fin(2.0)), fin(0.5)));
  CHECK(same_repr(copysign(fin(3.0), nz), fin(-3.0)));
  CHECK(same_repr(copysign(nz, fin(1.0)), pz));
  CHECK(same_repr(copysign(pinf, fin(-5.0)), ninf));
  CHECK(sign_bit(nz) == Sign::Negative);
  CHECK(sign_bit(pz) == Sign::Positive);
  CHECK(sign_bit(fin(-5.0)) == Sign::Negative);
}

TEST_CASE("add and sub specials") {
  CHECK(same_repr(add(pz, nz), pz));  // mixed zeros, to-nearest
  CHECK(same_repr(add(nz, pz), pz));
  CHECK(same_repr(add(pz, nz, RoundingMode::TowardNegative), nz));
  CHECK(add(pinf, ninf).is_nan());
  CHECK(add(ninf, pinf).is_nan());
  CHECK(same_repr(add(pinf, pinf), pinf));
  CHECK(same_repr(add(pinf, fin(7.0)), pinf));
  CHECK(same_repr(sub(fin(3.0), fin(3.0), RoundingMode::TowardNegative), nz));
  CHECK(same_repr(add(fin(1.5), fin(2.0)), fin(3.5)));
}

TEST_CASE("mul and div specials") {
  CHECK(same_repr(mul(nz, fin(7.0)), nz));
  CHECK(same_repr(mul(fin(7.0), nz), nz));
  CHECK(same_repr(mul(pinf, pinf), pinf));
  CHECK(same_repr(mul(pinf, ninf), ninf));
  CHECK(same_repr(mul(ninf, fin(2.0)), ninf));
  CHECK(div(pinf, ninf).is_nan());
  CHECK(same_repr(div(pinf, fin(2.0)), pinf));
  CHECK(same_repr(div(pinf, nz), ninf));
  CHECK(same_repr(div(fin(1.0), pinf), pz));
  CHECK(same_repr(div(fin(1.0), ninf), nz));
  CHECK(same_repr(div(pz, fin(4.0)), pz));
  CHECK(same_repr(div(pz, ninf), nz));
}

TEST_CASE("sqrt and neg") {
  CHECK(same_repr(sqrt(pz), pz));
  CHECK(sqrt(fin(-4.0)).is_nan());
  CHECK(sqrt(ninf).is_nan());
  CHECK(same_repr(sqrt(pinf), pinf));
  CHECK(same_repr(sqrt(fin(9.0)), fin(3.0)));
  CHECK(same_repr(neg(pz), nz));
  CHECK(same_repr(neg(neg(fin(5.0))), fin(5.0)));
  CHECK(same_repr(neg(ninf), pinf));
  CHECK(neg(qnan).is_nan());
}

TEST_CASE("numeric_eq vs same_repr") {
  CHECK(numeric_eq(pz, nz));
  CHECK_FALSE(same_repr(pz, nz));
  CHECK_FALSE(numeric_eq(qnan, qnan));
  CHECK(same_repr(qnan, qnan));
  CHECK(numeric_eq(fin(5.0), fin(5.0)));
  CHECK(same_repr(nz, nz));
  CHECK(same_repr(fin(5.0), fin(5.0)));
  CHECK_FALSE(numeric_eq(fin(5.0), fin(-5.0)));
  CHECK_FALSE(numeric_eq(pinf, fin(5.0)));
  CHECK(numeric_eq(pinf, pinf));
  CHECK_FALSE(numeric_eq(pinf, ninf));
  CHECK_FALSE(numeric_eq(pz, fin(1.0)));
}

TEST_CASE("bit codec") {
  CHECK(encode_bits(nz) == 0x8000000000000000ull);
  CHECK(encode_bits(pz) == 0);
  CHECK(encode_bits(pinf) == 0x7ff0000000000000ull);
  CHECK(encode_bits(qnan) == 0x7ff8000000000000ull);
  SzValue v = decode_bits(encode_bits(fin(1.5)));
  CHECK(same_repr(v, fin(1.5)));
  CHECK(to_hex_bits(nz) == "8000000000000000");
  CHECK(to_hex_bits(fin(1.0)) == "3ff0000000000000");

  // Any NaN pattern decodes to the canonical NaN.
  CHECK(decode_bits(0xfff0000000000001ull).is_nan());
  CHECK(decode_bits(0x7ff0000000000001ull).is_nan());

  CHECK_THROWS_AS(decode_bits(0x0000000000000001ull), std::domain_error);
  CHECK_THROWS_AS(decode_bits(0x8000000000000001ull), std::domain_error);
  CHECK_THROWS_AS(decode_bits(0x000fffffffffffffull), std::domain_error);
}

TEST_CASE("round trip over representable values") {
  for (const SzValue& v : special_set()) {
    SzValue back = decode_bits(encode_bits(v));
    CHECK(back.cls() == v.cls());
    CHECK(back.sign() == v.sign());
    CHECK(same_repr(back, v));
  }
  std::mt19937_64 rng(20240811);
  for (int i = 0; i < 2000; ++i) {
    double d = std::bit_cast<double>(rng());
    if (!std::isfinite(d) || d == 0.0 || !std::isnormal(d)) continue;
    SzValue v = SzValue::from_double(d);
    CHECK(same_repr(decode_bits(encode_bits(v)), v));
  }
}

TEST_CASE("rendering contract") {
  CHECK(to_string(pz) == "+0");
  CHECK(to_string(nz) == "-0");
  CHECK(to_string(pinf) == "+inf");
  CHECK(to_string(ninf) == "-inf");
  CHECK(to_string(qnan) == "nan");
  CHECK(to_string(fin(5.0)) == "5");
  CHECK(to_string(fin(2.5)) == "2.5");
  CHECK(to_string(fin(-2.5)) == "-2.5");
  CHECK(to_string(fin(0.5)) == "0.5");
}

TEST_CASE("value parsing") {
  CHECK(same_repr(*parse_value("+0"), pz));
  CHECK(same_repr(*parse_value("-0"), nz));
  CHECK(same_repr(*parse_value("inf"), pinf));
  CHECK(same_repr(*parse_value("-inf"), ninf));
  CHECK(parse_value("nan")->is_nan());
  CHECK(same_repr(*parse_value("2.5"), fin(2.5)));
  CHECK(same_repr(*parse_value("-3"), fin(-3.0)));
  CHECK_FALSE(parse_value("abc").has_value());
  CHECK_FALSE(parse_value("1.5x").has_value());
  CHECK_FALSE(parse_value("").has_value());
}

TEST_CASE("invalid finite construction") {
  CHECK_THROWS_AS(SzValue::finite(Sign::Positive, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(SzValue::finite(Sign::Positive, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(
      SzValue::finite(Sign::Positive, std::numeric_limits<double>::infinity()),
      std::invalid_argument);
}

TEST_CASE("differential: special set pairs against host binary64") {
  auto values = special_set();
  for (const SzValue& a : values) {
    for (const SzValue& b : values) {
      double ha = a.to_double();
      double hb = b.to_double();
      CAPTURE(to_string(a));
      CAPTURE(to_string(b));
      CHECK(matches_host(add(a, b), ha + hb));
      CHECK(matches_host(sub(a, b), ha - hb));
      CHECK(matches_host(mul(a, b), ha * hb));
      CHECK(matches_host(div(a, b), ha / hb));
      CHECK(matches_host(copysign(a, b), std::copysign(ha, hb)));
    }
    CHECK(matches_host(sqrt(a), std::sqrt(a.to_double())));
    CHECK(matches_host(neg(a), -a.to_double()));
  }
}

TEST_CASE("differential: random finite pairs against host binary64") {
  std::mt19937_64 rng(987654321);
  auto random_finite = [&]() {
    for (;;) {
      double d = std::bit_cast<double>(rng());
      if (std::isfinite(d)) return d;
    }
  };
  for (int i = 0; i < 20000; ++i) {
    double da = random_finite();
    double db = random_finite();
    SzValue a = SzValue::from_double(da);
    SzValue b = SzValue::from_double(db);
    CAPTURE(da);
    CAPTURE(db);
    REQUIRE(matches_host(add(a, b), da + db));
    REQUIRE(matches_host(sub(a, b), da - db));
    REQUIRE(matches_host(mul(a, b), da * db));
    REQUIRE(matches_host(div(a, b), da / db));
    REQUIRE(matches_host(copysign(a, b), std::copysign(da, db)));
    REQUIRE(matches_host(sqrt(a), std::sqrt(da)));
    REQUIRE(matches_host(neg(a), -da));
  }
}

TEST_CASE("property: sign algebra for mul and div") {
  auto values = special_set();
  for (const SzValue& a : values) {
    for (const SzValue& b : values) {
      SzValue p = mul(a, b);
      if (!p.is_nan()) {
        CHECK(sign_bit(p) == combined(sign_bit(a), sign_bit(b)));
      }
      SzValue q = div(a, b);
      if (!q.is_nan()) {
        CHECK(sign_bit(q) == combined(sign_bit(a), sign_bit(b)));
      }
    }
  }
}

TEST_CASE("property: commutativity, involution, sub as add-neg") {
  auto values = special_set();
  std::mt19937_64 rng(13579);
  for (int i = 0; i < 500; ++i) {
    double d = std::bit_cast<double>(rng());
    if (std::isfinite(d) && d != 0.0) values.push_back(SzValue::from_double(d));
  }
  for (const SzValue& a : values) {
    CHECK(same_repr(neg(neg(a)), a));
    CHECK(same_repr(reciprocal(a), div(SzValue::from_double(1.0), a)));
    for (const SzValue& b : values) {
      SzValue ab = mul(a, b);
      SzValue ba = mul(b, a);
      if (!ab.is_nan()) CHECK(same_repr(ab, ba));
      SzValue sum = add(a, b);
      if (!sum.is_nan()) CHECK(same_repr(sum, add(b, a)));
      for (RoundingMode rm : {RoundingMode::ToNearest, RoundingMode::TowardNegative}) {
        CHECK(same_repr(sub(a, b, rm), add(a, neg(b), rm)));
      }
    }
  }
}

TEST_CASE("property: numeric_eq is an equivalence on non-NaN values") {
  auto values = special_set();
  for (const SzValue& a : values) {
    if (a.is_nan()) continue;
    CHECK(numeric_eq(a, a));
    for (const SzValue& b : values) {
      if (b.is_nan()) continue;
      CHECK(numeric_eq(a, b) == numeric_eq(b, a));
      if (same_repr(a, b)) CHECK(numeric_eq(a, b));
      for (const SzValue& c : values) {
        if (c.is_nan()) continue;
        if (numeric_eq(a, b) && numeric_eq(b, c)) CHECK(numeric_eq(a, c));
      }
    }
  }
}
