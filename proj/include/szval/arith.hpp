#pragma once

#include "szval/value.hpp"

namespace szval {

// Addition with the special-value cases handled explicitly. Finite operands
// that do not cancel exactly are summed in host precision; exact cancellation
// of equal magnitudes with opposite signs yields +0 to-nearest and -0 toward
// negative. The same mode rule decides the sign of (+0) + (-0).
SzValue add(const SzValue& a, const SzValue& b,
            RoundingMode rm = RoundingMode::ToNearest);

// sub(a, b, rm) is add(a, neg(b), rm), bit for bit.
SzValue sub(const SzValue& a, const SzValue& b,
            RoundingMode rm = RoundingMode::ToNearest);

// Result sign is the exclusive-or of the operand signs; zero times infinity
// is NaN. Finite magnitudes multiply in host precision (so overflow and
// underflow land where the hardware puts them).
SzValue mul(const SzValue& a, const SzValue& b);

// Sign rule as mul; finite/zero gives a signed infinity, zero/zero and
// infinity/infinity give NaN.
SzValue div(const SzValue& a, const SzValue& b);

// sqrt(-0) = -0, sqrt(+0) = +0; negative finite and -inf give NaN.
SzValue sqrt(const SzValue& a);

// Flips the sign; NaN stays the canonical NaN.
SzValue neg(const SzValue& a);

// div(1, a).
SzValue reciprocal(const SzValue& a);

// Class and magnitude of the first operand, sign of the second. A NaN
// magnitude source stays the canonical NaN.
SzValue copysign(const SzValue& magnitude_source, const SzValue& sign_source);

// The stored sign, zeros included (NaN reports the fixed positive convention).
Sign sign_bit(const SzValue& a);

// IEEE numeric equality: +0 == -0, NaN unequal to everything.
bool numeric_eq(const SzValue& a, const SzValue& b);

// Bit-pattern identity; the two NaNs compare equal (single canonical pattern).
bool same_repr(const SzValue& a, const SzValue& b);

}  // namespace szval
