/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

// Exact rationals, decimal <-> rational conversion and correctly rounded
// conversion of rationals to IEEE 754 binary formats.

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace vnnlib {

/// Arbitrary-precision rational in canonical form (gcd = 1, denominator > 0).
using Rational = mpq_class;

namespace numeric {

/// IEEE 754 binary interchange format: `precision` significand bits
/// (including the hidden bit) and the exponent range of normal numbers.
struct BinaryFormat {
  int precision;
  int minExponent;
  int maxExponent;
};

inline constexpr BinaryFormat kBinary16{11, -14, 15};
inline constexpr BinaryFormat kBinary32{24, -126, 127};
inline constexpr BinaryFormat kBinary64{53, -1022, 1023};

/// Exact value of a decimal literal `-?[0-9]+(\.[0-9]+)?`; nullopt otherwise.
std::optional<Rational> parseDecimal(std::string_view text);

/// Exact decimal rendering when the expansion terminates (denominator of the
/// form 2^a 5^b), else `num/den`.
std::string toDecimalString(const Rational& q);

/// Exact rational value of a finite double.
Rational exactRational(double value);

/// `q` rounded to `format` with round-to-nearest, ties-to-even; overflow
/// gives ±infinity. The result is returned as a double, which represents
/// every value of the three supported formats exactly. `negative` selects
/// the sign of a zero result.
double roundToFormat(const Rational& q, BinaryFormat format, bool negative = false);

/// Rounds a double to the nearest binary16 value (ties-to-even), returned as
/// a double. Used on results that are exact in binary64.
double roundToBinary16(double exact);

/// Shortest decimal string that converts back to `value` under `format`.
/// `value` must be finite and representable in `format`.
std::string shortestDecimal(double value, BinaryFormat format);

}  // namespace numeric
}  // namespace vnnlib
