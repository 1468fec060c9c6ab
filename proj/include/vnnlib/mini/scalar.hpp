/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

// Element types of the mini theory and their scalar arithmetic.
//
// Floating-point values of every width are held in a double (binary16 and
// binary32 values are exactly representable there) and every primitive op
// rounds once to the element type, ties-to-even. Integers are held in an
// int64_t and wrap in two's complement at their width.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>

#include "vnnlib/numeric.hpp"
#include "vnnlib/theory.hpp"

namespace vnnlib::mini {

enum class DType { Float16, Float32, Float64, Int16, Int32, Int64 };

inline constexpr std::array<std::string_view, 6> kDTypeNames = {"float16", "float32", "float64",
                                                                "int16",   "int32",   "int64"};

std::optional<DType> parseDType(std::string_view token);
std::string_view toString(DType dtype);
bool isFloat(DType dtype);
/// Bit width of an integer type.
int bitWidth(DType dtype);
numeric::BinaryFormat binaryFormat(DType dtype);

using Scalar = std::variant<double, std::int64_t>;

Scalar zero(DType dtype);
Scalar negate(DType dtype, const Scalar& a);
Scalar add(DType dtype, const Scalar& a, const Scalar& b);
Scalar subtract(DType dtype, const Scalar& a, const Scalar& b);
Scalar multiply(DType dtype, const Scalar& a, const Scalar& b);
Scalar relu(DType dtype, const Scalar& a);
/// IEEE comparison for floats (NaN is unordered: only != holds), exact for integers.
bool compare(CmpOp op, DType dtype, const Scalar& a, const Scalar& b);

/// The (Element) judgement: integers need an integral literal in range,
/// floats accept any literal.
bool judgeElement(std::string_view literal, DType dtype);
/// Value of a literal at `dtype`, correctly rounded for floats; nullopt when
/// judgeElement fails.
std::optional<Scalar> fromLiteral(std::string_view literal, DType dtype);

/// Nearest value of `dtype` (integers: rounded and clamped to range).
Scalar fromDouble(DType dtype, double value);
double toDouble(const Scalar& a);
/// Exact rational of a finite scalar.
Rational toRational(const Scalar& a);
/// Literal text that reads back to exactly `a` at `dtype`.
std::string toLiteral(DType dtype, const Scalar& a);

/// Bit-level equality (distinguishes -0.0, matches NaN payloads).
bool identical(const Scalar& a, const Scalar& b);

}  // namespace vnnlib::mini
