/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

#include "vnnlib/mini/scalar.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vnnlib::mini {

std::optional<DType> parseDType(std::string_view token) {
  for (std::size_t i = 0; i < kDTypeNames.size(); ++i) {
    if (kDTypeNames[i] == token) return static_cast<DType>(i);
  }
  return std::nullopt;
}

std::string_view toString(DType dtype) { return kDTypeNames[static_cast<std::size_t>(dtype)]; }

bool isFloat(DType dtype) {
  return dtype == DType::Float16 || dtype == DType::Float32 || dtype == DType::Float64;
}

int bitWidth(DType dtype) {
  switch (dtype) {
    case DType::Int16: return 16;
    case DType::Int32: return 32;
    case DType::Int64: return 64;
    default: throw std::logic_error("bitWidth of a float type");
  }
}

numeric::BinaryFormat binaryFormat(DType dtype) {
  switch (dtype) {
    case DType::Float16: return numeric::kBinary16;
    case DType::Float32: return numeric::kBinary32;
    case DType::Float64: return numeric::kBinary64;
    default: throw std::logic_error("binaryFormat of an integer type");
  }
}

namespace {

double f(const Scalar& a) { return std::get<double>(a); }
std::int64_t i(const Scalar& a) { return std::get<std::int64_t>(a); }

// Two's-complement truncation to `bits`.
std::int64_t wrap(std::uint64_t raw, int bits) {
  if (bits == 64) return static_cast<std::int64_t>(raw);
  std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
  std::uint64_t v = raw & mask;
  std::uint64_t sign = std::uint64_t{1} << (bits - 1);
  return static_cast<std::int64_t>((v ^ sign) - sign);
}

// Result of an op that is exact in binary64, rounded to the element type.
double roundFloat(DType dtype, double exact) {
  switch (dtype) {
    case DType::Float16: return numeric::roundToBinary16(exact);
    case DType::Float32: return static_cast<double>(static_cast<float>(exact));
    default: return exact;
  }
}

}  // namespace

Scalar zero(DType dtype) { return isFloat(dtype) ? Scalar(0.0) : Scalar(std::int64_t{0}); }

Scalar negate(DType dtype, const Scalar& a) {
  if (isFloat(dtype)) return -f(a);
  return wrap(0 - static_cast<std::uint64_t>(i(a)), bitWidth(dtype));
}

Scalar add(DType dtype, const Scalar& a, const Scalar& b) {
  switch (dtype) {
    case DType::Float16: return roundFloat(dtype, f(a) + f(b));  // exact in binary64
    case DType::Float32: return static_cast<double>(static_cast<float>(f(a)) + static_cast<float>(f(b)));
    case DType::Float64: return f(a) + f(b);
    default: return wrap(static_cast<std::uint64_t>(i(a)) + static_cast<std::uint64_t>(i(b)), bitWidth(dtype));
  }
}

Scalar subtract(DType dtype, const Scalar& a, const Scalar& b) {
  switch (dtype) {
    case DType::Float16: return roundFloat(dtype, f(a) - f(b));
    case DType::Float32: return static_cast<double>(static_cast<float>(f(a)) - static_cast<float>(f(b)));
    case DType::Float64: return f(a) - f(b);
    default: return wrap(static_cast<std::uint64_t>(i(a)) - static_cast<std::uint64_t>(i(b)), bitWidth(dtype));
  }
}

Scalar multiply(DType dtype, const Scalar& a, const Scalar& b) {
  switch (dtype) {
    case DType::Float16: return roundFloat(dtype, f(a) * f(b));  // <= 22 significant bits
    case DType::Float32: return static_cast<double>(static_cast<float>(f(a)) * static_cast<float>(f(b)));
    case DType::Float64: return f(a) * f(b);
    default: return wrap(static_cast<std::uint64_t>(i(a)) * static_cast<std::uint64_t>(i(b)), bitWidth(dtype));
  }
}

Scalar relu(DType dtype, const Scalar& a) {
  if (!isFloat(dtype)) throw std::logic_error("Relu is defined on float types only");
  return f(a) < 0.0 ? 0.0 : f(a);
}

bool compare(CmpOp op, DType dtype, const Scalar& a, const Scalar& b) {
  auto cmp = [op](auto x, auto y) {
    switch (op) {
      case CmpOp::Less: return x < y;
      case CmpOp::LessEq: return x <= y;
      case CmpOp::Greater: return x > y;
      case CmpOp::GreaterEq: return x >= y;
      case CmpOp::Equal: return x == y;
      case CmpOp::NotEqual: return x != y;
    }
    return false;
  };
  return isFloat(dtype) ? cmp(f(a), f(b)) : cmp(i(a), i(b));
}

namespace {

std::optional<std::int64_t> integralValue(std::string_view literal, DType dtype) {
  auto q = numeric::parseDecimal(literal);
  if (!q || q->get_den() != 1) return std::nullopt;
  int bits = bitWidth(dtype);
  mpz_class lo = -(mpz_class(1) << (bits - 1));
  mpz_class hi = (mpz_class(1) << (bits - 1)) - 1;
  const mpz_class& n = q->get_num();
  if (n < lo || n > hi) return std::nullopt;
  // Every in-range value fits a signed long on LP64.
  return static_cast<std::int64_t>(n.get_si());
}

}  // namespace

bool judgeElement(std::string_view literal, DType dtype) {
  if (!isElementLiteral(literal)) return false;
  if (isFloat(dtype)) return true;
  return integralValue(literal, dtype).has_value();
}

std::optional<Scalar> fromLiteral(std::string_view literal, DType dtype) {
  if (!isElementLiteral(literal)) return std::nullopt;
  if (isFloat(dtype)) {
    auto q = numeric::parseDecimal(literal);
    return numeric::roundToFormat(*q, binaryFormat(dtype), literal.front() == '-');
  }
  if (auto v = integralValue(literal, dtype)) return Scalar(*v);
  return std::nullopt;
}

Scalar fromDouble(DType dtype, double value) {
  if (isFloat(dtype)) {
    if (!std::isfinite(value)) return value;
    return numeric::roundToFormat(numeric::exactRational(value), binaryFormat(dtype), std::signbit(value));
  }
  int bits = bitWidth(dtype);
  double r = std::nearbyint(value);
  double lo = -std::ldexp(1.0, bits - 1);
  double hi = std::ldexp(1.0, bits - 1);  // exclusive
  if (!(r >= lo)) return std::int64_t{static_cast<std::int64_t>(lo)};
  if (r >= hi) return wrap((std::uint64_t{1} << (bits - 1)) - 1, 64);
  return static_cast<std::int64_t>(r);
}

double toDouble(const Scalar& a) {
  return std::holds_alternative<double>(a) ? f(a) : static_cast<double>(i(a));
}

Rational toRational(const Scalar& a) {
  if (std::holds_alternative<std::int64_t>(a)) {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(i(a)));
    return Rational(z);
  }
  return numeric::exactRational(f(a));
}

std::string toLiteral(DType dtype, const Scalar& a) {
  if (!isFloat(dtype)) return std::to_string(i(a));
  return numeric::shortestDecimal(f(a), binaryFormat(dtype));
}

bool identical(const Scalar& a, const Scalar& b) {
  if (a.index() != b.index()) return false;
  if (std::holds_alternative<double>(a)) return std::bit_cast<std::uint64_t>(f(a)) == std::bit_cast<std::uint64_t>(f(b));
  return i(a) == i(b);
}

}  // namespace vnnlib::mini
