/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

#include "vnnlib/numeric.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <system_error>

#include "vnnlib/theory.hpp"

namespace vnnlib::numeric {

std::optional<Rational> parseDecimal(std::string_view text) {
  if (!isElementLiteral(text)) return std::nullopt;
  bool negative = text.front() == '-';
  if (negative) text.remove_prefix(1);
  auto dot = text.find('.');
  std::string digits(text.substr(0, dot));
  std::size_t fraction = 0;
  if (dot != std::string_view::npos) {
    digits += text.substr(dot + 1);
    fraction = text.size() - dot - 1;
  }
  mpz_class num(digits, 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, fraction);
  Rational q(num, den);
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

std::string toDecimalString(const Rational& q) {
  mpz_class den = q.get_den();
  unsigned long twos = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(2).get_mpz_t());
  unsigned long fives = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(5).get_mpz_t());
  if (den != 1) return q.get_num().get_str() + "/" + q.get_den().get_str();

  unsigned long places = std::max(twos, fives);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  mpz_class scaled = q.get_num() * scale / q.get_den();
  bool negative = scaled < 0;
  std::string digits = mpz_class(abs(scaled)).get_str();
  if (places > 0) {
    if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
    digits.insert(digits.size() - places, ".");
  }
  return negative ? "-" + digits : digits;
}

Rational exactRational(double value) {
  if (!std::isfinite(value)) throw std::domain_error("exactRational: non-finite value");
  return Rational(value);  // mpq_set_d is exact
}

namespace {

// floor(log2(a)) for a > 0.
long floorLog2(const mpz_class& num, const mpz_class& den) {
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) - static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  // 2^e <= a  <=>  num >= den * 2^e
  mpz_class lhs = num, rhs = den;
  if (e >= 0) {
    rhs <<= e;
  } else {
    lhs <<= -e;
  }
  return lhs >= rhs ? e : e - 1;
}

}  // namespace

double roundToFormat(const Rational& q, BinaryFormat format, bool negative) {
  if (q == 0) return negative ? -0.0 : 0.0;
  bool neg = q < 0;
  mpz_class num = abs(q.get_num());
  const mpz_class& den = q.get_den();

  long e = std::max<long>(floorLog2(num, den), format.minExponent);
  long k = e - (format.precision - 1);  // exponent of one unit in the last place
  // m = a / 2^k = scaledNum / scaledDen
  mpz_class scaledNum = num, scaledDen = den;
  if (k >= 0) {
    scaledDen <<= k;
  } else {
    scaledNum <<= -k;
  }
  mpz_class whole, rem;
  mpz_fdiv_qr(whole.get_mpz_t(), rem.get_mpz_t(), scaledNum.get_mpz_t(), scaledDen.get_mpz_t());
  mpz_class twiceRem = rem * 2;
  int half = mpz_cmp(twiceRem.get_mpz_t(), scaledDen.get_mpz_t());
  if (half > 0 || (half == 0 && mpz_odd_p(whole.get_mpz_t()))) ++whole;

  // Largest finite magnitude is (2^p - 1) * 2^(emax - p + 1).
  mpz_class maxWhole = (mpz_class(1) << format.precision) - 1;
  long maxK = format.maxExponent - (format.precision - 1);
  bool overflow = false;
  if (k > maxK) {
    overflow = true;
  } else if (k == maxK) {
    overflow = whole > maxWhole;
  }
  if (overflow) return neg ? -std::numeric_limits<double>::infinity() : std::numeric_limits<double>::infinity();
  if (whole == 0) return neg ? -0.0 : 0.0;
  double magnitude = std::ldexp(whole.get_d(), static_cast<int>(k));
  return neg ? -magnitude : magnitude;
}

double roundToBinary16(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  int e = 0;
  std::frexp(x, &e);  // 2^(e-1) <= |x| < 2^e
  int quantumExp = std::max(e - 1 - (kBinary16.precision - 1), kBinary16.minExponent - (kBinary16.precision - 1));
  double scaled = std::ldexp(x, -quantumExp);  // exact: power-of-two scaling
  double rounded = std::ldexp(std::nearbyint(scaled), quantumExp);
  if (std::fabs(rounded) > 65504.0) return std::copysign(std::numeric_limits<double>::infinity(), x);
  if (rounded == 0.0) return std::copysign(0.0, x);
  return rounded;
}

std::string shortestDecimal(double value, BinaryFormat format) {
  char buf[2048];
  std::to_chars_result res;
  if (format.precision <= kBinary32.precision) {
    res = std::to_chars(buf, buf + sizeof buf, static_cast<float>(value), std::chars_format::fixed);
  } else {
    res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
  }
  if (res.ec != std::errc()) throw std::runtime_error("shortestDecimal: buffer too small");
  return std::string(buf, res.ptr);
}

}  // namespace vnnlib::numeric
