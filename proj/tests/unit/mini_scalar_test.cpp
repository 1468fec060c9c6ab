/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "generators.hpp"
#include "oracles.hpp"
#include "vnnlib/mini/scalar.hpp"

namespace vnnlib::mini {
namespace {

double f(const Scalar& s) { return std::get<double>(s); }
std::int64_t i(const Scalar& s) { return std::get<std::int64_t>(s); }

TEST(DTypes, Vocabulary) {
  for (auto name : kDTypeNames) EXPECT_EQ(toString(*parseDType(name)), name);
  EXPECT_FALSE(parseDType("real").has_value());
  EXPECT_FALSE(parseDType("bfloat16").has_value());
  EXPECT_EQ(bitWidth(DType::Int16), 16);
  EXPECT_TRUE(isFloat(DType::Float16));
  EXPECT_FALSE(isFloat(DType::Int64));
}

TEST(JudgeElement, IntegerAndFloatLiterals) {
  EXPECT_TRUE(judgeElement("1", DType::Int32));
  EXPECT_FALSE(judgeElement("1.1", DType::Int32));
  EXPECT_TRUE(judgeElement("1.1", DType::Float64));
  EXPECT_TRUE(judgeElement("1", DType::Float64));
  EXPECT_TRUE(judgeElement("3.000", DType::Int16));
}

TEST(JudgeElement, IntegerRanges) {
  // Range limits computed as -2^(w-1) .. 2^(w-1)-1.
  for (DType t : {DType::Int16, DType::Int32, DType::Int64}) {
    mpz_class lo = -(mpz_class(1) << (bitWidth(t) - 1));
    mpz_class hi = (mpz_class(1) << (bitWidth(t) - 1)) - 1;
    EXPECT_TRUE(judgeElement(lo.get_str(), t));
    EXPECT_TRUE(judgeElement(hi.get_str(), t));
    EXPECT_FALSE(judgeElement(mpz_class(lo - 1).get_str(), t));
    EXPECT_FALSE(judgeElement(mpz_class(hi + 1).get_str(), t));
  }
  EXPECT_FALSE(judgeElement("-2147483649", DType::Int32));
  EXPECT_TRUE(judgeElement("-2147483648", DType::Int32));
}

TEST(FromLiteral, RoundsFloatsAndKeepsNegativeZero) {
  EXPECT_EQ(f(*fromLiteral("0.1", DType::Float32)), static_cast<double>(0.1f));
  EXPECT_EQ(f(*fromLiteral("0.1", DType::Float64)), 0.1);
  EXPECT_TRUE(std::signbit(f(*fromLiteral("-0.0", DType::Float32))));
  EXPECT_EQ(f(*fromLiteral("100000", DType::Float16)), std::numeric_limits<double>::infinity());
  EXPECT_EQ(i(*fromLiteral("-7", DType::Int16)), -7);
  EXPECT_FALSE(fromLiteral("1.5", DType::Int32).has_value());
}

TEST(FromLiteralProperty, FloatsMatchOracleRounding) {
  std::mt19937_64 rng(21);
  const std::pair<DType, oracle::Format> cases[] = {{DType::Float16, oracle::Format::Binary16},
                                                    {DType::Float32, oracle::Format::Binary32},
                                                    {DType::Float64, oracle::Format::Binary64}};
  for (const auto& [dtype, format] : cases) {
    for (int n = 0; n < 2000; ++n) {
      std::string text = gen::randomDecimal(rng, 70000, 25);
      // Digits without the point over 10^k.
      std::string digits = text;
      std::size_t point = digits.find('.');
      std::size_t fraction = 0;
      if (point != std::string::npos) {
        fraction = digits.size() - point - 1;
        digits.erase(point, 1);
      }
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, fraction);
      mpq_class exact(mpz_class(digits, 10), scale);
      exact.canonicalize();
      double want = oracle::roundNearestEven(exact, format, text[0] == '-');
      ASSERT_TRUE(oracle::sameBits(f(*fromLiteral(text, dtype)), want)) << text << " " << toString(dtype);
    }
  }
}

TEST(FloatOps, SumOfTenthsFollowsRationalOracle) {
  // Oracle: exact sum of the two rounded operands, rounded once, compared
  // with the rounded literal 0.3.
  struct Case {
    DType type;
    oracle::Format format;
  };
  for (Case c : {Case{DType::Float32, oracle::Format::Binary32}, Case{DType::Float64, oracle::Format::Binary64}}) {
    Scalar a = *fromLiteral("0.1", c.type), b = *fromLiteral("0.2", c.type);
    Scalar three = *fromLiteral("0.3", c.type);
    Scalar sum = add(c.type, a, b);
    double want = oracle::reference(oracle::Op::Add, f(a), f(b), c.format);
    double threeTenths = oracle::roundNearestEven(mpq_class(3, 10), c.format);
    EXPECT_EQ(f(sum), want);
    EXPECT_EQ(f(three), threeTenths);
    EXPECT_EQ(compare(CmpOp::Equal, c.type, sum, three), want == threeTenths);
  }
  // The two formats disagree: binary32 rounds the sum onto 0.3, binary64 does not.
  EXPECT_TRUE(compare(CmpOp::Equal, DType::Float32, add(DType::Float32, *fromLiteral("0.1", DType::Float32),
                                                         *fromLiteral("0.2", DType::Float32)),
                      *fromLiteral("0.3", DType::Float32)));
  EXPECT_FALSE(compare(CmpOp::Equal, DType::Float64, add(DType::Float64, 0.1, 0.2), 0.3));
}

TEST(FloatOps, LargeFloat32AdditionTiesToEven) {
  Scalar sum = add(DType::Float32, 16777216.0, 1.0);
  EXPECT_EQ(f(sum), 16777216.0);
  EXPECT_EQ(oracle::reference(oracle::Op::Add, 16777216.0, 1.0, oracle::Format::Binary32), 16777216.0);
}

TEST(FloatOps, NaNComparisons) {
  double nan = std::numeric_limits<double>::quiet_NaN();
  for (DType t : {DType::Float16, DType::Float32, DType::Float64}) {
    EXPECT_TRUE(compare(CmpOp::NotEqual, t, nan, nan));
    for (CmpOp op : {CmpOp::Less, CmpOp::LessEq, CmpOp::Greater, CmpOp::GreaterEq, CmpOp::Equal}) {
      EXPECT_FALSE(compare(op, t, nan, nan));
      EXPECT_FALSE(compare(op, t, nan, 1.0));
    }
  }
}

TEST(FloatOps, ReluAndNegate) {
  EXPECT_EQ(f(relu(DType::Float32, -1.0)), 0.0);
  EXPECT_EQ(f(relu(DType::Float32, 0.0)), 0.0);
  EXPECT_EQ(f(relu(DType::Float32, 2.5)), 2.5);
  EXPECT_TRUE(std::signbit(f(negate(DType::Float64, 0.0))));
  EXPECT_EQ(f(negate(DType::Float16, 1.5)), -1.5);
}

TEST(FloatOps, Float16Overflow) {
  EXPECT_EQ(f(add(DType::Float16, 65504.0, 65504.0)), std::numeric_limits<double>::infinity());
  EXPECT_EQ(f(multiply(DType::Float16, 256.0, 256.0)), std::numeric_limits<double>::infinity());
}

TEST(IntegerOps, ExactAndWrapping) {
  EXPECT_EQ(i(add(DType::Int32, std::int64_t{1}, std::int64_t{1})), 2);
  EXPECT_EQ(i(add(DType::Int32, std::int64_t{2147483647}, std::int64_t{1})), -2147483648LL);
  EXPECT_EQ(i(add(DType::Int16, std::int64_t{32767}, std::int64_t{1})), -32768);
  EXPECT_EQ(i(multiply(DType::Int16, std::int64_t{256}, std::int64_t{256})), 0);
  EXPECT_EQ(i(negate(DType::Int32, std::int64_t{-2147483648LL})), -2147483648LL);
  EXPECT_EQ(i(add(DType::Int64, std::numeric_limits<std::int64_t>::max(), std::int64_t{1})),
            std::numeric_limits<std::int64_t>::min());
  EXPECT_EQ(i(subtract(DType::Int32, std::int64_t{-2147483648LL}, std::int64_t{1})), 2147483647);
}

TEST(IntegerOpsProperty, MatchesModularArithmetic) {
  std::mt19937_64 rng(31);
  for (DType t : {DType::Int16, DType::Int32, DType::Int64}) {
    int w = bitWidth(t);
    mpz_class modulus = mpz_class(1) << w;
    mpz_class half = mpz_class(1) << (w - 1);
    auto wrap = [&](mpz_class v) {
      v = ((v + half) % modulus + modulus) % modulus - half;
      return v;
    };
    for (int n = 0; n < 3000; ++n) {
      std::int64_t a = static_cast<std::int64_t>(rng()), b = static_cast<std::int64_t>(rng());
      a = wrap(mpz_class(std::to_string(a), 10)).get_si();
      b = wrap(mpz_class(std::to_string(b), 10)).get_si();
      mpz_class ma(std::to_string(a)), mb(std::to_string(b));
      ASSERT_EQ(std::to_string(i(add(t, a, b))), wrap(ma + mb).get_str());
      ASSERT_EQ(std::to_string(i(subtract(t, a, b))), wrap(ma - mb).get_str());
      ASSERT_EQ(std::to_string(i(multiply(t, a, b))), wrap(ma * mb).get_str());
    }
  }
}

TEST(CorrectRoundingProperty, AllFloatOpsMatchOracle) {
  std::mt19937_64 rng(41);
  const std::pair<DType, oracle::Format> cases[] = {{DType::Float16, oracle::Format::Binary16},
                                                    {DType::Float32, oracle::Format::Binary32},
                                                    {DType::Float64, oracle::Format::Binary64}};
  for (const auto& [dtype, format] : cases) {
    for (int n = 0; n < 10000; ++n) {
      double a = oracle::randomValue(rng, format), b = oracle::randomValue(rng, format);
      ASSERT_TRUE(oracle::sameBits(f(add(dtype, a, b)), oracle::reference(oracle::Op::Add, a, b, format))) << a << "+" << b;
      ASSERT_TRUE(oracle::sameBits(f(subtract(dtype, a, b)), oracle::reference(oracle::Op::Sub, a, b, format)))
          << a << "-" << b;
      ASSERT_TRUE(oracle::sameBits(f(multiply(dtype, a, b)), oracle::reference(oracle::Op::Mul, a, b, format)))
          << a << "*" << b;
    }
  }
}

TEST(Float16Table, AdjacentValueSums) {
  // Sums of adjacent table entries stress every binade boundary.
  const auto& halves = oracle::finiteHalves();
  for (std::size_t k = 0; k + 1 < halves.size(); ++k) {
    double a = halves[k], b = halves[k + 1];
    ASSERT_TRUE(oracle::sameBits(f(add(DType::Float16, a, b)),
                                 oracle::reference(oracle::Op::Add, a, b, oracle::Format::Binary16)));
  }
}

TEST(ToLiteralProperty, ReadsBackIdentically) {
  std::mt19937_64 rng(51);
  const std::pair<DType, oracle::Format> cases[] = {{DType::Float16, oracle::Format::Binary16},
                                                    {DType::Float32, oracle::Format::Binary32},
                                                    {DType::Float64, oracle::Format::Binary64}};
  for (const auto& [dtype, format] : cases) {
    for (int n = 0; n < 2000; ++n) {
      Scalar v = oracle::randomValue(rng, format);
      ASSERT_TRUE(identical(*fromLiteral(toLiteral(dtype, v), dtype), v)) << toLiteral(dtype, v);
    }
  }
  for (std::int64_t v : {std::int64_t{0}, std::int64_t{-32768}, std::int64_t{32767}}) {
    EXPECT_TRUE(identical(*fromLiteral(toLiteral(DType::Int16, v), DType::Int16), Scalar{v}));
  }
}

TEST(FromDouble, RoundsAndClamps) {
  EXPECT_EQ(f(fromDouble(DType::Float32, 0.1)), static_cast<double>(0.1f));
  EXPECT_EQ(i(fromDouble(DType::Int32, 2.6)), 3);
  EXPECT_EQ(i(fromDouble(DType::Int16, 1e9)), 32767);
  EXPECT_EQ(i(fromDouble(DType::Int16, -1e9)), -32768);
}

TEST(Conversions, ToRationalIsExact) {
  EXPECT_EQ(toRational(Scalar{0.1}), oracle::exact(0.1));
  EXPECT_EQ(toRational(Scalar{std::int64_t{-5}}), mpq_class(-5));
  EXPECT_EQ(toDouble(Scalar{std::int64_t{7}}), 7.0);
}

}  // namespace
}  // namespace vnnlib::mini
