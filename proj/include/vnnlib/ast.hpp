/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vnnlib/theory.hpp"

namespace vnnlib {

/// Half-open byte range [begin, end) in the source, plus the 1-based
/// line/column of `begin`.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t line = 1;
  std::size_t column = 1;

  friend bool operator==(const Span&, const Span&) = default;
};

struct Version {
  std::uint64_t major = 2;
  std::uint64_t minor = 0;
  Span span;
};

struct IoDecl {
  std::string varName;
  std::string elementType;
  Shape shape;
  Span span;
};

struct HiddenDecl {
  std::string varName;
  std::string elementType;
  Shape shape;
  std::string nodeRef;
  Span span;
};

struct Equiv {
  enum class Kind { EqualTo, IsomorphicTo };
  Kind kind = Kind::EqualTo;
  std::string target;
  Span span;
};

struct NetworkDecl {
  std::string name;
  std::optional<Equiv> equiv;
  std::vector<IoDecl> inputs;
  std::vector<HiddenDecl> hidden;
  std::vector<IoDecl> outputs;
  Span span;
};

struct ArithExpr {
  enum class Kind { Const, Var, Neg, Add, Mul, Sub };

  Kind kind = Kind::Const;
  // Literal text for Const, variable name for Var.
  std::string text;
  // Var only; absent when the source had no brackets.
  std::optional<std::vector<std::uint64_t>> indices;
  std::vector<ArithExpr> operands;
  Span span;

  static ArithExpr constant(std::string literal, Span span = {});
  static ArithExpr variable(std::string name, std::optional<std::vector<std::uint64_t>> indices, Span span = {});
  static ArithExpr nary(Kind kind, std::vector<ArithExpr> operands, Span span = {});
};

struct BoolExpr {
  enum class Kind { And, Or, Cmp };

  Kind kind = Kind::Cmp;
  CmpOp op = CmpOp::LessEq;
  std::vector<BoolExpr> children;  // And / Or
  std::vector<ArithExpr> sides;    // Cmp: exactly {lhs, rhs}
  Span span;

  static BoolExpr compare(CmpOp op, ArithExpr lhs, ArithExpr rhs, Span span = {});
  static BoolExpr connective(Kind kind, std::vector<BoolExpr> children, Span span = {});

  const ArithExpr& lhs() const { return sides.at(0); }
  const ArithExpr& rhs() const { return sides.at(1); }
};

struct Assertion {
  BoolExpr expr;
  Span span;
};

struct Query {
  Version version;
  std::vector<NetworkDecl> networks;
  std::vector<Assertion> asserts;
};

// Structural equality ignoring spans.
bool sameStructure(const ArithExpr& a, const ArithExpr& b);
bool sameStructure(const BoolExpr& a, const BoolExpr& b);
bool sameStructure(const NetworkDecl& a, const NetworkDecl& b);
bool sameStructure(const Query& a, const Query& b);

std::string_view keywordFor(ArithExpr::Kind kind);
std::string_view keywordFor(Equiv::Kind kind);

}  // namespace vnnlib
