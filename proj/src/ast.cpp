/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

#include "vnnlib/ast.hpp"

#include <algorithm>

namespace vnnlib {

ArithExpr ArithExpr::constant(std::string literal, Span span) {
  ArithExpr e;
  e.kind = Kind::Const;
  e.text = std::move(literal);
  e.span = span;
  return e;
}

ArithExpr ArithExpr::variable(std::string name, std::optional<std::vector<std::uint64_t>> indices, Span span) {
  ArithExpr e;
  e.kind = Kind::Var;
  e.text = std::move(name);
  e.indices = std::move(indices);
  e.span = span;
  return e;
}

ArithExpr ArithExpr::nary(Kind kind, std::vector<ArithExpr> operands, Span span) {
  ArithExpr e;
  e.kind = kind;
  e.operands = std::move(operands);
  e.span = span;
  return e;
}

BoolExpr BoolExpr::compare(CmpOp op, ArithExpr lhs, ArithExpr rhs, Span span) {
  BoolExpr b;
  b.kind = Kind::Cmp;
  b.op = op;
  b.sides.push_back(std::move(lhs));
  b.sides.push_back(std::move(rhs));
  b.span = span;
  return b;
}

BoolExpr BoolExpr::connective(Kind kind, std::vector<BoolExpr> children, Span span) {
  BoolExpr b;
  b.kind = kind;
  b.children = std::move(children);
  b.span = span;
  return b;
}

namespace {

template <class T, class Eq>
bool sameList(const std::vector<T>& a, const std::vector<T>& b, Eq eq) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), eq);
}

bool sameIo(const IoDecl& a, const IoDecl& b) {
  return a.varName == b.varName && a.elementType == b.elementType && a.shape == b.shape;
}

bool sameHidden(const HiddenDecl& a, const HiddenDecl& b) {
  return a.varName == b.varName && a.elementType == b.elementType && a.shape == b.shape && a.nodeRef == b.nodeRef;
}

}  // namespace

bool sameStructure(const ArithExpr& a, const ArithExpr& b) {
  if (a.kind != b.kind || a.text != b.text || a.indices != b.indices) return false;
  return sameList(a.operands, b.operands, [](const ArithExpr& x, const ArithExpr& y) { return sameStructure(x, y); });
}

bool sameStructure(const BoolExpr& a, const BoolExpr& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == BoolExpr::Kind::Cmp) {
    return a.op == b.op &&
           sameList(a.sides, b.sides, [](const ArithExpr& x, const ArithExpr& y) { return sameStructure(x, y); });
  }
  return sameList(a.children, b.children, [](const BoolExpr& x, const BoolExpr& y) { return sameStructure(x, y); });
}

bool sameStructure(const NetworkDecl& a, const NetworkDecl& b) {
  if (a.name != b.name || a.equiv.has_value() != b.equiv.has_value()) return false;
  if (a.equiv && (a.equiv->kind != b.equiv->kind || a.equiv->target != b.equiv->target)) return false;
  return sameList(a.inputs, b.inputs, sameIo) && sameList(a.hidden, b.hidden, sameHidden) &&
         sameList(a.outputs, b.outputs, sameIo);
}

bool sameStructure(const Query& a, const Query& b) {
  if (a.version.major != b.version.major || a.version.minor != b.version.minor) return false;
  return sameList(a.networks, b.networks,
                  [](const NetworkDecl& x, const NetworkDecl& y) { return sameStructure(x, y); }) &&
         sameList(a.asserts, b.asserts,
                  [](const Assertion& x, const Assertion& y) { return sameStructure(x.expr, y.expr); });
}

std::string_view keywordFor(ArithExpr::Kind kind) {
  switch (kind) {
    case ArithExpr::Kind::Neg:
    case ArithExpr::Kind::Sub: return "-";
    case ArithExpr::Kind::Add: return "+";
    case ArithExpr::Kind::Mul: return "*";
    default: return "";
  }
}

std::string_view keywordFor(Equiv::Kind kind) {
  return kind == Equiv::Kind::EqualTo ? "equal-to" : "isomorphic-to";
}

}  // namespace vnnlib
