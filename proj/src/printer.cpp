/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

#include "vnnlib/syntax.hpp"

namespace vnnlib {

namespace {

void printList(std::string& out, const std::vector<std::uint64_t>& values) {
  out += '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(values[i]);
  }
  out += ']';
}

void printArithTo(std::string& out, const ArithExpr& e) {
  switch (e.kind) {
    case ArithExpr::Kind::Const: out += e.text; return;
    case ArithExpr::Kind::Var:
      out += e.text;
      if (e.indices) printList(out, *e.indices);
      return;
    default: break;
  }
  out += '(';
  out += keywordFor(e.kind);
  for (const auto& operand : e.operands) {
    out += ' ';
    printArithTo(out, operand);
  }
  out += ')';
}

void printBoolTo(std::string& out, const BoolExpr& b) {
  out += '(';
  if (b.kind == BoolExpr::Kind::Cmp) {
    out += toString(b.op);
    for (const auto& side : b.sides) {
      out += ' ';
      printArithTo(out, side);
    }
  } else {
    out += b.kind == BoolExpr::Kind::And ? "and" : "or";
    for (const auto& child : b.children) {
      out += ' ';
      printBoolTo(out, child);
    }
  }
  out += ')';
}

void printIo(std::string& out, std::string_view keyword, const IoDecl& d) {
  out += "\n  (";
  out += keyword;
  out += ' ' + d.varName + ' ' + d.elementType + ' ';
  printList(out, d.shape.dims);
  out += ')';
}

}  // namespace

std::string printArith(const ArithExpr& expr) {
  std::string out;
  printArithTo(out, expr);
  return out;
}

std::string printBool(const BoolExpr& expr) {
  std::string out;
  printBoolTo(out, expr);
  return out;
}

std::string printQuery(const Query& q) {
  std::string out = "(vnnlib-version <" + std::to_string(q.version.major) + "." + std::to_string(q.version.minor) + ">)\n";
  for (const auto& n : q.networks) {
    out += "\n(declare-network " + n.name;
    if (n.equiv) {
      out += "\n  (";
      out += keywordFor(n.equiv->kind);
      out += ' ' + n.equiv->target + ')';
    }
    for (const auto& d : n.inputs) printIo(out, "declare-input", d);
    for (const auto& h : n.hidden) {
      out += "\n  (declare-hidden " + h.varName + ' ' + h.elementType + ' ';
      printList(out, h.shape.dims);
      out += " \"" + h.nodeRef + "\")";
    }
    for (const auto& d : n.outputs) printIo(out, "declare-output", d);
    out += ")\n";
  }
  if (!q.asserts.empty()) out += '\n';
  for (const auto& a : q.asserts) {
    out += "(assert ";
    printBoolTo(out, a.expr);
    out += ")\n";
  }
  return out;
}

}  // namespace vnnlib
