/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

#include <charconv>
#include <initializer_list>

#include "vnnlib/syntax.hpp"

namespace vnnlib {

namespace {

std::optional<CmpOp> comparisonFor(std::string_view text) {
  if (text == "<") return CmpOp::Less;
  if (text == "<=") return CmpOp::LessEq;
  if (text == ">") return CmpOp::Greater;
  if (text == ">=") return CmpOp::GreaterEq;
  if (text == "==") return CmpOp::Equal;
  if (text == "!=") return CmpOp::NotEqual;
  return std::nullopt;
}

std::string quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

class Parser {
 public:
  Parser(std::string_view source, std::vector<Token> tokens) : source_(source), tokens_(std::move(tokens)) {}

  Query query() {
    Query q;
    q.version = version();
    while (startsForm("declare-network")) q.networks.push_back(network());
    if (q.networks.empty()) fail({quoted("(declare-network")});
    while (!done()) {
      if (startsForm("declare-network")) {
        // Declarations may not be interleaved with assertions.
        fail({quoted("(assert")});
      }
      q.asserts.push_back(assertion());
    }
    return q;
  }

 private:
  bool done() const { return pos_ >= tokens_.size(); }

  const Token* peek(std::size_t ahead = 0) const {
    return pos_ + ahead < tokens_.size() ? &tokens_[pos_ + ahead] : nullptr;
  }

  bool startsForm(std::string_view keyword) const {
    const Token* open = peek();
    const Token* kw = peek(1);
    return open && kw && open->kind == TokenKind::LParen && kw->kind == TokenKind::Keyword && kw->text == keyword;
  }

  Span here() const {
    if (const Token* t = peek()) return t->span;
    // End of input: point at the final byte boundary.
    Span s{source_.size(), source_.size(), 1, 1};
    for (char c : source_) {
      if (c == '\n') {
        ++s.line;
        s.column = 1;
      } else {
        ++s.column;
      }
    }
    return s;
  }

  std::string found() const {
    const Token* t = peek();
    if (!t) return "end of input";
    if (t->kind == TokenKind::String) return "\"" + t->text + "\"";
    if (t->kind == TokenKind::Version) return "<" + t->text + ">";
    return quoted(t->text);
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(here(), std::move(expected), found());
  }

  const Token& expect(TokenKind kind, std::string_view text = {}) {
    const Token* t = peek();
    if (!t || t->kind != kind || (!text.empty() && t->text != text)) {
      fail({text.empty() ? std::string(toString(kind)) : quoted(text)});
    }
    ++pos_;
    return *t;
  }

  Span closeSpan(const Span& open) {
    const Token& close = expect(TokenKind::RParen);
    return Span{open.begin, close.span.end, open.line, open.column};
  }

  Version version() {
    const Token& open = expect(TokenKind::LParen);
    expect(TokenKind::Keyword, "vnnlib-version");
    const Token* t = peek();
    std::string text;
    if (t && t->kind == TokenKind::Version) {
      text = t->text;
    } else if (t && t->kind == TokenKind::Number && t->text.find('.') != std::string::npos && t->text[0] != '-') {
      text = t->text;
    } else {
      fail({"version number"});
    }
    auto dot = text.find('.');
    Version v;
    v.major = natural(std::string_view(text).substr(0, dot));
    v.minor = natural(std::string_view(text).substr(dot + 1));
    ++pos_;
    v.span = closeSpan(open.span);
    return v;
  }

  std::uint64_t natural(std::string_view digits) const {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) fail({"natural number"});
    return value;
  }

  std::uint64_t naturalToken() {
    const Token* t = peek();
    if (!t || t->kind != TokenKind::Number || t->text.find_first_of(".-") != std::string::npos) {
      fail({"natural number"});
    }
    auto value = natural(t->text);
    ++pos_;
    return value;
  }

  std::string name() {
    const Token* t = peek();
    if (!t || t->kind != TokenKind::Identifier) fail({"name"});
    ++pos_;
    return t->text;
  }

  // `[n, ..., n]`, possibly empty.
  std::vector<std::uint64_t> naturalList() {
    expect(TokenKind::LBracket);
    std::vector<std::uint64_t> out;
    if (const Token* t = peek(); t && t->kind == TokenKind::RBracket) {
      ++pos_;
      return out;
    }
    out.push_back(naturalToken());
    while (true) {
      const Token* t = peek();
      if (t && t->kind == TokenKind::Comma) {
        ++pos_;
        out.push_back(naturalToken());
      } else if (t && t->kind == TokenKind::RBracket) {
        ++pos_;
        return out;
      } else {
        fail({"','", "']'"});
      }
    }
  }

  NetworkDecl network() {
    const Token& open = expect(TokenKind::LParen);
    expect(TokenKind::Keyword, "declare-network");
    NetworkDecl n;
    n.name = name();
    if (startsForm("equal-to") || startsForm("isomorphic-to")) {
      const Token& eqOpen = expect(TokenKind::LParen);
      const Token& kw = *peek();
      ++pos_;
      Equiv e;
      e.kind = kw.text == "equal-to" ? Equiv::Kind::EqualTo : Equiv::Kind::IsomorphicTo;
      e.target = name();
      e.span = closeSpan(eqOpen.span);
      n.equiv = std::move(e);
    }
    while (startsForm("declare-input")) n.inputs.push_back(io("declare-input"));
    if (n.inputs.empty()) fail({quoted("(declare-input")});
    while (startsForm("declare-hidden")) n.hidden.push_back(hidden());
    while (startsForm("declare-output")) n.outputs.push_back(io("declare-output"));
    if (n.outputs.empty()) {
      if (n.hidden.empty()) fail({quoted("(declare-input"), quoted("(declare-hidden"), quoted("(declare-output")});
      fail({quoted("(declare-hidden"), quoted("(declare-output")});
    }
    if (const Token* t = peek(); !t || t->kind != TokenKind::RParen) fail({quoted("(declare-output"), "')'"});
    n.span = closeSpan(open.span);
    return n;
  }

  std::string elementType() {
    const Token* t = peek();
    if (!t || t->kind != TokenKind::Identifier) fail({"element type"});
    ++pos_;
    return t->text;
  }

  IoDecl io(std::string_view keyword) {
    const Token& open = expect(TokenKind::LParen);
    expect(TokenKind::Keyword, keyword);
    IoDecl d;
    d.varName = name();
    d.elementType = elementType();
    d.shape = Shape(naturalList());
    d.span = closeSpan(open.span);
    return d;
  }

  HiddenDecl hidden() {
    const Token& open = expect(TokenKind::LParen);
    expect(TokenKind::Keyword, "declare-hidden");
    HiddenDecl d;
    d.varName = name();
    d.elementType = elementType();
    d.shape = Shape(naturalList());
    const Token* t = peek();
    if (!t || t->kind != TokenKind::String || t->text.empty()) fail({"node output reference"});
    d.nodeRef = t->text;
    ++pos_;
    d.span = closeSpan(open.span);
    return d;
  }

  Assertion assertion() {
    const Token& open = expect(TokenKind::LParen);
    expect(TokenKind::Keyword, "assert");
    Assertion a;
    a.expr = boolean();
    a.span = closeSpan(open.span);
    return a;
  }

  bool atClose() const {
    const Token* t = peek();
    return t && t->kind == TokenKind::RParen;
  }

  BoolExpr boolean() {
    const Token& open = expect(TokenKind::LParen);
    const Token* head = peek();
    if (head && head->kind == TokenKind::Keyword && (head->text == "and" || head->text == "or")) {
      ++pos_;
      auto kind = head->text == "and" ? BoolExpr::Kind::And : BoolExpr::Kind::Or;
      std::vector<BoolExpr> children;
      while (!atClose()) {
        if (done()) fail({"'('", "')'"});
        if (peek()->kind != TokenKind::LParen) fail({"'('", "')'"});
        children.push_back(boolean());
      }
      if (children.size() < 2) {
        throw ArityError(Span{open.span.begin, peek()->span.end, open.span.line, open.span.column}, head->text,
                         "at least 2", children.size());
      }
      return BoolExpr::connective(kind, std::move(children), closeSpan(open.span));
    }
    if (head && head->kind == TokenKind::Operator) {
      if (auto op = comparisonFor(head->text)) {
        ++pos_;
        std::vector<ArithExpr> sides;
        while (!atClose()) {
          if (done()) fail({"arithmetic expression", "')'"});
          sides.push_back(arith());
        }
        if (sides.size() != 2) {
          throw ArityError(Span{open.span.begin, peek()->span.end, open.span.line, open.span.column}, head->text,
                           "exactly 2", sides.size());
        }
        return BoolExpr::compare(*op, std::move(sides[0]), std::move(sides[1]), closeSpan(open.span));
      }
    }
    fail({"'and'", "'or'", "comparison operator"});
  }

  ArithExpr arith() {
    const Token* t = peek();
    if (!t) fail({"arithmetic expression"});
    if (t->kind == TokenKind::Number) {
      ++pos_;
      return ArithExpr::constant(t->text, t->span);
    }
    if (t->kind == TokenKind::Identifier) {
      ++pos_;
      Span span = t->span;
      std::optional<std::vector<std::uint64_t>> indices;
      if (const Token* b = peek(); b && b->kind == TokenKind::LBracket) {
        indices = naturalList();
        span.end = tokens_[pos_ - 1].span.end;
      }
      return ArithExpr::variable(t->text, std::move(indices), span);
    }
    if (t->kind != TokenKind::LParen) fail({"arithmetic expression"});
    const Token& open = *t;
    ++pos_;
    const Token* head = peek();
    if (!head || head->kind != TokenKind::Operator || comparisonFor(head->text)) fail({"'+'", "'-'", "'*'"});
    ++pos_;
    std::vector<ArithExpr> operands;
    while (!atClose()) {
      if (done()) fail({"arithmetic expression", "')'"});
      operands.push_back(arith());
    }
    Span span{open.span.begin, peek()->span.end, open.span.line, open.span.column};
    if (head->text == "-") {
      if (operands.empty()) throw ArityError(span, "-", "at least 1", 0);
      closeSpan(open.span);
      if (operands.size() == 1) return ArithExpr::nary(ArithExpr::Kind::Neg, std::move(operands), span);
      return ArithExpr::nary(ArithExpr::Kind::Sub, std::move(operands), span);
    }
    if (operands.size() < 2) throw ArityError(span, head->text, "at least 2", operands.size());
    closeSpan(open.span);
    auto kind = head->text == "+" ? ArithExpr::Kind::Add : ArithExpr::Kind::Mul;
    return ArithExpr::nary(kind, std::move(operands), span);
  }

  std::string_view source_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Query parseQuery(std::string_view source) { return Parser(source, lex(source)).query(); }

}  // namespace vnnlib
