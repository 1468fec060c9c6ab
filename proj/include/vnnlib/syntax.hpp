/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

// Lexer, recursive-descent parser and canonical printer for query files.
// The first error aborts; no recovery.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vnnlib/ast.hpp"

namespace vnnlib {

enum class TokenKind {
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Keyword,     // declare-network, assert, and, ...
  Operator,    // + - * < <= > >= == !=
  Identifier,
  Number,      // -?[0-9]+(.[0-9]+)?
  Version,     // <2.0>
  String,      // "node_output" (text excludes the quotes)
};

std::string_view toString(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string text;
  Span span;
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::string_view kindName, Span span, const std::string& message)
      : std::runtime_error(message), kindName_(kindName), span_(span) {}

  std::string_view kindName() const { return kindName_; }
  const Span& span() const { return span_; }

 private:
  std::string_view kindName_;
  Span span_;
};

class LexError : public SyntaxError {
 public:
  LexError(Span span, std::string offending);
  const std::string& offending() const { return offending_; }

 private:
  std::string offending_;
};

class ParseError : public SyntaxError {
 public:
  ParseError(Span span, std::vector<std::string> expected, std::string found);
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::vector<std::string> expected_;
  std::string found_;
};

class ArityError : public SyntaxError {
 public:
  ArityError(Span span, const std::string& op, const std::string& requirement, std::size_t got);
};

/// Reserved words; none of them may be used as a name.
bool isKeyword(std::string_view word);

std::vector<Token> lex(std::string_view source);

Query parseQuery(std::string_view source);

/// Canonical text: one declaration/assertion per line, two-space indents,
/// comma-separated shapes and indices, version as `<M.m>`.
std::string printQuery(const Query& query);
std::string printArith(const ArithExpr& expr);
std::string printBool(const BoolExpr& expr);

}  // namespace vnnlib
