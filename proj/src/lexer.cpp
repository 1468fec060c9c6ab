/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

#include <algorithm>
#include <array>
#include <cctype>

#include "vnnlib/syntax.hpp"

namespace vnnlib {

namespace {

constexpr std::array kKeywords = {
    std::string_view{"vnnlib-version"}, std::string_view{"declare-network"}, std::string_view{"declare-input"},
    std::string_view{"declare-hidden"}, std::string_view{"declare-output"},  std::string_view{"equal-to"},
    std::string_view{"isomorphic-to"},  std::string_view{"assert"},          std::string_view{"and"},
    std::string_view{"or"},
};

bool isDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool isAlpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool isNameChar(char c) { return isAlpha(c) || isDigit(c) || c == '_' || c == '-'; }

std::string describeChar(char c) {
  auto u = static_cast<unsigned char>(c);
  if (u >= 0x21 && u < 0x7f) return std::string(1, c);
  static constexpr char kHex[] = "0123456789abcdef";
  return std::string("\\x") + kHex[u >> 4] + kHex[u & 0xf];
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skipTrivia();
      if (pos_ >= src_.size()) break;
      out.push_back(next());
    }
    return out;
  }

 private:
  Span spanFrom(std::size_t begin, std::size_t line, std::size_t col) const { return Span{begin, pos_, line, col}; }

  [[noreturn]] void fail(std::size_t at) const {
    Span s{at, std::min(at + 1, src_.size()), line_, col_ + (at - pos_)};
    throw LexError(s, at < src_.size() ? describeChar(src_[at]) : std::string("end of input"));
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  bool at(char c, std::size_t ahead = 0) const { return pos_ + ahead < src_.size() && src_[pos_ + ahead] == c; }

  void skipTrivia() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == ';') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  void digits() {
    if (pos_ >= src_.size() || !isDigit(src_[pos_])) fail(pos_);
    while (pos_ < src_.size() && isDigit(src_[pos_])) advance();
  }

  Token next() {
    std::size_t begin = pos_, line = line_, col = col_;
    char c = src_[pos_];
    auto single = [&](TokenKind kind) {
      advance();
      return Token{kind, std::string(1, c), spanFrom(begin, line, col)};
    };
    switch (c) {
      case '(': return single(TokenKind::LParen);
      case ')': return single(TokenKind::RParen);
      case '[': return single(TokenKind::LBracket);
      case ']': return single(TokenKind::RBracket);
      case ',': return single(TokenKind::Comma);
      case '+':
      case '*': return single(TokenKind::Operator);
      case '"': return string(begin, line, col);
      default: break;
    }
    if (c == '-') {
      if (pos_ + 1 < src_.size() && isDigit(src_[pos_ + 1])) return number(begin, line, col);
      return single(TokenKind::Operator);
    }
    if (c == '<' && pos_ + 1 < src_.size() && isDigit(src_[pos_ + 1])) return version(begin, line, col);
    if (c == '<' || c == '>') {
      advance();
      if (at('=')) advance();
      return Token{TokenKind::Operator, std::string(src_.substr(begin, pos_ - begin)), spanFrom(begin, line, col)};
    }
    if (c == '=' || c == '!') {
      if (!at('=', 1)) fail(pos_ + 1 < src_.size() ? pos_ + 1 : pos_);
      advance();
      advance();
      return Token{TokenKind::Operator, std::string(src_.substr(begin, 2)), spanFrom(begin, line, col)};
    }
    if (isDigit(c)) return number(begin, line, col);
    if (isAlpha(c)) {
      while (pos_ < src_.size() && isNameChar(src_[pos_])) advance();
      std::string word(src_.substr(begin, pos_ - begin));
      auto kind = isKeyword(word) ? TokenKind::Keyword : TokenKind::Identifier;
      return Token{kind, std::move(word), spanFrom(begin, line, col)};
    }
    fail(pos_);
  }

  Token number(std::size_t begin, std::size_t line, std::size_t col) {
    if (at('-')) advance();
    digits();
    if (at('.')) {
      advance();
      digits();
    }
    // `1e5`, `2.0.1`, `3abc` are malformed rather than two adjacent tokens.
    if (pos_ < src_.size() && (isNameChar(src_[pos_]) || src_[pos_] == '.')) fail(pos_);
    return Token{TokenKind::Number, std::string(src_.substr(begin, pos_ - begin)), spanFrom(begin, line, col)};
  }

  Token version(std::size_t begin, std::size_t line, std::size_t col) {
    advance();  // <
    digits();
    if (!at('.')) fail(pos_);
    advance();
    digits();
    if (!at('>')) fail(pos_);
    advance();
    return Token{TokenKind::Version, std::string(src_.substr(begin + 1, pos_ - begin - 2)),
                 spanFrom(begin, line, col)};
  }

  Token string(std::size_t begin, std::size_t line, std::size_t col) {
    advance();  // opening quote
    while (pos_ < src_.size() && src_[pos_] != '"') {
      if (src_[pos_] == '\n') fail(pos_);
      advance();
    }
    if (pos_ >= src_.size()) throw LexError(Span{begin, src_.size(), line, col}, "unterminated string");
    advance();
    return Token{TokenKind::String, std::string(src_.substr(begin + 1, pos_ - begin - 2)),
                 spanFrom(begin, line, col)};
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace

bool isKeyword(std::string_view word) {
  for (auto k : kKeywords) {
    if (k == word) return true;
  }
  return false;
}

std::string_view toString(TokenKind kind) {
  switch (kind) {
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::Comma: return "','";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Operator: return "operator";
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Number: return "number";
    case TokenKind::Version: return "version literal";
    case TokenKind::String: return "string";
  }
  return "token";
}

LexError::LexError(Span span, std::string offending)
    : SyntaxError("LexError", span, "unexpected character " + offending), offending_(std::move(offending)) {}

namespace {

std::string joinExpected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i != 0) out += i + 1 == expected.size() ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

}  // namespace

ParseError::ParseError(Span span, std::vector<std::string> expected, std::string found)
    : SyntaxError("ParseError", span, "expected " + joinExpected(expected) + ", found " + found),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

ArityError::ArityError(Span span, const std::string& op, const std::string& requirement, std::size_t got)
    : SyntaxError("ArityError", span,
                  "'" + op + "' takes " + requirement + " operands, got " + std::to_string(got)) {}

std::vector<Token> lex(std::string_view source) { return Lexer(source).run(); }

}  // namespace vnnlib
