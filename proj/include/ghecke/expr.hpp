#pragma once

// Recursive-descent parser shared by the polynomial and Hecke element text forms.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' integer)?
//   primary := rational | identifier | '(' expr ')'
//
// Rationals are written "7" or "3/2"; identifiers are [A-Za-z][A-Za-z0-9_]*.

#include "ghecke/rational.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ghecke {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

template <class R>
class ExpressionParser {
 public:
  using AtomFn = std::function<R(const std::string&, std::size_t offset)>;
  using NumberFn = std::function<R(const Rational&)>;

  ExpressionParser(AtomFn atom, NumberFn number) : atom_(std::move(atom)), number_(std::move(number)) {}

  R parse(std::string_view text) {
    text_ = text;
    pos_ = 0;
    R out = expr();
    skip();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return out;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  R expr() {
    R acc = term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }
  R term() {
    R acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }
  R unary() {
    if (accept('-')) return number_(Rational(-1)) * unary();
    return power();
  }
  R power() {
    R base = primary();
    if (!accept('^')) return base;
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected exponent", pos_);
    unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
    R out = number_(Rational(1));
    for (unsigned long i = 0; i < e; ++i) out = out * base;
    return out;
  }
  R primary() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      R inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ + 1 < text_.size() && text_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
      try {
        return number_(parse_rational(text_.substr(start, pos_ - start)));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), start);
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return atom_(std::string(text_.substr(start, pos_ - start)), start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  AtomFn atom_;
  NumberFn number_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace ghecke
