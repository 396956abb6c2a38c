#pragma once

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "approxroots/branch.hpp"
#include "approxroots/embedding.hpp"
#include "approxroots/poly.hpp"
#include "approxroots/rational.hpp"

namespace approxroots {

// Malformed input text. Deliberately not an approxroots::Error: the CLI
// reports these as usage errors rather than mathematical failures.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& kind, const std::string& what, std::size_t offset)
      : std::runtime_error(kind + " at byte " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class SyntaxError : public ParseError {
 public:
  SyntaxError(const std::string& what, std::size_t offset) : ParseError("SyntaxError", what, offset) {}
};

// Input that would need coefficients outside the rationals.
class IrrationalLiteral : public ParseError {
 public:
  IrrationalLiteral(const std::string& what, std::size_t offset) : ParseError("IrrationalLiteral", what, offset) {}
};

namespace detail {

// Recursive descent over
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/' | <juxtaposition>) unary)*
//   unary := ('-' | '+') unary | power
//   power := atom ('^' exponent)?
//   atom  := integer | variable | '(' expr ')'
// Values are polynomials in two slots; `vars` maps names to X or Y.
class ExprParser {
 public:
  ExprParser(const std::string& text, std::map<std::string, YPoly> vars, std::size_t base_offset = 0)
      : text_(text), vars_(std::move(vars)), base_(base_offset) {}

  YPoly parse() {
    YPoly v = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, base_ + pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool starts_atom() {
    const char c = peek();
    return c == '(' || std::isalnum(static_cast<unsigned char>(c));
  }

  YPoly expr() {
    YPoly acc = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  YPoly term() {
    YPoly acc = unary();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= unary();
      } else if (c == '/') {
        ++pos_;
        skip_space();
        const std::size_t at = pos_;
        const YPoly d = unary();
        if (!d.is_constant() || !d[0].is_constant()) throw SyntaxError("division by a non-constant", base_ + at);
        if (d.is_zero()) throw SyntaxError("division by zero", base_ + at);
        acc = acc.scaled(Rational(1 / d[0][0]));
      } else if (starts_atom()) {
        acc *= unary();
      } else {
        return acc;
      }
    }
  }

  YPoly unary() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  YPoly power() {
    YPoly base = atom();
    if (peek() != '^') return base;
    ++pos_;
    const std::size_t at = (skip_space(), pos_);
    // A parenthesized exponent may be any constant expression, so that
    // "X^(1/2)" is reported as fractional rather than as a syntax error.
    YPoly e;
    if (peek() == '(') {
      e = atom();
    } else if (peek() == '-') {
      throw SyntaxError("negative exponent", base_ + at);
    } else {
      e = YPoly(XPoly(number()));  // "X^1/2" is (X^1)/2 by precedence
    }
    if (!e.is_constant() || !e[0].is_constant()) throw SyntaxError("exponent must be a number", base_ + at);
    const Rational k = e[0][0];
    if (!is_integer(k)) throw IrrationalLiteral("fractional exponent", base_ + at);
    if (sgn(k) < 0) throw SyntaxError("negative exponent", base_ + at);
    if (!k.get_num().fits_ulong_p() || k > 10000) throw SyntaxError("exponent too large", base_ + at);
    return base.pow(k.get_num().get_ui());
  }

  Rational number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a number");
    if (pos_ < text_.size() && text_[pos_] == '.') fail("decimal literals are not supported; write a fraction");
    return Rational(Integer(text_.substr(start, pos_ - start)));
  }

  YPoly atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      YPoly v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return YPoly(XPoly(number()));
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      // Single-letter variables juxtapose ("XY" is X*Y); longer words are names.
      std::size_t end = start;
      while (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) ++end;
      const std::string word = text_.substr(start, end - start);
      static const char* const kIrrational[] = {"sqrt", "pi", "e", "i", "I", "exp", "log", "ln", "cbrt", "root"};
      for (const char* name : kIrrational)
        if (word == name) throw IrrationalLiteral("'" + word + "' is not a rational constant", base_ + start);
      auto it = vars_.find(std::string(1, c));
      if (it == vars_.end()) throw SyntaxError("unknown identifier '" + word + "'", base_ + start);
      ++pos_;
      return it->second;
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& text_;
  std::map<std::string, YPoly> vars_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

inline XPoly to_univariate(const YPoly& p, std::size_t offset) {
  if (!p.is_constant()) throw SyntaxError("only the variable T is allowed here", offset);
  return p[0];
}

}  // namespace detail

// A polynomial in X and Y, e.g. "Y^4 - 2X^3Y^2 - 4*X^5*Y + X^6 - X^7".
inline YPoly parse_curve(const std::string& text) {
  return detail::ExprParser(text, {{"X", YPoly(XPoly::variable())}, {"Y", YPoly::variable()}}).parse();
}

// A polynomial in T.
inline XPoly parse_univariate(const std::string& text, std::size_t base_offset = 0) {
  return detail::to_univariate(detail::ExprParser(text, {{"T", YPoly(XPoly::variable())}}, base_offset).parse(),
                               base_offset);
}

// "n; y(T)" for the branch X = T^n, Y = y(T).
inline Parameterization parse_parameterization(const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos) throw SyntaxError("expected 'n; y(T)'", text.size());
  const std::string head = text.substr(0, semi);
  const auto first = head.find_first_not_of(" \t\n\r");
  const auto last = head.find_last_not_of(" \t\n\r");
  if (first == std::string::npos) throw SyntaxError("missing n before ';'", 0);
  const std::string digits = head.substr(first, last - first + 1);
  for (std::size_t i = 0; i < digits.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) throw SyntaxError("n must be a positive integer", first + i);
  if (digits.size() > 6) throw SyntaxError("n is too large", first);
  Parameterization p;
  p.n = std::stol(digits);
  p.y = parse_univariate(text.substr(semi + 1), semi + 1);
  return p;
}

}  // namespace approxroots
