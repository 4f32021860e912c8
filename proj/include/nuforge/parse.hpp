#pragma once

#include <cctype>
#include <cstddef>
#include <limits>
#include <string>
#include <string_view>

#include "nuforge/errors.hpp"
#include "nuforge/polynomial.hpp"

namespace nuforge {

namespace detail {

// Recursive-descent parser for
//   expr   := term (('+'|'-') term)*
//   term   := coeff? ('*'? factor)*
//   factor := var ('^' nat)?
//   var    := 'z' nat
// Whitespace is ignored; a leading unary minus is allowed.
class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, std::size_t num_vars) : text_(text), num_vars_(num_vars) {}

  Polynomial parse() {
    Polynomial result(num_vars_);
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    parse_term(result, negate);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') throw ParseError(std::string("unexpected '") + op + "'", pos_);
      ++pos_;
      parse_term(result, op == '-');
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected a number", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t natural(std::uint64_t limit) {
    const std::size_t start = pos_;
    const std::string s = digits();
    std::uint64_t v = 0;
    for (char c : s) {
      const std::uint64_t digit = static_cast<std::uint64_t>(c - '0');
      if (v > (limit - digit) / 10) throw ParseError("number too large", start);
      v = v * 10 + digit;
    }
    return v;
  }

  void parse_term(Polynomial& acc, bool negate) {
    skip_ws();
    const std::size_t term_start = pos_;
    Rational coeff = 1;
    Monomial mono(num_vars_);
    bool any = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = Rational(BigInt(digits()));
      any = true;
    }
    for (;;) {
      skip_ws();
      if (at_end()) break;
      std::size_t save = pos_;
      if (peek() == '*') {
        if (!any) throw ParseError("'*' without a left operand", pos_);
        ++pos_;
        skip_ws();
        if (at_end() || peek() != 'z') throw ParseError("expected a variable after '*'", pos_);
      }
      if (peek() != 'z') {
        pos_ = save;
        break;
      }
      const std::size_t var_pos = pos_;
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("expected variable index after 'z'", pos_);
      const auto index = natural(std::numeric_limits<std::uint64_t>::max());
      if (index >= num_vars_)
        throw ParseError("variable z" + std::to_string(index) + " out of range for " +
                             std::to_string(num_vars_) + " variables",
                         var_pos);
      std::uint64_t power = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        power = natural(std::numeric_limits<Exponent>::max());
      }
      const std::uint64_t total = std::uint64_t{mono[index]} + power;
      if (total > std::numeric_limits<Exponent>::max()) throw ParseError("exponent too large", var_pos);
      mono[index] = static_cast<Exponent>(total);
      any = true;
    }
    if (!any) throw ParseError("expected a term", term_start);
    acc.add_term(mono, negate ? Rational(-coeff) : coeff);
  }

  std::string_view text_;
  std::size_t num_vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `text` over variables z0..z{num_vars-1}. Throws ParseError with a
/// character offset on malformed input or an out-of-range variable.
inline Polynomial parse_polynomial(std::string_view text, std::size_t num_vars) {
  return detail::PolynomialParser(text, num_vars).parse();
}

}  // namespace nuforge
