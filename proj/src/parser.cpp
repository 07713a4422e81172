#include "symk/parser.hpp"

#include <cctype>

namespace symk {

namespace {

class Parser {
 public:
  Parser(const std::string& text, Registry& reg, const Field& field)
      : text_(text), reg_(reg), field_(field) {}

  RationalFunction run() {
    RationalFunction e = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  RationalFunction expr() {
    RationalFunction acc = term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc = acc + term();
      } else if (c == '-') {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  RationalFunction term() {
    RationalFunction acc = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '/') {
        ++pos_;
        std::size_t at = pos_;
        RationalFunction rhs = factor();
        if (rhs.is_zero()) throw DivisionByZeroError("division by zero at position " + std::to_string(at));
        acc = acc / rhs;
      } else {
        return acc;
      }
    }
  }

  RationalFunction factor() {
    RationalFunction b = base();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      if (pos_ >= text_.size()) throw ParseError("expected exponent after '^'", at);
      if (text_[pos_] == '-') throw ParseError("negative exponents are not allowed", at);
      if (!std::isdigit((unsigned char)text_[pos_])) throw ParseError("exponent must be a nonnegative integer", at);
      std::uint64_t e = 0;
      while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
        e = e * 10 + (std::uint64_t)(text_[pos_] - '0');
        if (e > 1000000) throw ParseError("exponent too large", at);
        ++pos_;
      }
      return b.pow((long long)e);
    }
    return b;
  }

  RationalFunction base() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -base();
    }
    if (c == '(') {
      ++pos_;
      RationalFunction e = expr();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return e;
    }
    if (std::isdigit((unsigned char)c)) {
      Integer n = 0;
      while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
        n = n * 10 + (int)(text_[pos_] - '0');
        ++pos_;
      }
      return RationalFunction::constant(Coeff::integer(field_, n));
    }
    if (std::isalpha((unsigned char)c) || c == '_') {
      std::size_t at = pos_;
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum((unsigned char)text_[pos_]) || text_[pos_] == '_')) {
        name.push_back(text_[pos_]);
        ++pos_;
      }
      if (field_.kind() == Field::Kind::extension && name == Field::generator_name())
        return RationalFunction::constant(Coeff::generator(field_));
      try {
        return RationalFunction::variable(field_, reg_.get_or_add(name));
      } catch (const PreconditionError& e) {
        throw ParseError(e.what(), at);
      }
    }
    if (c == '\0') throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  const std::string& text_;
  Registry& reg_;
  const Field& field_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_expr(const std::string& text, Registry& registry, const Field& field) {
  return Parser(text, registry, field).run();
}

}  // namespace symk
