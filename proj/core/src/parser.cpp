#include <triforms/parser.hpp>

#include <cctype>

namespace triforms {

namespace {

class Parser {
public:
  Parser(const std::string &text, const Vars &vars)
      : text_(text), vars_(vars) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip_ws();
    if (pos_ != text_.size())
      fail("unexpected trailing input");
    return r;
  }

private:
  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_), pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(
               static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  RationalFunction expr() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    RationalFunction acc = term();
    if (neg)
      acc = -acc;
    for (;;) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  RationalFunction term() {
    RationalFunction acc = factor();
    for (;;) {
      if (eat('*')) {
        acc = acc * factor();
      } else if (eat('/')) {
        RationalFunction d = factor();
        if (d.is_zero())
          fail("division by zero");
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RationalFunction factor() {
    RationalFunction base = atom();
    if (eat('^')) {
      bool neg = eat('-');
      skip_ws();
      if (pos_ >= text_.size() ||
          !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected integer exponent");
      long e = 0;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + (text_[pos_] - '0');
        if (e > 4096)
          fail("exponent too large");
        ++pos_;
      }
      if (neg && base.is_zero())
        fail("negative power of zero");
      base = base.pow(neg ? -e : e);
    }
    return base;
  }

  RationalFunction atom() {
    skip_ws();
    if (pos_ >= text_.size())
      fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (!eat(')'))
        fail("expected ')'");
      return r;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits += text_[pos_++];
      }
      return RationalFunction::constant(vars_, Rational(Integer(digits)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        name += text_[pos_++];
      }
      auto idx = vars_.index(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return RationalFunction::variable(vars_, *idx);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string &text_;
  const Vars &vars_;
  std::size_t pos_ = 0;
};

} // namespace

RationalFunction parse_rational_function(const std::string &text,
                                         const Vars &vars) {
  return Parser(text, vars).parse();
}

Polynomial parse_polynomial(const std::string &text, const Vars &vars) {
  RationalFunction r = parse_rational_function(text, vars);
  if (!r.is_polynomial())
    throw ParseError("expression is not a polynomial: " + text, 0);
  return r.as_polynomial();
}

} // namespace triforms
