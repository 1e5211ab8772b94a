#include "garnier/parse.hpp"

#include <cctype>

#include "garnier/errors.hpp"

namespace garnier {

int var_index(std::string_view name) {
  for (int i = 0; i < kNumVars; ++i)
    if (kVarNames[i] == name)
      return i;
  return -1;
}

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expression parse() {
    Expression e = expr();
    skip_ws();
    if (pos_ != text_.size())
      fail("unexpected trailing input");
    return e;
  }

private:
  std::string_view text_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError(msg, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
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

  Expression expr() {
    Expression e = term();
    for (;;) {
      if (eat('+'))
        e = e + term();
      else if (eat('-'))
        e = e - term();
      else
        return e;
    }
  }

  Expression term() {
    Expression e = factor();
    for (;;) {
      if (eat('*'))
        e = e * factor();
      else if (eat('/')) {
        Expression d = factor();
        if (d.is_zero())
          throw DivisionByZeroError("division by zero in expression");
        e = e / d;
      } else
        return e;
    }
  }

  Expression factor() {
    if (eat('-'))
      return -factor();
    if (eat('+'))
      return factor();
    Expression e = primary();
    while (eat('^')) {
      const long k = exponent();
      if (k < 0 && e.is_zero())
        throw DivisionByZeroError("zero raised to a negative power");
      e = e.pow(k);
    }
    return e;
  }

  long exponent() {
    skip_ws();
    bool paren = eat('(');
    bool neg = eat('-');
    skip_ws();
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected integer exponent");
    long v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 100000)
        fail("exponent too large");
      ++pos_;
    }
    if (paren && !eat(')'))
      fail("expected ')' after exponent");
    return neg ? -v : v;
  }

  Expression primary() {
    skip_ws();
    if (pos_ >= text_.size())
      fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expression e = expr();
      if (!eat(')'))
        fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        digits.push_back(text_[pos_++]);
      return Expression(Rational(mpz_class(digits)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_]))))
        name.push_back(text_[pos_++]);
      const int v = var_index(name);
      if (v < 0)
        fail("unknown variable '" + name + "'");
      return Expression::variable(v);
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

} // namespace

Expression parse_expression(std::string_view text) {
  return Parser(text).parse();
}

std::array<Rational, kNumVars> parse_assignment(std::string_view text,
                                                const Rational &fill,
                                                bool require_all) {
  std::array<Rational, kNumVars> out;
  out.fill(fill);
  std::array<bool, kNumVars> seen{};
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find(',', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    // trim
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front())))
      item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back())))
      item.remove_suffix(1);
    if (!item.empty()) {
      const size_t eq = item.find('=');
      if (eq == std::string_view::npos)
        throw ParseError("expected name=value in assignment", pos);
      std::string_view name = item.substr(0, eq);
      while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back())))
        name.remove_suffix(1);
      const int v = var_index(name);
      if (v < 0)
        throw ParseError("unknown variable '" + std::string(name) + "'", pos);
      out[v] = rational_from_string(item.substr(eq + 1));
      seen[v] = true;
    }
    pos = end + 1;
  }
  if (require_all)
    for (int v = 0; v < kNumVars; ++v)
      if (!seen[v])
        throw ParseError("missing assignment for '" +
                             std::string(kVarNames[v]) + "'",
                         text.size());
  return out;
}

} // namespace garnier
