#include "garnier/rational.hpp"

#include <cctype>

namespace garnier {

Rational rational_from_string(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  size_t i = 0;
  auto fail = [&](const char *msg) -> Rational {
    throw ParseError(std::string("bad rational '") + std::string(text) +
                         "': " + msg,
                     i);
  };
  if (text.empty())
    return fail("empty");
  std::string num, den;
  if (text[i] == '+' || text[i] == '-')
    num.push_back(text[i++]);
  size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    num.push_back(text[i++]);
    ++digits;
  }
  if (digits == 0)
    return fail("expected digits");
  if (i < text.size()) {
    if (text[i] != '/')
      return fail("unexpected character");
    ++i;
    size_t dd = 0;
    while (i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i]))) {
      den.push_back(text[i++]);
      ++dd;
    }
    if (dd == 0 || i != text.size())
      return fail("bad denominator");
  }
  mpq_class r;
  if (den.empty())
    r = mpq_class(num);
  else {
    if (mpz_class(den) == 0)
      throw DivisionByZeroError("zero denominator in rational literal");
    r = mpq_class(num + "/" + den);
  }
  r.canonicalize();
  return r;
}

std::string to_string(const Rational &r) {
  if (r.get_den() == 1)
    return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_pow(const Rational &r, long e) {
  if (e == 0)
    return Rational(1);
  Rational base = r;
  if (e < 0) {
    if (r == 0)
      throw DivisionByZeroError("0 raised to a negative power");
    base = Rational(r.get_den(), r.get_num());
    base.canonicalize();
    e = -e;
  }
  Rational acc(1);
  while (e > 0) {
    if (e & 1)
      acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

} // namespace garnier
