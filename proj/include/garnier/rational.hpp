#ifndef GARNIER_RATIONAL_HPP
#define GARNIER_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "garnier/errors.hpp"

namespace garnier {

// Exact arbitrary-precision rational. GMP keeps the canonical form we
// require: positive denominator, gcd(num,den)=1, zero as 0/1.
using Rational = mpq_class;

// Parses "n", "-n", "n/d". Throws ParseError on malformed input or zero
// denominator.
Rational rational_from_string(std::string_view text);

std::string to_string(const Rational &r);

// r^e for any integer e; throws DivisionByZeroError for 0^negative.
Rational rational_pow(const Rational &r, long e);

inline double to_double(const Rational &r) { return r.get_d(); }

inline bool is_integer(const Rational &r) { return r.get_den() == 1; }

} // namespace garnier

#endif
