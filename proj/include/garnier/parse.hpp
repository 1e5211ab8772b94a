#ifndef GARNIER_PARSE_HPP
#define GARNIER_PARSE_HPP

#include <string_view>

#include "garnier/expression.hpp"

namespace garnier {

// Plain-text expression syntax: variables q1 p1 q2 p2 t s k0 k1 kinf th1
// th2, integer literals, operators + - * / ^ and parentheses. Rationals are
// spelled with '/'. Throws ParseError with the offending position.
Expression parse_expression(std::string_view text);

// "q1=3,p1=2,t=1/4,..." -> full 11-point; unset names default to `fill`.
// When require_all is set every variable must be assigned.
std::array<Rational, kNumVars>
parse_assignment(std::string_view text, const Rational &fill,
                 bool require_all = false);

} // namespace garnier

#endif
