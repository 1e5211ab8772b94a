#ifndef GARNIER_SYSTEM_HPP
#define GARNIER_SYSTEM_HPP

#include <array>

#include "garnier/expression.hpp"

namespace garnier {

// The five constants (k0, k1, kinf, th1, th2), each an Expression: bare
// indeterminates for identity work, concrete rationals for numeric work.
// The sixth constant is never stored; kappa_expr derives it.
struct ParameterSet {
  Expression k0, k1, kinf, th1, th2;

  static ParameterSet symbolic();
  static ParameterSet from_rationals(const std::array<Rational, 5> &v);

  std::array<const Expression *, 5> slots() const {
    return {&k0, &k1, &kinf, &th1, &th2};
  }
};

// (1/4)[(k0+k1+th1+th2-1)^2 - kinf^2]
Expression kappa_expr(const ParameterSet &params);

enum class Direction { t, s };

// Two commuting Hamiltonian flows on (q1,p1,q2,p2) over the (t,s) base.
// field_t = (dH1/dp1, -dH1/dq1, dH1/dp2, -dH1/dq2), field_s likewise from
// h2; components ordered (dq1, dp1, dq2, dp2).
struct GarnierSystem {
  Expression h1, h2;
  std::array<Expression, 4> field_t, field_s;

  const std::array<Expression, 4> &field(Direction d) const {
    return d == Direction::t ? field_t : field_s;
  }
  const Expression &hamiltonian(Direction d) const {
    return d == Direction::t ? h1 : h2;
  }
};

// Derives the eight vector-field components from the given Hamiltonians.
GarnierSystem system_from_hamiltonians(Expression h1, Expression h2);

// The rational Hamiltonian pair in the fixed chart; h2 is the involution
// image of h1 (swap q1<->q2, p1<->p2, t<->s, th1<->th2).
GarnierSystem build_system(const ParameterSet &params);

// {f,g} over the canonical pairs (q1,p1), (q2,p2); t and s are constants.
Expression poisson_bracket(const Expression &f, const Expression &g);

// D_t f = df/dt + {f, h1}; D_s f = df/ds + {f, h2}.
Expression total_derivative(const Expression &f, Direction d,
                            const GarnierSystem &sys);

// Integrability of the Pfaffian pair. E(sign) = dh1/ds - dh2/dt +
// sign*{h1,h2}; a sign passes when all four phase gradients of E vanish
// identically, i.e. E depends on the base (t,s) only -- Hamiltonians are
// determined only up to base functions, so this is the correct criterion.
struct CompatibilityReport {
  bool plus_passes = false;
  bool minus_passes = false;

  enum class Sign { plus, minus, both, neither };
  Sign sign() const {
    if (plus_passes && minus_passes)
      return Sign::both;
    if (plus_passes)
      return Sign::plus;
    if (minus_passes)
      return Sign::minus;
    return Sign::neither;
  }
  bool residual_is_base_function() const { return plus_passes || minus_passes; }
};

CompatibilityReport check_compatibility(const GarnierSystem &sys);

} // namespace garnier

#endif
