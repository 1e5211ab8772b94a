#include "garnier/system.hpp"

namespace garnier {

namespace {

Expression v(int idx) { return Expression::variable(idx); }

std::map<int, Expression> involution_swap() {
  return {{var::q1, v(var::q2)},   {var::q2, v(var::q1)},
          {var::p1, v(var::p2)},   {var::p2, v(var::p1)},
          {var::t, v(var::s)},     {var::s, v(var::t)},
          {var::th1, v(var::th2)}, {var::th2, v(var::th1)}};
}

} // namespace

ParameterSet ParameterSet::symbolic() {
  return {v(var::k0), v(var::k1), v(var::kinf), v(var::th1), v(var::th2)};
}

ParameterSet ParameterSet::from_rationals(const std::array<Rational, 5> &vals) {
  return {Expression(vals[0]), Expression(vals[1]), Expression(vals[2]),
          Expression(vals[3]), Expression(vals[4])};
}

Expression kappa_expr(const ParameterSet &params) {
  Expression sum = params.k0 + params.k1 + params.th1 + params.th2 -
                   Expression(Rational(1));
  return Expression(Rational(1, 4)) *
         (sum * sum - params.kinf * params.kinf);
}

GarnierSystem system_from_hamiltonians(Expression h1, Expression h2) {
  GarnierSystem sys;
  sys.field_t = {h1.derivative(var::p1), -h1.derivative(var::q1),
                 h1.derivative(var::p2), -h1.derivative(var::q2)};
  sys.field_s = {h2.derivative(var::p1), -h2.derivative(var::q1),
                 h2.derivative(var::p2), -h2.derivative(var::q2)};
  sys.h1 = std::move(h1);
  sys.h2 = std::move(h2);
  return sys;
}

GarnierSystem build_system(const ParameterSet &params) {
  // Built with symbolic constants first so the involution also swaps
  // th1 <-> th2; concrete parameter values are substituted at the end.
  const ParameterSet sym = ParameterSet::symbolic();
  const Expression kap = kappa_expr(sym);
  const Expression one(Rational(1));
  const Expression q[2] = {v(var::q1), v(var::q2)};
  const Expression p[2] = {v(var::p1), v(var::p2)};
  const Expression t = v(var::t), s = v(var::s);

  const Expression base_den = t * (t - one) * (t - s);
  Expression h1;
  for (int i = 0; i < 2; ++i) {
    const Expression &qi = q[i], &pi = p[i], &qo = q[1 - i];
    const Expression pre =
        -(qi * (qi - one) * (qi - t) * (qi - s) * (qo - t)) /
        ((qi - qo) * base_den);
    const Expression brace =
        pi * pi + kap / (qi * (qi - one)) -
        ((sym.th1 - one) / (qi - t) + sym.th2 / (qi - s) + sym.k0 / qi +
         sym.k1 / (qi - one)) *
            pi;
    h1 += pre * brace;
  }
  Expression h2 = h1.substitute(involution_swap());

  // Substitute concrete parameter values when the set is not symbolic.
  std::map<int, Expression> assign;
  const auto slots = params.slots();
  for (size_t i = 0; i < slots.size(); ++i)
    assign.emplace(kParamVars[i], *slots[i]);
  h1 = h1.substitute(assign);
  h2 = h2.substitute(assign);
  return system_from_hamiltonians(std::move(h1), std::move(h2));
}

Expression poisson_bracket(const Expression &f, const Expression &g) {
  Expression sum;
  const int pairs[2][2] = {{var::q1, var::p1}, {var::q2, var::p2}};
  for (const auto &qp : pairs)
    sum += f.derivative(qp[0]) * g.derivative(qp[1]) -
           f.derivative(qp[1]) * g.derivative(qp[0]);
  return sum;
}

Expression total_derivative(const Expression &f, Direction d,
                            const GarnierSystem &sys) {
  const int base = d == Direction::t ? var::t : var::s;
  return f.derivative(base) + poisson_bracket(f, sys.hamiltonian(d));
}

namespace {

bool phase_gradients_vanish(const Expression &e) {
  const Poly &n = e.num();
  const Poly &d = e.den();
  for (int v : kPhaseVars) {
    // d/dv (n/d) = 0 iff n_v*d - n*d_v = 0; no normal form needed.
    if (!(n.derivative(v) * d - n * d.derivative(v)).is_zero())
      return false;
  }
  return true;
}

} // namespace

CompatibilityReport check_compatibility(const GarnierSystem &sys) {
  const Expression base_part = sys.h1.derivative(var::s) -
                               sys.h2.derivative(var::t);
  const Expression bracket = poisson_bracket(sys.h1, sys.h2);
  CompatibilityReport rep;
  rep.plus_passes = phase_gradients_vanish(base_part + bracket);
  rep.minus_passes = phase_gradients_vanish(base_part - bracket);
  return rep;
}

} // namespace garnier
