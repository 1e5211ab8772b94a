#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "garnier/parse.hpp"
#include "garnier/system.hpp"
#include "support.hpp"

using namespace garnier;

namespace {

Expression ev(int idx) { return Expression::variable(idx); }

const GarnierSystem &symbolic_system() {
  static const GarnierSystem sys = build_system(ParameterSet::symbolic());
  return sys;
}

std::map<int, Expression> involution() {
  return {{var::q1, ev(var::q2)},   {var::q2, ev(var::q1)},
          {var::p1, ev(var::p2)},   {var::p2, ev(var::p1)},
          {var::t, ev(var::s)},     {var::s, ev(var::t)},
          {var::th1, ev(var::th2)}, {var::th2, ev(var::th1)}};
}

// Reference point and values frozen from an independent computer-algebra
// evaluation of the same Hamiltonians (tests/oracle/gen_expected.py).
std::array<Rational, kNumVars> oracle_point() {
  return parse_assignment(
      "q1=1/2,p1=2/3,q2=3,p2=-1/5,t=1/7,s=4,k0=1/3,k1=-2,kinf=5/2,th1=7/5,"
      "th2=-1/2",
      Rational(0), true);
}

} // namespace

TEST_CASE("kappa is the derived constant") {
  auto with = [](const std::array<Rational, 5> &vals) {
    return kappa_expr(ParameterSet::from_rationals(vals));
  };
  CHECK(with({0, 0, 1, 0, 0}).is_zero()); // kinf=1, rest 0
  CHECK(with({0, 0, 0, 0, 0}).constant_value() == Rational(1, 4));

  const Expression kap = kappa_expr(ParameterSet::symbolic());
  const Expression flipped =
      kap.substitute({{var::kinf, -ev(var::kinf)}});
  CHECK(equals_exact(kap, flipped));

  CHECK(kap.eval(oracle_point()) == Rational(-176, 225));
}

TEST_CASE("system construction matches the involution structure") {
  const GarnierSystem &sys = symbolic_system();
  CHECK(equals_exact(sys.h2, sys.h1.substitute(involution())));
  CHECK(equals_exact(sys.h2.substitute(involution()), sys.h1));
}

TEST_CASE("hamiltonian values match the independent oracle") {
  const GarnierSystem &sys = symbolic_system();
  const auto x = oracle_point();
  CHECK(sys.h1.eval(x) == Rational(-36953, 36450));
  CHECK(sys.h2.eval(x) == Rational(-88573, 1458000));
  CHECK(sys.field_t[0].eval(x) == Rational(-16891, 4860)); // dH1/dp1
  CHECK(sys.h1.derivative(var::q1).eval(x) == Rational(-50246, 10125));
}

TEST_CASE("h1 depends on kinf only through its square") {
  const GarnierSystem &sys = symbolic_system();
  const Expression flipped =
      sys.h1.substitute({{var::kinf, -ev(var::kinf)}});
  CHECK(equals_exact(sys.h1, flipped));
}

TEST_CASE("poisson bracket basics") {
  CHECK(poisson_bracket(ev(var::q1), ev(var::p1)).constant_value() == 1);
  CHECK(poisson_bracket(ev(var::q1), ev(var::q2)).is_zero());
  CHECK(poisson_bracket(ev(var::q2), ev(var::p2)).constant_value() == 1);
  CHECK(poisson_bracket(ev(var::q1), ev(var::p2)).is_zero());
  CHECK(poisson_bracket(ev(var::t), ev(var::s)).is_zero());

  testsupport::Gen g(23);
  for (int i = 0; i < 50; ++i) {
    const Expression f = g.expression();
    CHECK(poisson_bracket(f, f).is_zero());
  }
}

TEST_CASE("poisson bracket antisymmetry and Jacobi") {
  testsupport::Gen g(29);
  for (int i = 0; i < 30; ++i) {
    const Expression f = g.expression(), h = g.expression(),
                     k = g.expression();
    CHECK(equals_exact(poisson_bracket(f, h), -poisson_bracket(h, f)));
    const Expression jac = poisson_bracket(f, poisson_bracket(h, k)) +
                           poisson_bracket(h, poisson_bracket(k, f)) +
                           poisson_bracket(k, poisson_bracket(f, h));
    const auto verdict = equals_probabilistic(jac, Expression(), 4, 900 + i);
    CHECK(verdict.equal);
  }
}

TEST_CASE("vector fields are the bracket derivations") {
  const GarnierSystem &sys = symbolic_system();
  const std::array<Expression, 4> vars = {ev(var::q1), ev(var::p1),
                                          ev(var::q2), ev(var::p2)};
  for (int i = 0; i < 4; ++i) {
    CHECK(equals_exact(sys.field_t[i], poisson_bracket(vars[i], sys.h1)));
    CHECK(equals_exact(sys.field_s[i], poisson_bracket(vars[i], sys.h2)));
  }
}

TEST_CASE("total derivative") {
  const GarnierSystem &sys = symbolic_system();
  CHECK(equals_exact(total_derivative(ev(var::q1), Direction::t, sys),
                     sys.h1.derivative(var::p1)));
  CHECK(total_derivative(Expression(Rational(5, 3)), Direction::t, sys)
            .is_zero());
  CHECK(total_derivative(ev(var::t), Direction::t, sys).constant_value() ==
        1);
  CHECK(total_derivative(ev(var::t), Direction::s, sys).is_zero());
}

TEST_CASE("compatibility sign is plus for the Garnier pair") {
  const auto rep = check_compatibility(symbolic_system());
  CHECK(rep.plus_passes);
  CHECK_FALSE(rep.minus_passes);
  CHECK(rep.sign() == CompatibilityReport::Sign::plus);
  CHECK(rep.residual_is_base_function());
}

TEST_CASE("compatibility edge systems") {
  const Expression half(Rational(1, 2));
  const GarnierSystem decoupled = system_from_hamiltonians(
      half * ev(var::p1) * ev(var::p1), half * ev(var::p2) * ev(var::p2));
  const auto both = check_compatibility(decoupled);
  CHECK(both.sign() == CompatibilityReport::Sign::both);

  const GarnierSystem broken =
      system_from_hamiltonians(ev(var::q1) * ev(var::s), Expression());
  const auto neither = check_compatibility(broken);
  CHECK(neither.sign() == CompatibilityReport::Sign::neither);
  CHECK_FALSE(neither.residual_is_base_function());
}
