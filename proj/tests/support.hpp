#ifndef GARNIER_TESTS_SUPPORT_HPP
#define GARNIER_TESTS_SUPPORT_HPP

#include <random>

#include "garnier/errors.hpp"
#include "garnier/expression.hpp"

// Shared randomized-property machinery for the unit suites and the
// acceptance runner. Each checker returns the number of failing cases out
// of `cases` valid ones.
namespace testsupport {

using garnier::Expression;
using garnier::kNumVars;
using garnier::Monomial;
using garnier::Poly;
using garnier::Rational;

struct Gen {
  std::mt19937_64 rng;

  explicit Gen(std::uint64_t seed) : rng(seed) {}

  long irange(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
  }

  Rational rational() {
    Rational r(irange(-9, 9), irange(1, 9));
    r.canonicalize();
    return r;
  }

  Poly poly(int max_terms = 4, std::uint32_t max_exp = 2) {
    std::vector<Poly::Term> ts;
    const int n = static_cast<int>(irange(0, max_terms));
    for (int i = 0; i < n; ++i) {
      Monomial m;
      const int touched = static_cast<int>(irange(0, 3));
      for (int j = 0; j < touched; ++j)
        m.e[irange(0, kNumVars - 1)] = static_cast<std::uint32_t>(
            irange(0, static_cast<long>(max_exp)));
      ts.push_back({m, rational()});
    }
    return Poly::from_terms(std::move(ts));
  }

  Poly nonzero_poly(int max_terms = 3, std::uint32_t max_exp = 2) {
    for (;;) {
      Poly p = poly(max_terms, max_exp);
      if (!p.is_zero())
        return p;
    }
  }

  Expression expression() {
    return Expression::from_parts(poly(), nonzero_poly());
  }
};

inline int check_ring_axioms(std::uint64_t seed, int cases) {
  Gen g(seed);
  int failures = 0;
  for (int i = 0; i < cases; ++i) {
    const Expression a = g.expression(), b = g.expression(),
                     c = g.expression();
    if (!garnier::equals_exact((a + b) + c, a + (b + c)))
      ++failures;
    if (!garnier::equals_exact(a + b, b + a))
      ++failures;
    if (!garnier::equals_exact((a * b) * c, a * (b * c)))
      ++failures;
    if (!garnier::equals_exact(a * b, b * a))
      ++failures;
    if (!garnier::equals_exact(a * (b + c), a * b + a * c))
      ++failures;
  }
  return failures;
}

inline int check_leibniz(std::uint64_t seed, int cases) {
  Gen g(seed);
  int failures = 0;
  for (int i = 0; i < cases; ++i) {
    const Expression f = g.expression(), h = g.expression();
    const int v = static_cast<int>(g.irange(0, kNumVars - 1));
    const Expression lhs = (f * h).derivative(v);
    const Expression rhs = f * h.derivative(v) + h * f.derivative(v);
    if (!garnier::equals_exact(lhs, rhs))
      ++failures;
  }
  return failures;
}

inline int check_subst_homomorphism(std::uint64_t seed, int cases) {
  Gen g(seed);
  int failures = 0, done = 0, attempts = 0;
  while (done < cases && attempts < cases * 20) {
    ++attempts;
    const Expression f = g.expression(), h = g.expression();
    std::map<int, Expression> sigma;
    const int k = static_cast<int>(g.irange(1, 3));
    for (int j = 0; j < k; ++j)
      sigma.emplace(static_cast<int>(g.irange(0, kNumVars - 1)),
                    g.expression());
    try {
      const Expression lhs = (f * h).substitute(sigma);
      const Expression rhs = f.substitute(sigma) * h.substitute(sigma);
      if (!garnier::equals_exact(lhs, rhs))
        ++failures;
      ++done;
    } catch (const garnier::SubstitutionError &) {
      // The random sigma annihilated a denominator; draw again.
    } catch (const garnier::DivisionByZeroError &) {
      ++failures; // lhs and rhs must agree on definedness
      ++done;
    }
  }
  return done < cases ? failures + (cases - done) : failures;
}

inline int check_equals_agreement(std::uint64_t seed, int cases) {
  Gen g(seed);
  int failures = 0;
  for (int i = 0; i < cases; ++i) {
    Expression a = g.expression();
    Expression b;
    if (g.irange(0, 1) == 0) {
      // Equal pair along a different representation path.
      const Expression u =
          Expression::from_parts(g.nonzero_poly(), g.nonzero_poly());
      b = (a * u) / u;
    } else {
      b = g.expression();
    }
    const bool exact = garnier::equals_exact(a, b);
    const auto prob = garnier::equals_probabilistic(a, b, 6, seed + i);
    if (exact != prob.equal)
      ++failures;
  }
  return failures;
}

} // namespace testsupport

#endif
