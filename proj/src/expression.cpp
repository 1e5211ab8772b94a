#include "garnier/expression.hpp"

#include <random>
#include <unordered_map>

#include "garnier/errors.hpp"

namespace garnier {

namespace {

Rational rational_gcd(const Rational &a, const Rational &b) {
  mpz_class g, l;
  mpz_gcd(g.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
  mpz_lcm(l.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
  Rational r(g, l);
  r.canonicalize();
  return r;
}

} // namespace

Expression Expression::from_parts(Poly num, Poly den) {
  if (den.is_zero())
    throw DivisionByZeroError();
  Expression e;
  if (num.is_zero()) {
    e.num_ = Poly();
    e.den_ = Poly::constant(1);
    return e;
  }
  const Monomial mn = num.monomial_content();
  const Monomial md = den.monomial_content();
  Monomial shared;
  for (int i = 0; i < kNumVars; ++i)
    shared.e[i] = std::min(mn.e[i], md.e[i]);
  if (!shared.is_one()) {
    num = num.deflate(shared);
    den = den.deflate(shared);
  }
  const Rational scale = rational_gcd(num.content(), den.content());
  num = num.divide_by_rational(scale);
  den = den.divide_by_rational(scale);
  if (den.leading().c < 0) {
    num.scale(Rational(-1));
    den.scale(Rational(-1));
  }
  e.num_ = std::move(num);
  e.den_ = std::move(den);
  return e;
}

Expression Expression::operator-() const {
  Expression r(*this);
  r.num_ = -r.num_;
  return r;
}

Expression operator+(const Expression &a, const Expression &b) {
  if (a.is_zero())
    return b;
  if (b.is_zero())
    return a;
  if (a.den_ == b.den_)
    return Expression::from_parts(a.num_ + b.num_, a.den_);
  if (auto q = try_divide(b.den_, a.den_))
    return Expression::from_parts(a.num_ * *q + b.num_, b.den_);
  if (auto q = try_divide(a.den_, b.den_))
    return Expression::from_parts(a.num_ + b.num_ * *q, a.den_);
  return Expression::from_parts(a.num_ * b.den_ + b.num_ * a.den_,
                                a.den_ * b.den_);
}

Expression operator-(const Expression &a, const Expression &b) {
  return a + (-b);
}

Expression operator*(const Expression &a, const Expression &b) {
  if (a.is_zero() || b.is_zero())
    return Expression();
  return Expression::from_parts(a.num_ * b.num_, a.den_ * b.den_);
}

Expression operator/(const Expression &a, const Expression &b) {
  if (b.is_zero())
    throw DivisionByZeroError();
  if (a.is_zero())
    return Expression();
  return Expression::from_parts(a.num_ * b.den_, a.den_ * b.num_);
}

Expression Expression::pow(long e) const {
  if (e == 0)
    return Expression(Rational(1));
  Poly n = num_, d = den_;
  if (e < 0) {
    if (is_zero())
      throw DivisionByZeroError("zero expression raised to a negative power");
    std::swap(n, d);
    e = -e;
  }
  return from_parts(n.pow(static_cast<std::uint32_t>(e)),
                    d.pow(static_cast<std::uint32_t>(e)));
}

Expression Expression::derivative(int v) const {
  if (den_.is_constant())
    return from_parts(num_.derivative(v), den_);
  // (n/d)' = (n'd - nd')/d^2
  Poly n = num_.derivative(v) * den_ - num_ * den_.derivative(v);
  return from_parts(std::move(n), den_ * den_);
}

namespace {

// Image of a polynomial under a partial substitution, as a rational
// function. Shared power tables keep repeated exponents cheap.
struct SubstPlan {
  std::array<const Expression *, kNumVars> map{};

  bool trivial_at(int v) const { return map[v] == nullptr; }
};

Expression subst_poly(const Poly &p, const SubstPlan &plan) {
  if (p.is_zero())
    return Expression();

  std::array<std::uint32_t, kNumVars> emax{};
  for (const auto &t : p.terms())
    for (int v = 0; v < kNumVars; ++v)
      if (!plan.trivial_at(v))
        emax[v] = std::max(emax[v], t.m.e[v]);

  std::array<std::vector<Poly>, kNumVars> num_pow, den_pow;
  for (int v = 0; v < kNumVars; ++v) {
    if (plan.trivial_at(v) || emax[v] == 0)
      continue;
    num_pow[v].push_back(Poly::constant(1));
    den_pow[v].push_back(Poly::constant(1));
    for (std::uint32_t k = 1; k <= emax[v]; ++k) {
      num_pow[v].push_back(num_pow[v].back() * plan.map[v]->num());
      den_pow[v].push_back(den_pow[v].back() * plan.map[v]->den());
    }
  }

  // Common denominator: prod den(sigma_v)^emax[v].
  Poly common_den = Poly::constant(1);
  for (int v = 0; v < kNumVars; ++v)
    if (!plan.trivial_at(v) && emax[v] > 0)
      common_den = common_den * den_pow[v][emax[v]];

  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  for (const auto &t : p.terms()) {
    Poly prod = Poly::constant(t.c);
    Monomial fixed = Monomial::one();
    for (int v = 0; v < kNumVars; ++v) {
      const std::uint32_t e = t.m.e[v];
      if (plan.trivial_at(v)) {
        fixed.e[v] = e;
        continue;
      }
      if (emax[v] == 0)
        continue;
      if (e)
        prod = prod * num_pow[v][e];
      if (emax[v] > e)
        prod = prod * den_pow[v][emax[v] - e];
    }
    for (const auto &pt : prod.terms())
      acc[pt.m * fixed] += pt.c;
  }
  std::vector<Poly::Term> terms;
  terms.reserve(acc.size());
  for (auto &kv : acc)
    if (kv.second != 0)
      terms.push_back({kv.first, std::move(kv.second)});
  return Expression::from_parts(Poly::from_terms(std::move(terms)),
                                std::move(common_den));
}

bool is_bare_variable(const Expression &e, int v) {
  return e.is_polynomial() && e.den().is_constant() &&
         e.den().constant_value() == 1 && e.num().term_count() == 1 &&
         e.num().leading().c == 1 && e.num().leading().m == Monomial::unit(v);
}

} // namespace

Expression Expression::substitute(const std::map<int, Expression> &sigma) const {
  SubstPlan plan;
  for (const auto &[v, e] : sigma) {
    if (v < 0 || v >= kNumVars)
      throw Error("substitute: variable index out of range");
    if (!is_bare_variable(e, v))
      plan.map[v] = &e;
  }
  bool any = false;
  for (int v = 0; v < kNumVars; ++v)
    any = any || plan.map[v];
  if (!any)
    return *this;

  Expression num_img = subst_poly(num_, plan);
  Expression den_img = subst_poly(den_, plan);
  if (den_img.is_zero())
    throw SubstitutionError("substitution makes the denominator " +
                            den_.to_string() + " identically zero");
  return num_img / den_img;
}

Rational Expression::eval(const std::array<Rational, kNumVars> &x) const {
  const Rational d = den_.eval(x);
  if (d == 0)
    throw PoleError("pole: denominator " + den_.to_string() +
                    " vanishes at the evaluation point");
  return num_.eval(x) / d;
}

Expression Expression::fully_reduce() const {
  if (num_.is_zero() || den_.is_constant())
    return *this;
  const Poly g = poly_gcd(num_, den_);
  if (g.is_constant())
    return *this;
  auto qn = try_divide(num_, g);
  auto qd = try_divide(den_, g);
  return from_parts(std::move(*qn), std::move(*qd));
}

bool Expression::is_polynomial_in(std::span<const int> vars) const {
  auto den_clean = [&](const Poly &d) {
    for (int v : vars)
      if (d.depends_on(v))
        return false;
    return true;
  };
  if (den_clean(den_))
    return true;
  // Reduction can only shrink the denominator, so a clean denominator is
  // final; otherwise the reduced form decides.
  return den_clean(fully_reduce().den());
}

std::string Expression::to_string() const {
  if (den_.is_constant() && den_.constant_value() == 1)
    return num_.to_string();
  std::string n = num_.to_string();
  if (num_.term_count() > 1)
    n = "(" + n + ")";
  std::string d = den_.to_string();
  const bool simple_den =
      den_.term_count() == 1 &&
      ((den_.leading().m.is_one() && den_.leading().c > 0) ||
       (den_.leading().c == 1 &&
        [&] {
          int nv = 0;
          for (int v = 0; v < kNumVars; ++v)
            if (den_.leading().m.e[v])
              ++nv;
          return nv == 1;
        }()));
  if (!simple_den)
    d = "(" + d + ")";
  return n + "/" + d;
}

bool equals_exact(const Expression &a, const Expression &b) {
  if (a == b)
    return true;
  return a.num() * b.den() == b.num() * a.den();
}

ProbabilisticEquality equals_probabilistic(const Expression &a,
                                           const Expression &b, int trials,
                                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num_dist(-1000000, 1000000);
  std::uniform_int_distribution<long> den_dist(1, 1000000);

  const double deg = static_cast<double>(
      std::max(a.num().total_degree() + b.den().total_degree(),
               b.num().total_degree() + a.den().total_degree()));
  const double per_trial = std::min(1.0, deg / 1e6);

  for (int trial = 0; trial < trials; ++trial) {
    int retries = 0;
    for (;;) {
      std::array<Rational, kNumVars> x;
      for (auto &xi : x) {
        xi = Rational(num_dist(rng), den_dist(rng));
        xi.canonicalize();
      }
      if (a.den().eval(x) == 0 || b.den().eval(x) == 0) {
        if (++retries > 100)
          throw Error("equals_probabilistic: no pole-free sample after 100 "
                      "retries");
        continue;
      }
      if (a.eval(x) != b.eval(x))
        return {false, trial + 1, 0.0};
      break;
    }
  }
  double bound = 1.0;
  for (int i = 0; i < trials; ++i)
    bound *= per_trial;
  return {true, trials, bound};
}

} // namespace garnier
