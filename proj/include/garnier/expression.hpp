#ifndef GARNIER_EXPRESSION_HPP
#define GARNIER_EXPRESSION_HPP

#include <array>
#include <map>
#include <span>
#include <string>

#include "garnier/poly.hpp"

namespace garnier {

// Rational function num/den over the fixed 11-variable ring.
//
// Normal form kept by every operation: den != 0 with positive leading
// coefficient, num and den integer polynomials with coprime joint content
// and no common monomial factor. Full gcd reduction is opportunistic
// (fully_reduce), except where is_polynomial_in needs it for soundness.
// Values are immutable and safe to share across threads.
class Expression {
public:
  Expression() : num_(), den_(Poly::constant(1)) {}
  Expression(const Rational &c) : num_(Poly::constant(c)), den_(Poly::constant(1)) {}
  Expression(long n) : Expression(Rational(n)) {}
  explicit Expression(Poly p) : num_(std::move(p)), den_(Poly::constant(1)) {}

  static Expression variable(int v) { return Expression(Poly::variable(v)); }
  // Throws DivisionByZeroError when den = 0.
  static Expression from_parts(Poly num, Poly den);

  const Poly &num() const { return num_; }
  const Poly &den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const {
    return num_.constant_value() / den_.constant_value();
  }

  Expression operator-() const;
  friend Expression operator+(const Expression &a, const Expression &b);
  friend Expression operator-(const Expression &a, const Expression &b);
  friend Expression operator*(const Expression &a, const Expression &b);
  friend Expression operator/(const Expression &a, const Expression &b);
  Expression &operator+=(const Expression &o) { return *this = *this + o; }
  Expression &operator-=(const Expression &o) { return *this = *this - o; }
  Expression &operator*=(const Expression &o) { return *this = *this * o; }

  Expression pow(long e) const;

  Expression derivative(int v) const;

  // f with variables replaced per sigma; missing entries stay fixed.
  // Throws SubstitutionError when a denominator becomes identically zero.
  Expression substitute(const std::map<int, Expression> &sigma) const;

  // Exact value at a full 11-coordinate point; PoleError at poles.
  Rational eval(const std::array<Rational, kNumVars> &x) const;

  // Lowest terms (multivariate gcd removed).
  Expression fully_reduce() const;

  // True iff the fully reduced denominator avoids every listed variable.
  bool is_polynomial_in(std::span<const int> vars) const;

  bool depends_on(int v) const {
    return num_.depends_on(v) || den_.depends_on(v);
  }

  std::string to_string() const;

  // Structural equality of the normal forms (stronger than mathematical
  // equality unless both sides are fully reduced).
  friend bool operator==(const Expression &a, const Expression &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

private:
  Poly num_, den_;
};

// Mathematical equality by cross-multiplication over canonical forms.
bool equals_exact(const Expression &a, const Expression &b);

// Schwartz-Zippel style randomized equality: evaluation at `trials` random
// rational points with numerators/denominators bounded by 10^6, resampling
// any point that hits a pole (at most 100 retries per trial). "false" is
// certain (a witness point was found); "true" carries the one-sided error
// bound (degree/10^6)^trials.
struct ProbabilisticEquality {
  bool equal;
  int trials;
  double error_bound;
};
ProbabilisticEquality equals_probabilistic(const Expression &a,
                                           const Expression &b, int trials,
                                           std::uint64_t seed);

} // namespace garnier

#endif
