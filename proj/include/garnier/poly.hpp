#ifndef GARNIER_POLY_HPP
#define GARNIER_POLY_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "garnier/monomial.hpp"
#include "garnier/rational.hpp"

namespace garnier {

// Sparse multivariate polynomial over Q in the fixed 11-variable ring.
// Terms are kept in strictly descending graded-lex order with nonzero
// coefficients, so structural equality is mathematical equality.
class Poly {
public:
  struct Term {
    Monomial m;
    Rational c;
  };

  Poly() = default;
  static Poly constant(Rational c);
  static Poly variable(int v, std::uint32_t power = 1);
  // Takes any term list (unsorted, duplicates, zeros) and normalizes.
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
  }
  // Pre: is_constant().
  Rational constant_value() const {
    return terms_.empty() ? Rational(0) : terms_[0].c;
  }
  size_t term_count() const { return terms_.size(); }
  const std::vector<Term> &terms() const { return terms_; }

  const Term &leading() const { return terms_.front(); } // pre: !is_zero()

  std::uint64_t total_degree() const; // 0 for the zero polynomial
  std::uint32_t degree_in(int v) const;
  std::uint32_t min_degree_in(int v) const; // 0 for the zero polynomial
  bool depends_on(int v) const { return degree_in(v) > 0; }

  Poly operator-() const;
  Poly &operator+=(const Poly &o);
  Poly &operator-=(const Poly &o);
  friend Poly operator+(const Poly &a, const Poly &b);
  friend Poly operator-(const Poly &a, const Poly &b);
  friend Poly operator*(const Poly &a, const Poly &b);
  Poly &operator*=(const Poly &o) { return *this = *this * o; }

  void scale(const Rational &c);           // in place, c may be 0
  Poly times_term(const Monomial &m, const Rational &c) const;
  Poly pow(std::uint32_t e) const;

  Poly derivative(int v) const;

  // Exact value; all 11 coordinates must be supplied.
  Rational eval(const std::array<Rational, kNumVars> &x) const;

  // Componentwise minimum exponent over all terms (the largest monomial
  // dividing every term). Zero polynomial yields the unit monomial.
  Monomial monomial_content() const;
  Poly deflate(const Monomial &m) const; // divide every term by m

  // Positive rational c such that (*this)/c has coprime integer
  // coefficients with positive leading coefficient... sign excluded:
  // returns magnitude only. Zero polynomial yields 1.
  Rational content() const;
  Poly divide_by_rational(const Rational &c) const;

  friend bool operator==(const Poly &a, const Poly &b) {
    if (a.terms_.size() != b.terms_.size())
      return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].m == b.terms_[i].m && a.terms_[i].c == b.terms_[i].c))
        return false;
    return true;
  }

  std::string to_string() const;

private:
  std::vector<Term> terms_;
};

// Quotient and remainder of a by b (single-divisor reduction in graded-lex).
// a = q*b + r where no term of r is divisible by the leading monomial of b.
// Throws DivisionByZeroError when b = 0.
std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b);

// Exact division test; returns the quotient iff b divides a.
std::optional<Poly> try_divide(const Poly &a, const Poly &b);

// GCD over Q[x0..x10], returned primitive (integer coprime coefficients)
// with positive leading coefficient. gcd(0,0) = 0.
Poly poly_gcd(const Poly &a, const Poly &b);

} // namespace garnier

#endif
