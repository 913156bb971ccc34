#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "pslet/rational.hpp"
#include "pslet/real.hpp"

namespace pslet {

// A finite sum  sum_i c_i r^{s_i}  with rational exponents, kept in
// canonical form: terms sorted by exponent, no duplicate exponents, no
// zero coefficients. Every potential used here (Coulomb, linear,
// harmonic, power-law) and its derived effective-potential images live
// in this algebra, which is closed under derivative and product, so
// Taylor coefficients of any order come out exact.
class PowerSum {
 public:
  struct Term {
    xreal coeff;
    Rational power;
  };

  PowerSum() = default;
  PowerSum(std::initializer_list<Term> terms);
  explicit PowerSum(std::vector<Term> terms);

  static PowerSum monomial(const xreal& coeff, const Rational& power);
  static PowerSum constant(const xreal& value);

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  // Coefficient of r^power, zero if the term is absent.
  xreal coefficient(const Rational& power) const;
  Rational min_power() const;  // throws on empty

  xreal eval(const xreal& r) const;
  double eval(double r) const;

  PowerSum derivative(unsigned order = 1) const;
  PowerSum product(const PowerSum& other) const;
  PowerSum plus(const PowerSum& other) const;
  PowerSum minus(const PowerSum& other) const;
  PowerSum scaled(const xreal& factor) const;

  // [p(r0), p'(r0) r0/1!, p''(r0) r0^2/2!, ..., p^(n)(r0) r0^n/n!]
  // -- the b_n / c_n convention, r0^n factor included.
  std::vector<xreal> taylor(const xreal& r0, unsigned n_max) const;

  bool same_terms(const PowerSum& other, const xreal& rel_tol) const;
  std::string str(unsigned digits = 8) const;

 private:
  void canonicalize();
  std::vector<Term> terms_;
};

}  // namespace pslet
