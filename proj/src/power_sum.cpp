#include "pslet/power_sum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pslet {

PowerSum::PowerSum(std::initializer_list<Term> terms)
    : terms_(terms) {
  canonicalize();
}

PowerSum::PowerSum(std::vector<Term> terms) : terms_(std::move(terms)) {
  canonicalize();
}

PowerSum PowerSum::monomial(const xreal& coeff, const Rational& power) {
  return PowerSum({Term{coeff, power}});
}

PowerSum PowerSum::constant(const xreal& value) {
  return monomial(value, Rational(0));
}

void PowerSum::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.power < b.power; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().power == t.power)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  terms_ = std::move(merged);
}

xreal PowerSum::coefficient(const Rational& power) const {
  for (auto& t : terms_)
    if (t.power == power) return t.coeff;
  return xreal(0);
}

Rational PowerSum::min_power() const {
  if (terms_.empty()) throw std::logic_error("min_power of empty PowerSum");
  return terms_.front().power;
}

xreal PowerSum::eval(const xreal& r) const {
  if (r <= 0) throw std::domain_error("PowerSum::eval requires r > 0");
  xreal sum = 0;
  for (auto& t : terms_) {
    if (t.power.is_zero())
      sum += t.coeff;
    else if (t.power.is_integer())
      sum += t.coeff * pow(r, static_cast<int>(t.power.num()));
    else
      sum += t.coeff * pow(r, t.power.to_xreal());
  }
  return sum;
}

double PowerSum::eval(double r) const {
  if (r <= 0) throw std::domain_error("PowerSum::eval requires r > 0");
  double sum = 0;
  for (auto& t : terms_)
    sum += static_cast<double>(t.coeff) * std::pow(r, t.power.to_double());
  return sum;
}

PowerSum PowerSum::derivative(unsigned order) const {
  std::vector<Term> cur = terms_;
  for (unsigned n = 0; n < order; ++n) {
    std::vector<Term> next;
    next.reserve(cur.size());
    for (auto& t : cur) {
      if (t.power.is_zero()) continue;
      next.push_back(Term{t.coeff * t.power.to_xreal(), t.power - Rational(1)});
    }
    cur = std::move(next);
  }
  return PowerSum(std::move(cur));
}

PowerSum PowerSum::product(const PowerSum& other) const {
  std::vector<Term> out;
  out.reserve(terms_.size() * other.terms_.size());
  for (auto& a : terms_)
    for (auto& b : other.terms_)
      out.push_back(Term{a.coeff * b.coeff, a.power + b.power});
  return PowerSum(std::move(out));
}

PowerSum PowerSum::plus(const PowerSum& other) const {
  std::vector<Term> out = terms_;
  out.insert(out.end(), other.terms_.begin(), other.terms_.end());
  return PowerSum(std::move(out));
}

PowerSum PowerSum::minus(const PowerSum& other) const {
  return plus(other.scaled(xreal(-1)));
}

PowerSum PowerSum::scaled(const xreal& factor) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff *= factor;
  return PowerSum(std::move(out));
}

std::vector<xreal> PowerSum::taylor(const xreal& r0, unsigned n_max) const {
  if (r0 <= 0) throw std::domain_error("PowerSum::taylor requires r0 > 0");
  std::vector<xreal> out;
  out.reserve(n_max + 1);
  PowerSum cur = *this;
  xreal r0_pow = 1;   // r0^n
  xreal inv_fact = 1; // 1/n!
  for (unsigned n = 0; n <= n_max; ++n) {
    if (n > 0) {
      r0_pow *= r0;
      inv_fact /= n;
      cur = cur.derivative();
    }
    out.push_back(cur.empty() ? xreal(0) : cur.eval(r0) * r0_pow * inv_fact);
  }
  return out;
}

bool PowerSum::same_terms(const PowerSum& other, const xreal& rel_tol) const {
  // Union of exponents, coefficients compared against the global scale
  // (a term that cancels exactly on one side may survive as roundoff
  // on the other).
  xreal scale = 0;
  for (auto& t : terms_) scale = std::max(scale, abs(t.coeff));
  for (auto& t : other.terms_) scale = std::max(scale, abs(t.coeff));
  if (scale == 0) return true;
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    xreal a = 0, b = 0;
    if (j >= other.terms_.size() ||
        (i < terms_.size() && terms_[i].power < other.terms_[j].power)) {
      a = terms_[i++].coeff;
    } else if (i >= terms_.size() || other.terms_[j].power < terms_[i].power) {
      b = other.terms_[j++].coeff;
    } else {
      a = terms_[i++].coeff;
      b = other.terms_[j++].coeff;
    }
    if (abs(a - b) > rel_tol * scale) return false;
  }
  return true;
}

std::string PowerSum::str(unsigned digits) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    os << terms_[i].coeff.str(digits) << "*r^(" << terms_[i].power.str() << ")";
  }
  return os.str();
}

}  // namespace pslet
