#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "pslet/real.hpp"

namespace pslet {

// Exact rational exponent. Every potential family handled here has
// rational powers (integers, or decimals such as nu = 0.1 = 1/10), and
// decimal config input is always rational, so exponent comparison and
// arithmetic stay exact.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d);

  // Parses "2", "-0.5", "1/10", "0.1".
  static Rational parse(const std::string& text);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator-() const { return Rational(-num_, den_); }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  xreal to_xreal() const { return xreal(num_) / xreal(den_); }
  std::string str() const;

 private:
  long long num_;
  long long den_;  // > 0
};

}  // namespace pslet
