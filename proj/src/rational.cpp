#include "pslet/rational.hpp"

#include <numeric>

namespace pslet {

namespace {

long long checked_narrow(__int128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw std::overflow_error(std::string("rational overflow in ") + what);
  return static_cast<long long>(v);
}

}  // namespace

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = n;
  den_ = d;
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty exponent");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    long long n = std::stoll(text.substr(0, slash));
    long long d = std::stoll(text.substr(slash + 1));
    return Rational(n, d);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(std::stoll(text));
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  size_t frac_len = text.size() - dot - 1;
  if (frac_len > 17) throw std::invalid_argument("exponent has too many decimals: " + text);
  long long n = std::stoll(digits);
  long long d = 1;
  for (size_t i = 0; i < frac_len; ++i) d *= 10;
  return Rational(n, d);
}

Rational Rational::operator+(const Rational& o) const {
  __int128 n = static_cast<__int128>(num_) * o.den_ +
               static_cast<__int128>(o.num_) * den_;
  __int128 d = static_cast<__int128>(den_) * o.den_;
  return Rational(checked_narrow(n, "add"), checked_narrow(d, "add"));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

bool Rational::operator<(const Rational& o) const {
  return static_cast<__int128>(num_) * o.den_ <
         static_cast<__int128>(o.num_) * den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

xreal roundoff_scale(unsigned guard_digits) {
  unsigned digits = working_precision();
  unsigned eff = digits > guard_digits ? digits - guard_digits : 1;
  return pow(xreal(10), -static_cast<int>(eff));
}

}  // namespace pslet
