#pragma once

#include <boost/multiprecision/mpfr.hpp>

namespace pslet {

// Working real type for the expansion machinery. Precision is set per
// thread via set_working_precision(); the b_n coefficients enter the
// recursion with severe cancellation, so the default is generous.
using xreal = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>,
    boost::multiprecision::et_off>;

inline constexpr unsigned kDefaultPrecisionDigits = 60;
inline constexpr unsigned kMinPrecisionDigits = 30;

// Thread-local. Call at the start of every thread that touches xreal.
inline void set_working_precision(unsigned digits10) {
  xreal::default_precision(digits10);
}

inline unsigned working_precision() { return xreal::default_precision(); }

// 10^-(digits-guard), the scale below which an algebraically-zero
// residual is accepted at the current precision.
xreal roundoff_scale(unsigned guard_digits = 10);

}  // namespace pslet
