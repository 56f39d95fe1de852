#pragma once

#include <gmpxx.h>

#include <cmath>

namespace pcr {

using Rational = mpq_class;

enum class Arithmetic { Auto, Double, Exact };

/// True when x carries at most six decimals (up to float noise).
inline bool is_short_decimal(double x) {
  const double scaled = x * 1e6;
  return std::isfinite(x) && std::fabs(scaled - std::round(scaled)) < 1e-6;
}

template <class T>
T from_double(double x);

template <>
inline double from_double<double>(double x) {
  return x;
}

/// Short decimals map to their exact decimal value, anything else to the
/// exact binary value of the double.
template <>
inline Rational from_double<Rational>(double x) {
  if (is_short_decimal(x)) {
    Rational q(mpz_class(static_cast<long>(std::llround(x * 1e6))), mpz_class(1000000L));
    q.canonicalize();
    return q;
  }
  return Rational(x);
}

inline double to_double(double x) { return x; }
inline double to_double(const Rational& q) { return q.get_d(); }

inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace pcr
