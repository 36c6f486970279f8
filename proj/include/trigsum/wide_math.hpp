#pragma once

#include <cmath>
#include <cstdint>

#include "trigsum/double_wide.hpp"

namespace trigsum {

DoubleWide exp(const DoubleWide& x);
DoubleWide expm1(const DoubleWide& x);
DoubleWide log(const DoubleWide& x);
DoubleWide log1p(const DoubleWide& x);
DoubleWide sin(const DoubleWide& x);
DoubleWide cos(const DoubleWide& x);
DoubleWide tan(const DoubleWide& x);
DoubleWide sinh(const DoubleWide& x);
DoubleWide cosh(const DoubleWide& x);
DoubleWide pow(DoubleWide x, int e);

/// x = quadrant * pi/2 + r with |r| <= pi/4 and quadrant in 0..3.
struct Reduced {
  int quadrant = 0;
  DoubleWide r;
};

Reduced reduce_half_pi(const DoubleWide& x);

/// Reduces phi + pi*t, taking t modulo 2 exactly before adding phi.
Reduced reduce_pi_multiple(const DoubleWide& phi, const DoubleWide& t);

/// Distance from the reduced point to the nearest multiple of pi (zeros of sin).
inline double dist_to_sin_zero(const Reduced& red) {
  const double r = std::fabs(red.r.hi());
  return (red.quadrant % 2 == 0) ? r : 1.5707963267948966 - r;
}
/// Distance to the nearest odd multiple of pi/2 (zeros of cos).
inline double dist_to_cos_zero(const Reduced& red) {
  const double r = std::fabs(red.r.hi());
  return (red.quadrant % 2 == 1) ? r : 1.5707963267948966 - r;
}

DoubleWide sin_kernel(const DoubleWide& r);
DoubleWide cos_kernel(const DoubleWide& r);

template <class T>
T sin_of(const Reduced& red);
template <class T>
T cos_of(const Reduced& red);

template <>
inline double sin_of<double>(const Reduced& red) {
  const double r = red.r.hi(), c = red.r.lo();
  switch (red.quadrant) {
    case 0: return std::sin(r) + std::cos(r) * c;
    case 1: return std::cos(r) - std::sin(r) * c;
    case 2: return -(std::sin(r) + std::cos(r) * c);
    default: return -(std::cos(r) - std::sin(r) * c);
  }
}
template <>
inline double cos_of<double>(const Reduced& red) {
  Reduced shifted = red;
  shifted.quadrant = (red.quadrant + 1) & 3;
  return sin_of<double>(shifted);
}
template <>
inline DoubleWide sin_of<DoubleWide>(const Reduced& red) {
  switch (red.quadrant) {
    case 0: return sin_kernel(red.r);
    case 1: return cos_kernel(red.r);
    case 2: return -sin_kernel(red.r);
    default: return -cos_kernel(red.r);
  }
}
template <>
inline DoubleWide cos_of<DoubleWide>(const Reduced& red) {
  Reduced shifted = red;
  shifted.quadrant = (red.quadrant + 1) & 3;
  return sin_of<DoubleWide>(shifted);
}

// Trigonometric functions of pi*x with exact reduction of x.
template <class T>
T sin_pi(const DoubleWide& x) {
  return sin_of<T>(reduce_pi_multiple(DoubleWide(0.0), x));
}
template <class T>
T cos_pi(const DoubleWide& x) {
  return cos_of<T>(reduce_pi_multiple(DoubleWide(0.0), x));
}
template <class T>
T cot_pi(const DoubleWide& x) {
  const Reduced red = reduce_pi_multiple(DoubleWide(0.0), x);
  return cos_of<T>(red) / sin_of<T>(red);
}

/// Rounds a DoubleWide down to T.
template <class T>
T narrow(const DoubleWide& x);
template <>
inline double narrow<double>(const DoubleWide& x) { return x.to_double(); }
template <>
inline DoubleWide narrow<DoubleWide>(const DoubleWide& x) { return x; }

inline DoubleWide widen(double x) { return DoubleWide(x); }
inline DoubleWide widen(const DoubleWide& x) { return x; }

}  // namespace trigsum
