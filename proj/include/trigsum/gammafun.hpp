#pragma once

#include "trigsum/double_wide.hpp"
#include "trigsum/errors.hpp"

namespace trigsum {

/// Largest supported polygamma order (2*60 - 1).
inline constexpr int kMaxPolygammaOrder = 119;

struct PolygammaRequest {
  int order = 0;
  double argument = 1.0;

  /// Throws DomainError / PoleError when the request is unusable.
  void validate() const;
};

/// Psi(x). Throws PoleError at non-positive integers.
template <class T>
T digamma(const T& x);

/// m-th derivative of Psi, m >= 0.
template <class T>
T polygamma(int m, const T& x);

/// ln|Gamma(x)|.
template <class T>
T log_gamma(const T& x);

/// sum_{k>=0} (-1)^k/(k+b) = (Psi(1/2+b/2) - Psi(b/2))/2, b > 0.
template <class T>
T alternating_digamma_sum(const T& b);

double polygamma(const PolygammaRequest& req);
DoubleWide polygamma_wide(const PolygammaRequest& req);

/// A priori absolute error of digamma<double>(x), argument rounding included.
double digamma_abs_error(double x, double value);

}  // namespace trigsum
