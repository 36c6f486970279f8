#pragma once

#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <string>

namespace trigsum {

// Error-free transforms.
inline double two_sum(double a, double b, double& err) {
  const double s = a + b;
  const double bb = s - a;
  err = (a - (s - bb)) + (b - bb);
  return s;
}

inline double fast_two_sum(double a, double b, double& err) {
  const double s = a + b;
  err = b - (s - a);
  return s;
}

inline double two_prod(double a, double b, double& err) {
  const double p = a * b;
  err = std::fma(a, b, -p);
  return p;
}

/// Unevaluated sum hi + lo of two doubles, |lo| <= ulp(hi)/2.
class DoubleWide {
 public:
  constexpr DoubleWide() = default;
  constexpr DoubleWide(double x) : hi_(x), lo_(0.0) {}  // NOLINT
  template <std::integral I>
  constexpr DoubleWide(I x) {  // NOLINT
    const auto xl = static_cast<long long>(x);
    hi_ = static_cast<double>(xl);
    lo_ = static_cast<double>(xl - static_cast<long long>(hi_));
  }

  /// Builds from an arbitrary pair, renormalising.
  static DoubleWide from_sum(double a, double b) {
    DoubleWide r;
    r.hi_ = two_sum(a, b, r.lo_);
    return r;
  }
  /// Trusts the caller that (hi, lo) is already normalised.
  static constexpr DoubleWide raw(double hi, double lo) {
    DoubleWide r;
    r.hi_ = hi;
    r.lo_ = lo;
    return r;
  }
  static DoubleWide product(double a, double b) {
    DoubleWide r;
    r.hi_ = two_prod(a, b, r.lo_);
    return r;
  }

  constexpr double hi() const { return hi_; }
  constexpr double lo() const { return lo_; }
  constexpr double to_double() const { return hi_ + lo_; }

  DoubleWide operator-() const { return raw(-hi_, -lo_); }

  DoubleWide& operator+=(const DoubleWide& b) {
    double e1, e2;
    double s = two_sum(hi_, b.hi_, e1);
    const double t = two_sum(lo_, b.lo_, e2);
    e1 += t;
    s = fast_two_sum(s, e1, e1);
    e1 += e2;
    hi_ = fast_two_sum(s, e1, lo_);
    return *this;
  }
  DoubleWide& operator+=(double b) {
    double e;
    const double s = two_sum(hi_, b, e);
    e += lo_;
    hi_ = fast_two_sum(s, e, lo_);
    return *this;
  }
  DoubleWide& operator-=(const DoubleWide& b) { return *this += -b; }
  DoubleWide& operator-=(double b) { return *this += -b; }

  DoubleWide& operator*=(const DoubleWide& b) {
    double e;
    const double p = two_prod(hi_, b.hi_, e);
    e += hi_ * b.lo_ + lo_ * b.hi_;
    hi_ = fast_two_sum(p, e, lo_);
    return *this;
  }
  DoubleWide& operator*=(double b) {
    double e;
    const double p = two_prod(hi_, b, e);
    e += lo_ * b;
    hi_ = fast_two_sum(p, e, lo_);
    return *this;
  }

  DoubleWide& operator/=(const DoubleWide& b) {
    const double q1 = hi_ / b.hi_;
    DoubleWide r = *this;
    r -= DoubleWide(b) *= q1;
    const double q2 = r.hi_ / b.hi_;
    r -= DoubleWide(b) *= q2;
    const double q3 = r.hi_ / b.hi_;
    double e;
    const double s = fast_two_sum(q1, q2, e);
    *this = raw(s, e);
    *this += q3;
    return *this;
  }
  DoubleWide& operator/=(double b) {
    const double q1 = hi_ / b;
    double e;
    const double p = two_prod(q1, b, e);
    double se;
    const double s = two_sum(hi_, -p, se);
    const double r = (s + (se - e)) + lo_;
    const double q2 = r / b;
    hi_ = fast_two_sum(q1, q2, lo_);
    return *this;
  }

  friend DoubleWide operator+(DoubleWide a, const DoubleWide& b) { return a += b; }
  friend DoubleWide operator-(DoubleWide a, const DoubleWide& b) { return a -= b; }
  friend DoubleWide operator*(DoubleWide a, const DoubleWide& b) { return a *= b; }
  friend DoubleWide operator/(DoubleWide a, const DoubleWide& b) { return a /= b; }
  friend DoubleWide operator+(DoubleWide a, double b) { return a += b; }
  friend DoubleWide operator-(DoubleWide a, double b) { return a -= b; }
  friend DoubleWide operator*(DoubleWide a, double b) { return a *= b; }
  friend DoubleWide operator/(DoubleWide a, double b) { return a /= b; }
  friend DoubleWide operator+(double a, DoubleWide b) { return b += a; }
  friend DoubleWide operator-(double a, const DoubleWide& b) { return DoubleWide(a) -= b; }
  friend DoubleWide operator*(double a, DoubleWide b) { return b *= a; }
  friend DoubleWide operator/(double a, const DoubleWide& b) { return DoubleWide(a) /= b; }

  friend bool operator==(const DoubleWide& a, const DoubleWide& b) {
    return a.hi_ == b.hi_ && a.lo_ == b.lo_;
  }
  friend std::partial_ordering operator<=>(const DoubleWide& a, const DoubleWide& b) {
    if (auto c = a.hi_ <=> b.hi_; c != 0) return c;
    return a.lo_ <=> b.lo_;
  }

 private:
  double hi_ = 0.0;
  double lo_ = 0.0;
};

inline DoubleWide abs(const DoubleWide& x) { return x.hi() < 0 || (x.hi() == 0 && x.lo() < 0) ? -x : x; }
inline bool isfinite(const DoubleWide& x) { return std::isfinite(x.hi()); }
inline bool signbit(const DoubleWide& x) { return std::signbit(x.hi()); }
inline DoubleWide ldexp(const DoubleWide& x, int e) {
  return DoubleWide::raw(std::ldexp(x.hi(), e), std::ldexp(x.lo(), e));
}
inline double to_double(const DoubleWide& x) { return x.to_double(); }
inline double abs(double x) { return std::fabs(x); }
inline bool isfinite(double x) { return std::isfinite(x); }
inline double to_double(double x) { return x; }

/// Nearest integer, ties away from zero on hi.
inline DoubleWide nearbyint(const DoubleWide& x) {
  double h = std::nearbyint(x.hi());
  if (h == x.hi()) {
    const double l = std::nearbyint(x.lo());
    return DoubleWide::from_sum(h, l);
  }
  if (std::fabs(h - x.hi()) == 0.5 && x.lo() != 0.0) {
    h = x.lo() > 0 ? std::floor(x.hi()) + 1.0 : std::ceil(x.hi()) - 1.0;
    if (std::fabs(h - x.hi()) > 0.5) h = std::nearbyint(x.hi());
  }
  return DoubleWide(h);
}
inline DoubleWide floor(const DoubleWide& x) {
  double h = std::floor(x.hi());
  if (h == x.hi()) return DoubleWide::from_sum(h, std::floor(x.lo()));
  return DoubleWide(h);
}

DoubleWide sqrt(const DoubleWide& x);

/// Decimal rendering with the requested number of significant digits.
std::string to_string(const DoubleWide& x, int digits = 32);
/// Parses a decimal literal exactly enough for 31 digits.
DoubleWide parse_wide(const std::string& s);

namespace dw {
inline constexpr DoubleWide pi = DoubleWide::raw(3.141592653589793, 1.2246467991473532e-16);
inline constexpr DoubleWide two_pi = DoubleWide::raw(6.283185307179586, 2.4492935982947064e-16);
inline constexpr DoubleWide half_pi = DoubleWide::raw(1.5707963267948966, 6.123233995736766e-17);
inline constexpr DoubleWide inv_pi = DoubleWide::raw(0.3183098861837907, -1.9678676675182486e-17);
inline constexpr DoubleWide ln2 = DoubleWide::raw(0.6931471805599453, 2.3190468138462996e-17);
inline constexpr DoubleWide euler_gamma = DoubleWide::raw(0.5772156649015329, -4.942915152430645e-18);
inline constexpr DoubleWide half_ln_two_pi = DoubleWide::raw(0.9189385332046728, -3.8782941580672414e-17);
// Third components for argument reduction.
inline constexpr double pi_3 = -2.9947698097183397e-33;
inline constexpr double half_pi_3 = -1.4973849048591698e-33;
inline constexpr double ln2_3 = 5.707708438416212e-34;
}  // namespace dw

enum class Precision { Native, Wide };

/// Compile-time constants for the two working precisions.
template <class T>
struct Consts;

template <>
struct Consts<double> {
  static double pi() { return 3.141592653589793; }
  static double half_pi() { return 1.5707963267948966; }
  static double ln2() { return 0.6931471805599453; }
  static double euler_gamma() { return 0.5772156649015329; }
  static double half_ln_two_pi() { return 0.9189385332046728; }
  static constexpr double eps = 0x1p-53;
};

template <>
struct Consts<DoubleWide> {
  static DoubleWide pi() { return dw::pi; }
  static DoubleWide half_pi() { return dw::half_pi; }
  static DoubleWide ln2() { return dw::ln2; }
  static DoubleWide euler_gamma() { return dw::euler_gamma; }
  static DoubleWide half_ln_two_pi() { return dw::half_ln_two_pi; }
  static constexpr double eps = 0x1p-104;
};

}  // namespace trigsum
