#include "trigsum/gammafun.hpp"

#include <cmath>
#include <mutex>
#include <string>
#include <vector>

#include "trigsum/numerics.hpp"
#include "trigsum/wide_math.hpp"

namespace trigsum {
namespace {

template <class T>
bool is_nonpositive_integer(const T& x, long long& k) {
  if (x > T(0.0)) return false;
  const DoubleWide w = widen(x);
  const DoubleWide r = nearbyint(w);
  if (r == w) {
    k = static_cast<long long>(r.hi()) + static_cast<long long>(r.lo());
    return true;
  }
  return false;
}

template <class T>
T bern(int m) {
  return narrow<T>(bernoulli_cache().wide(m));
}

template <class T>
double shift_threshold();
template <>
double shift_threshold<double>() { return 12.0; }
template <>
double shift_threshold<DoubleWide>() { return 30.0; }

template <class T>
T pi_t() { return Consts<T>::pi(); }

// d^m/dx^m ctg(pi x) = pi^m P_m(ctg(pi x)); P_0 = c, P_{k+1} = -(1+c^2) P_k'.
const std::vector<DoubleWide>& cot_deriv_coeffs(int m) {
  static std::once_flag once;
  static std::vector<std::vector<DoubleWide>> table;
  std::call_once(once, [] {
    std::vector<BigInt> p = {BigInt(0), BigInt(1)};
    table.reserve(kMaxPolygammaOrder + 1);
    for (int k = 0; k <= kMaxPolygammaOrder; ++k) {
      std::vector<DoubleWide> w;
      w.reserve(p.size());
      for (const auto& c : p) w.push_back(to_wide(Rational(c)));
      table.push_back(std::move(w));
      std::vector<BigInt> d(p.size() > 1 ? p.size() - 1 : 1, BigInt(0));
      for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long long>(i);
      std::vector<BigInt> next(d.size() + 2, BigInt(0));
      for (std::size_t i = 0; i < d.size(); ++i) {
        next[i] -= d[i];
        next[i + 2] -= d[i];
      }
      while (next.size() > 1 && next.back() == 0) next.pop_back();
      p = std::move(next);
    }
  });
  return table[static_cast<std::size_t>(m)];
}

template <class T>
T eval_cot_deriv(int m, const T& c) {
  const auto& co = cot_deriv_coeffs(m);
  T s = narrow<T>(co.back());
  for (std::size_t i = co.size() - 1; i-- > 0;) s = s * c + narrow<T>(co[i]);
  return s;
}

template <class T>
T digamma_positive(T x) {
  using std::log;
  const double thr = shift_threshold<T>();
  T acc = 0.0;
  while (x < T(thr)) {
    acc -= T(1.0) / x;
    x += 1.0;
  }
  const T inv = T(1.0) / x;
  const T inv2 = inv * inv;
  T s = log(x) - inv * 0.5;
  T p = inv2;
  const double eps = Consts<T>::eps;
  for (int r = 1; r <= 40; ++r) {
    const T term = bern<T>(2 * r) * p / static_cast<double>(2 * r);
    s -= term;
    if (std::fabs(to_double(term)) < eps * std::fabs(to_double(s)) * 0.01) break;
    p *= inv2;
  }
  return s + acc;
}

template <class T>
T polygamma_positive(int m, T x) {
  using std::pow;
  const double thr = shift_threshold<T>() + m;
  T acc = 0.0;
  while (x < T(thr)) {
    acc += T(1.0) / pow(x, m + 1);
    x += 1.0;
  }
  // Everything below is scaled by 1/(m-1)!.
  const T inv = T(1.0) / x;
  const T inv2 = inv * inv;
  const T xm = pow(inv, m);
  T s = xm + xm * inv * (0.5 * m);
  T binom = 1.0;  // C(2k+m-1, 2k)
  T p = xm * inv2;
  const double eps = Consts<T>::eps;
  for (int k = 1; 2 * k <= 120; ++k) {
    binom = binom * static_cast<double>((2 * k + m - 2) * (2 * k + m - 1)) /
            static_cast<double>((2 * k - 1) * (2 * k));
    const T term = bern<T>(2 * k) * binom * p;
    s += term;
    if (std::fabs(to_double(term)) < eps * std::fabs(to_double(s)) * 0.01) break;
    p *= inv2;
  }
  T fact = 1.0;
  for (int k = 2; k < m; ++k) fact *= static_cast<double>(k);
  T v = (s + acc * static_cast<double>(m)) * fact;
  return (m % 2 == 1) ? v : -v;
}

template <class T>
T log_gamma_positive(T x) {
  using std::log;
  const double thr = shift_threshold<T>();
  T prod = 1.0;
  while (x < T(thr)) {
    prod *= x;
    x += 1.0;
  }
  const T inv = T(1.0) / x;
  const T inv2 = inv * inv;
  T s = (x - 0.5) * log(x) - x + Consts<T>::half_ln_two_pi();
  T p = inv;
  const double eps = Consts<T>::eps;
  for (int k = 1; k <= 40; ++k) {
    const T term = bern<T>(2 * k) * p / static_cast<double>(2 * k * (2 * k - 1));
    s += term;
    if (std::fabs(to_double(term)) < eps * std::fabs(to_double(s)) * 0.01) break;
    p *= inv2;
  }
  return s - log(prod);
}

}  // namespace

void PolygammaRequest::validate() const {
  if (order < 0 || order > kMaxPolygammaOrder) {
    throw DomainError("polygamma: order must lie in 0.." + std::to_string(kMaxPolygammaOrder));
  }
  if (!std::isfinite(argument)) throw DomainError("polygamma: argument must be finite");
  long long k = 0;
  if (is_nonpositive_integer(argument, k)) {
    throw PoleError("polygamma: pole at non-positive integer " + std::to_string(k), k);
  }
}

template <class T>
T digamma(const T& x) {
  long long k = 0;
  if (!isfinite(x)) throw DomainError("digamma: argument must be finite");
  if (is_nonpositive_integer(x, k)) {
    throw PoleError("digamma: pole at non-positive integer " + std::to_string(k), k);
  }
  if (x < T(0.0)) {
    const T refl = pi_t<T>() * cot_pi<T>(widen(x));
    return digamma(T(1.0) - x) - refl;
  }
  if constexpr (std::is_same_v<T, double>) {
    // Cancellation around the positive root; evaluate wide there.
    if (x >= 1.0 && x <= 10.0) return digamma_positive<DoubleWide>(DoubleWide(x)).to_double();
  }
  return digamma_positive<T>(x);
}

template <class T>
T polygamma(int m, const T& x) {
  if (m == 0) return digamma(x);
  if (m < 0 || m > kMaxPolygammaOrder) {
    throw DomainError("polygamma: order must lie in 0.." + std::to_string(kMaxPolygammaOrder));
  }
  long long k = 0;
  if (!isfinite(x)) throw DomainError("polygamma: argument must be finite");
  if (is_nonpositive_integer(x, k)) {
    throw PoleError("polygamma: pole at non-positive integer " + std::to_string(k), k);
  }
  if (x < T(0.0)) {
    // (-1)^m Psi_m(1-x) - Psi_m(x) = pi^{m+1} P_m(ctg pi x)
    using std::pow;
    const T c = cot_pi<T>(widen(x));
    const T rhs = pow(pi_t<T>(), m + 1) * eval_cot_deriv<T>(m, c);
    const T other = polygamma(m, T(1.0) - x);
    return ((m % 2 == 0) ? other : -other) - rhs;
  }
  return polygamma_positive<T>(m, x);
}

template <class T>
T log_gamma(const T& x) {
  using std::log;
  long long k = 0;
  if (!isfinite(x)) throw DomainError("log_gamma: argument must be finite");
  if (is_nonpositive_integer(x, k)) {
    throw PoleError("log_gamma: pole at non-positive integer " + std::to_string(k), k);
  }
  if (x < T(0.0)) {
    const T s = abs(sin_pi<T>(widen(x)));
    return log(pi_t<T>()) - log(s) - log_gamma_positive<T>(T(1.0) - x);
  }
  return log_gamma_positive<T>(x);
}

template <class T>
T alternating_digamma_sum(const T& b) {
  if (!(b > T(0.0))) throw DomainError("alternating_digamma_sum: b must be > 0");
  const T h = b * 0.5;
  return (digamma(h + 0.5) - digamma(h)) * 0.5;
}

double polygamma(const PolygammaRequest& req) {
  req.validate();
  return polygamma<double>(req.order, req.argument);
}

DoubleWide polygamma_wide(const PolygammaRequest& req) {
  req.validate();
  return polygamma<DoubleWide>(req.order, DoubleWide(req.argument));
}

double digamma_abs_error(double x, double value) {
  constexpr double eps = 0x1p-53;
  if (x > 0) {
    return 8.0 * eps * (std::fabs(value) + 1.0 / x + std::log(x + 13.0) + 1.0);
  }
  const double s = std::fabs(std::sin(3.141592653589793 * x));
  const double c = std::fabs(std::cos(3.141592653589793 * x)) / s;
  const double cond = std::fabs(x) * 9.8696044010893586 / (s * s);
  return 8.0 * eps *
         (std::fabs(value) + std::log(2.0 - x) + 2.0 + 3.141592653589793 * c + cond);
}

template double digamma<double>(const double&);
template DoubleWide digamma<DoubleWide>(const DoubleWide&);
template double polygamma<double>(int, const double&);
template DoubleWide polygamma<DoubleWide>(int, const DoubleWide&);
template double log_gamma<double>(const double&);
template DoubleWide log_gamma<DoubleWide>(const DoubleWide&);
template double alternating_digamma_sum<double>(const double&);
template DoubleWide alternating_digamma_sum<DoubleWide>(const DoubleWide&);

}  // namespace trigsum
