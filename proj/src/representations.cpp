#include "trigsum/representations.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "trigsum/gammafun.hpp"
#include "trigsum/numerics.hpp"
#include "trigsum/wide_math.hpp"

namespace trigsum {
namespace {

template <class T>
constexpr double unit_of() {
  return std::is_same_v<T, double> ? 0x1p-51 : 1e-30;
}
template <class T>
constexpr double arg_unit_of() {
  return std::is_same_v<T, double> ? 0.0 : 4e-32;
}

double dpsi_bound(double x) {
  if (x > 0.5) return 1.0 / x + 1.0 / (x * x) + 1.0;
  const double d = std::fabs(x - std::nearbyint(x));
  return 3.0 / (d * d) + 3.0 + 1.0 / (1.0 - x);
}

/// Running exact sum plus an absolute error budget.
template <class T>
struct Acc {
  ExactSum sum;
  double err = 0.0;
  void add(const T& v) { sum.add(v); }
  T value() const { return narrow<T>(sum.result()); }
};

template <class T>
T psi_term(const DoubleWide& x, double& err) {
  if constexpr (std::is_same_v<T, double>) {
    const double xd = x.to_double();
    const double v = digamma(xd);
    err += digamma_abs_error(xd, v) + dpsi_bound(xd) * std::fabs((x - xd).to_double());
    return v;
  } else {
    const DoubleWide v = digamma(x);
    const double xd = x.to_double();
    double scale = std::fabs(v.hi()) + 1.0;
    if (xd < 0) scale += dw::pi.hi() * std::fabs(cot_pi<double>(x));
    err += scale * 1e-28 + dpsi_bound(xd) * (std::fabs(xd) + 1.0) * 4e-32;
    return v;
  }
}

template <class T>
T trig_term(Family f, const DoubleWide& phi, const DoubleWide& shift, double& err) {
  const T v = family_term<T>(f, phi, shift);
  const double av = std::fabs(to_double(v));
  const double arg = std::fabs(phi.hi()) + 3.2 * std::fabs(shift.hi()) + 7.0;
  err += av * unit_of<T>() + (1.0 + av * av) * arg * arg_unit_of<T>();
  return v;
}

template <class T>
T log_t(const T& x) {
  using std::log;
  return log(x);
}

template <class T>
EvalResult finish(const T& value, double err, Method m, Precision p) {
  EvalResult r;
  r.value = widen(value);
  r.method = m;
  r.precision = p;
  r.err_estimate = err + std::fabs(to_double(value)) * unit_of<T>();
  return r;
}

void check_n(std::int64_t n) {
  if (n < 2) throw DomainError("n >= 2 required");
}

void check_csc_sec(const SumSpec& spec) {
  spec.validate();
  if (spec.family != Family::Csc && spec.family != Family::Sec) {
    throw DomainError("family must be csc or sec");
  }
  if (spec.principal_value) throw DomainError("principal value is only available for direct summation");
}

/// phi in cosecant terms (sec adds pi/2), as a DoubleWide.
DoubleWide csc_phase(const SumSpec& spec) {
  const DoubleWide phi(spec.phi);
  return spec.family == Family::Sec ? phi + dw::half_pi : phi;
}

// ---- cotangent form ----

template <class T>
EvalResult cotangent_form(std::int64_t n, double phi) {
  check_n(n);
  if (!std::isfinite(phi)) throw DomainError("phi must be finite");
  Acc<T> acc;
  const DoubleWide step = DoubleWide(1.0) / static_cast<double>(2 * n);
  if (phi == 0.0) {
    for (std::int64_t l = 1; l < n; ++l) {
      acc.add(trig_term<T>(Family::Ctg, 0.0, step * static_cast<double>(l), acc.err));
    }
  } else {
    const DoubleWide half = DoubleWide(phi) * 0.5;
    for (std::int64_t l = 1; l < n; ++l) {
      acc.add(trig_term<T>(Family::Ctg, half, step * static_cast<double>(l), acc.err));
    }
    double e = 0.0;
    const T cn = trig_term<T>(Family::Ctg, DoubleWide(phi) * static_cast<double>(n), 0.0, e);
    acc.err += e * static_cast<double>(n);
    acc.add(-cn * static_cast<double>(n));
    acc.add(trig_term<T>(Family::Ctg, phi, 0.0, acc.err));
  }
  return finish<T>(acc.value(), acc.err, Method::CotangentId, std::is_same_v<T, double> ? Precision::Native : Precision::Wide);
}

// ---- finite digamma series ----

template <class T>
EvalResult digamma_finite(const SumSpec& spec) {
  check_csc_sec(spec);
  const std::int64_t n = spec.n;
  const DoubleWide a(spec.a);
  const DoubleWide ph = DoubleWide(spec.phi) / dw::two_pi;
  const DoubleWide half_a = a * 0.5;
  const bool sec = spec.family == Family::Sec;
  const double o1 = sec ? 0.75 : 0.5, o2 = sec ? 0.25 : 0.0;
  const double o3 = sec ? 0.75 : 1.0, o4 = sec ? 0.25 : 0.5;
  Acc<T> acc;
  for (std::int64_t l = 1; l < n; ++l) {
    const DoubleWide base = a * static_cast<double>(l) / static_cast<double>(2 * n);
    const DoubleWide p = base + ph;
    const DoubleWide q = base - ph - half_a;
    try {
      acc.add(psi_term<T>(p + o1, acc.err));
      acc.add(-psi_term<T>(p + o2, acc.err));
      acc.add(psi_term<T>(q + o3, acc.err));
      acc.add(-psi_term<T>(q + o4, acc.err));
    } catch (const PoleError& e) {
      throw PoleError(std::string("digamma pole in term l=") + std::to_string(l) + ": " + e.what(), l);
    }
  }
  const T v = acc.value() / Consts<T>::pi() * 0.5;
  const Precision p = std::is_same_v<T, double> ? Precision::Native : Precision::Wide;
  return finish<T>(v, acc.err / (2.0 * M_PI), Method::DigammaFinite, p);
}

// ---- alternating digamma series ----

struct SeriesOut {
  DoubleWide value;
  double err = 0.0;
};

/// sum_{k>=0} (-1)^k a(k); a returns the term and adds its own error into err.
template <class T, class Term>
SeriesOut alternating_sum(Term term, const SeriesAccel& accel, double scale) {
  SeriesOut out;
  const double tol = accel.target_tol / scale;
  if (accel.scheme == SeriesAccel::Scheme::Direct) {
    ExactSum acc;
    double err = 0.0;
    for (std::int64_t k = 0; k < accel.max_terms; ++k) {
      const T v = term(k, err);
      if (std::fabs(to_double(v)) <= tol) {
        out.value = acc.result();
        out.err = err + std::fabs(to_double(v));
        return out;
      }
      acc.add((k % 2 == 0) ? v : T(-v));
    }
    throw NonConvergence("alternating series: target tolerance not met within " +
                         std::to_string(accel.max_terms) + " terms");
  }
  // Euler transform: sum (-1)^j Delta^j a_0 / 2^{j+1}.
  std::vector<T> row;  // row[m] = Delta^m a_{j-m}
  ExactSum acc;
  double max_err = 0.0, max_abs = 0.0;
  double weight = 0.5;
  int small = 0;
  for (std::int64_t j = 0; j < accel.max_terms; ++j) {
    double e = 0.0;
    const T aj = term(j, e);
    max_err = std::max(max_err, e);
    max_abs = std::max(max_abs, std::fabs(to_double(aj)));
    std::vector<T> next(row.size() + 1);
    next[0] = aj;
    for (std::size_t m = 1; m < next.size(); ++m) next[m] = next[m - 1] - row[m - 1];
    row = std::move(next);
    const T t = row.back() * ((j % 2 == 0) ? weight : -weight);
    weight *= 0.5;
    const double noise = 0.5 * (max_err + max_abs * unit_of<T>());
    const double tt = std::fabs(to_double(t));
    if (tt <= std::max(tol, 8.0 * noise)) {
      if (++small == 2) {
        // t is the first neglected term; its bound is the remainder.
        out.value = acc.result();
        out.err = tt + noise * static_cast<double>(j + 1);
        return out;
      }
    } else {
      small = 0;
    }
    acc.add(t);
  }
  throw NonConvergence("Euler-transformed series: target tolerance not met within " +
                       std::to_string(accel.max_terms) + " terms");
}

template <class T>
EvalResult digamma_infinite(const SumSpec& spec, const SeriesAccel& accel) {
  check_csc_sec(spec);
  accel.validate();
  if (!in_convergence_strip(spec)) {
    throw DomainError(spec.family == Family::Csc
                          ? "(phi,a) outside the strip -a*pi/n < phi < a*pi/n + pi*(1-a)"
                          : "(phi,a) outside the strip -pi/2 - a*pi/n < phi < a*pi/n + pi/2 - a*pi");
  }
  const std::int64_t n = spec.n;
  const double nd = static_cast<double>(n);
  const Precision prec = std::is_same_v<T, double> ? Precision::Native : Precision::Wide;
  if (spec.family == Family::Csc && spec.phi == 0.0 && spec.a == 1.0) {
    // 2nH_n/pi - 2(1-ln2)/pi + (2n/pi) sum_{k>=1} (-1)^k {Psi(nk+n) - Psi(nk)}
    const double scale = 2.0 * nd / M_PI;
    auto term = [&](std::int64_t j, double& err) -> T {
      const DoubleWide k = static_cast<double>(j + 1);
      return psi_term<T>(k * nd, err) - psi_term<T>(k * nd + nd, err);
    };
    const SeriesOut s = alternating_sum<T>(term, accel, scale);
    const T pi = Consts<T>::pi();
    const T hn = narrow<T>(harmonic(n));
    const T v = (hn * (2.0 * nd) - (T(1.0) - Consts<T>::ln2()) * 2.0 + narrow<T>(s.value) * (2.0 * nd)) / pi;
    EvalResult r = finish<T>(v, s.err * scale + (nd + 2.0) * unit_of<T>(), Method::DigammaInfinite, prec);
    return r;
  }
  const DoubleWide a(spec.a);
  const DoubleWide c1 = DoubleWide(nd) / a;
  const DoubleWide p = csc_phase(spec) * nd / (a * dw::pi);
  const double scale = nd / (spec.a * M_PI);
  auto term = [&](std::int64_t k, double& err) -> T {
    const DoubleWide ck = c1 * static_cast<double>(k);
    const T v1 = psi_term<T>(ck + nd + p, err);
    const T v2 = psi_term<T>(ck + c1 - p - nd + 1.0, err);
    const T v3 = psi_term<T>(ck + p + 1.0, err);
    const T v4 = psi_term<T>(ck + c1 - p, err);
    return (v1 - v3) - (v2 - v4);
  };
  const SeriesOut s = alternating_sum<T>(term, accel, scale);
  const T v = narrow<T>(s.value) * nd / (narrow<T>(a) * Consts<T>::pi());
  return finish<T>(v, s.err * scale, Method::DigammaInfinite, prec);
}

// ---- mixed form ----

template <class T>
EvalResult mixed_form(std::int64_t n, double phi) {
  check_n(n);
  if (!std::isfinite(phi)) throw DomainError("phi must be finite");
  const double nd = static_cast<double>(n);
  const T pi = Consts<T>::pi();
  const T ln_n = log_t(T(nd));
  Acc<T> acc;
  Acc<T> psis;
  const DoubleWide step = DoubleWide(1.0) / (2.0 * nd);
  const Precision prec = std::is_same_v<T, double> ? Precision::Native : Precision::Wide;
  if (phi == 0.0) {
    for (std::int64_t l = 1; l < n; ++l) psis.add(psi_term<T>(step * static_cast<double>(l), psis.err));
    const T v = -(ln_n * (2.0 * nd) + (Consts<T>::euler_gamma() + Consts<T>::ln2()) * (2.0 * (nd - 1.0)) +
                  psis.value() * 2.0) /
                pi;
    return finish<T>(v, (psis.err * 2.0 + nd * 8.0 * unit_of<T>()) / M_PI, Method::Mixed, prec);
  }
  const DoubleWide ph = DoubleWide(phi) / dw::two_pi;
  for (std::int64_t l = 1; l < n; ++l) {
    const DoubleWide base = step * static_cast<double>(l);
    try {
      psis.add(psi_term<T>(base + ph, psis.err));
      psis.add(psi_term<T>(base - ph, psis.err));
    } catch (const PoleError& e) {
      throw PoleError(std::string("phi/2pi collides with l/2n at l=") + std::to_string(l), l);
    }
  }
  double e_psi = 0.0;
  const DoubleWide x = DoubleWide(phi) / dw::pi;
  const T psi_n = psi_term<T>(x * nd, e_psi);
  const T psi_1 = psi_term<T>(x, e_psi);
  double e_ctg = 0.0;
  const T ctg_n = trig_term<T>(Family::Ctg, DoubleWide(phi) * nd, 0.0, e_ctg);
  const T ctg_1 = trig_term<T>(Family::Ctg, phi, 0.0, e_ctg);
  acc.add(-(ln_n * (2.0 * nd) + Consts<T>::ln2() * (2.0 * (nd - 1.0))) / pi);
  acc.add(ctg_n * nd);
  acc.add(-ctg_1);
  acc.add((psi_n * nd) * 2.0 / pi);
  acc.add(-psi_1 * 2.0 / pi);
  acc.add(-psis.value() / pi);
  const double err = e_ctg * nd + e_psi * 2.0 * nd / M_PI + psis.err / M_PI + nd * 8.0 * unit_of<T>() +
                     (std::fabs(to_double(ctg_n)) * nd + std::fabs(to_double(psi_n)) * nd) * unit_of<T>();
  return finish<T>(acc.value(), err, Method::Mixed, prec);
}

// ---- integral form ----

/// Integrand pieces fixed for a given (n, a, c), c = 2phi/pi + a - 1.
template <class T>
struct Integrand {
  double n;
  T a;
  T c_abs;
  T operator()(const T& x) const {
    using std::exp;
    using std::expm1;
    const T u = a * x * (n - 1.0);
    const T v = a * x;
    const T w = x * c_abs * n;
    const T nx = x * n;
    const T lg = (u - v) + (w - nx);
    const T A = (n == 2.0) ? T(1.0) : T(expm1(u * -2.0) / expm1(v * -2.0));
    const T B = (T(1.0) + exp(w * -2.0)) / (T(1.0) + exp(nx * -2.0));
    return exp(lg) * A * B;
  }
};

struct QuadOut {
  DoubleWide value;
  double err = 0.0;
};

template <class T>
QuadOut tanh_sinh(const Integrand<T>& f, const T& X, const QuadratureConfig& cfg, double rate) {
  using std::exp;
  using std::sinh;
  using std::cosh;
  constexpr double t_max = 4.0;
  const T half_pi = Consts<T>::half_pi();
  auto node = [&](double t, T& x, T& w) {
    const T s = half_pi * sinh(T(t));
    const T q = exp(-abs(s) * 2.0);
    const T inv = T(1.0) / (T(1.0) + q);
    x = (s >= T(0.0)) ? X * inv : X * q * inv;
    w = X * half_pi * cosh(T(t)) * q * inv * inv * 2.0;
  };
  ExactSum sum;
  double abs_mass = 0.0;
  auto add_level = [&](double h, bool odd_only) {
    const int steps = static_cast<int>(std::ceil(t_max / h));
    for (int k = -steps; k <= steps; ++k) {
      if (odd_only && k % 2 == 0) continue;
      T x, w;
      node(k * h, x, w);
      if (!(x > T(0.0))) continue;
      const T fx = f(x) * w;
      abs_mass += std::fabs(to_double(fx));
      sum.add(fx);
    }
  };
  double h = 0.5;
  add_level(h, false);
  T prev = narrow<T>(sum.result()) * h;
  const double round_unit = std::is_same_v<T, double> ? 0x1p-50 : 1e-30;
  for (int level = 1; level <= cfg.max_levels; ++level) {
    h *= 0.5;
    add_level(h, true);
    const T cur = narrow<T>(sum.result()) * h;
    const double diff = std::fabs(to_double(cur - prev));
    const double rounding = 64.0 * round_unit * abs_mass * h * (1.0 + rate * to_double(X));
    if (level >= 3 && diff <= std::max(cfg.abs_tol, 4.0 * rounding)) {
      QuadOut out;
      out.value = widen(cur);
      out.err = diff + rounding;
      return out;
    }
    prev = cur;
  }
  throw QuadratureFailure("tanh-sinh quadrature: tolerance " + std::to_string(cfg.abs_tol) +
                          " not met within " + std::to_string(cfg.max_levels) + " levels");
}

template <class T>
EvalResult integral_form(const SumSpec& spec, const QuadratureConfig& cfg) {
  check_csc_sec(spec);
  cfg.validate();
  if (!in_convergence_strip(spec)) {
    throw DomainError(spec.family == Family::Csc
                          ? "(phi,a) outside the strip -a*pi/n < phi < a*pi/n + pi*(1-a)"
                          : "(phi,a) outside the strip -pi/2 - a*pi/n < phi < a*pi/n + pi/2 - a*pi");
  }
  const double nd = static_cast<double>(spec.n);
  const DoubleWide c = csc_phase(spec) * 2.0 / dw::pi + (DoubleWide(spec.a) - 1.0);
  Integrand<T> f{nd, T(spec.a), narrow<T>(abs(c))};
  // Decay rate of the integrand for large x.
  const double rate = nd - spec.a * (nd - 2.0) - nd * std::fabs(c.to_double());
  if (!(rate > 0.0)) throw DomainError("integral does not converge at this (phi,a)");
  const double peak = nd;
  const double X = (std::log(peak / cfg.truncation_ratio) + 1.0) / rate;
  const QuadOut q = tanh_sinh<T>(f, T(X), cfg, rate);
  const double tail = 4.0 * peak * cfg.truncation_ratio / rate;
  const T v = narrow<T>(q.value) * (2.0 * nd) / Consts<T>::pi();
  const double factor = 2.0 * nd / M_PI;
  const Precision prec = std::is_same_v<T, double> ? Precision::Native : Precision::Wide;
  return finish<T>(v, (q.err + tail) * factor, Method::Integral, prec);
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(abs_tol >= 1e-30)) throw DomainError("abs_tol >= 1e-30 required");
  if (max_levels < 1 || max_levels > 20) throw DomainError("max_levels must lie in 1..20");
  if (!(truncation_ratio > 0.0) || truncation_ratio > 1e-20) {
    throw DomainError("truncation_ratio must lie in (0, 1e-20]");
  }
}

void SeriesAccel::validate() const {
  if (max_terms < 1 || max_terms > 10'000'000) throw DomainError("max_terms must lie in 1..1e7");
  if (!(target_tol > 0.0)) throw DomainError("target_tol > 0 required");
}

bool in_convergence_strip(const SumSpec& spec) {
  const double n = static_cast<double>(spec.n), a = spec.a;
  const double phi = csc_phase(spec).to_double();
  return phi > -a * M_PI / n && phi < a * M_PI / n + M_PI * (1.0 - a);
}

double integral_integrand(const SumSpec& spec, double x) {
  const double c = csc_phase(spec).to_double() * 2.0 / M_PI + spec.a - 1.0;
  const Integrand<double> f{static_cast<double>(spec.n), spec.a, std::fabs(c)};
  return f(x);
}

EvalResult eval_cotangent_form(std::int64_t n, double phi, Precision precision) {
  return precision == Precision::Wide ? cotangent_form<DoubleWide>(n, phi) : cotangent_form<double>(n, phi);
}

EvalResult eval_digamma_finite(const SumSpec& spec, Precision precision) {
  return precision == Precision::Wide ? digamma_finite<DoubleWide>(spec) : digamma_finite<double>(spec);
}

EvalResult eval_digamma_infinite(const SumSpec& spec, const SeriesAccel& accel, Precision precision) {
  return precision == Precision::Wide ? digamma_infinite<DoubleWide>(spec, accel)
                                      : digamma_infinite<double>(spec, accel);
}

EvalResult eval_mixed_form(std::int64_t n, double phi, Precision precision) {
  return precision == Precision::Wide ? mixed_form<DoubleWide>(n, phi) : mixed_form<double>(n, phi);
}

EvalResult eval_integral_form(const SumSpec& spec, const QuadratureConfig& cfg, Precision precision) {
  return precision == Precision::Wide ? integral_form<DoubleWide>(spec, cfg) : integral_form<double>(spec, cfg);
}

double digamma_summation_check(DigammaSumId id, std::int64_t n, double z) {
  check_n(n);
  if (!std::isfinite(z)) throw DomainError("z must be finite");
  const double nd = static_cast<double>(n);
  const DoubleWide g = dw::euler_gamma, l2 = dw::ln2, pi = dw::pi;
  const DoubleWide sn = wide_csc_sum(n, 0.0, 0.0, 1.0);
  const DoubleWide step = DoubleWide(1.0) / (2.0 * nd);
  ExactSum lhs, rhs;
  switch (id) {
    case DigammaSumId::HalfGridSum:
      for (std::int64_t l = 1; l <= n; ++l) lhs.add(digamma(step * static_cast<double>(l)));
      rhs.add(-(g + log(DoubleWide(2.0 * nd))) * nd);
      rhs.add(-l2);
      rhs.add(-pi * 0.5 * sn);
      break;
    case DigammaSumId::OddGridWeightedSum:
    case DigammaSumId::CosecantFromDigamma: {
      ExactSum w;
      for (std::int64_t l = 0; l < n; ++l) {
        const DoubleWide x = step * static_cast<double>(2 * l + 1);
        w.add(x * digamma(x));
      }
      const DoubleWide ws = w.result();
      const DoubleWide lg = g + log(DoubleWide(4.0 * nd));
      if (id == DigammaSumId::OddGridWeightedSum) {
        lhs.add(ws);
        rhs.add(-lg * nd * 0.5);
        rhs.add(pi * 0.25 * sn);
      } else {
        lhs.add(sn);
        rhs.add(lg * (2.0 * nd) / pi);
        rhs.add(ws * 4.0 / pi);
      }
      break;
    }
    case DigammaSumId::ShiftedTangentSum:
    case DigammaSumId::ShiftedCosecantSum: {
      const bool csc_side = id == DigammaSumId::ShiftedCosecantSum;
      const DoubleWide zw(z);
      for (std::int64_t l = 1; l <= (csc_side ? n : n - 1); ++l) {
        const DoubleWide x = step * static_cast<double>(l);
        lhs.add(digamma(x + zw));
        lhs.add(digamma(x - zw));
      }
      rhs.add(digamma(zw * (2.0 * nd)) * (2.0 * nd));
      rhs.add(-digamma(zw * 2.0) * 2.0);
      if (!csc_side) {
        rhs.add(-log(DoubleWide(2.0 * nd)) * (2.0 * nd));
        rhs.add(l2 * 2.0);
        const DoubleWide tg = family_sum<DoubleWide>(Family::Tg, 2 * n, zw * pi, 0.0, 1.0, 1, n - 1, false).value;
        rhs.add(-pi * tg);
      } else {
        rhs.add(digamma(zw + 0.5) * 2.0);
        rhs.add(-log(DoubleWide(nd)) * (2.0 * nd));
        rhs.add(-l2 * (2.0 * (nd - 1.0)));
        rhs.add(pi * nd * family_term<DoubleWide>(Family::Ctg, 0.0, zw * (2.0 * nd)));
        rhs.add(-pi * family_term<DoubleWide>(Family::Csc, 0.0, zw * 2.0));
        const DoubleWide s2 = wide_csc_sum(n, zw * pi * 2.0, 0.0, 1.0);
        rhs.add(-pi * s2);
      }
      break;
    }
  }
  return std::fabs((lhs.result() - rhs.result()).to_double());
}

double odd_cotangent_check(std::int64_t n) {
  check_n(n);
  ExactSum s;
  const DoubleWide step = DoubleWide(1.0) / (2.0 * static_cast<double>(n));
  for (std::int64_t k = 0; k < n; ++k) {
    const double r = static_cast<double>(2 * k + 1);
    s.add(family_term<DoubleWide>(Family::Ctg, 0.0, step * r) * r);
  }
  const DoubleWide rhs = -s.result() / static_cast<double>(n);
  return std::fabs((wide_csc_sum(n, 0.0, 0.0, 1.0) - rhs).to_double());
}

DoubleWide harmonic_series_term(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1) throw DomainError("n, k >= 1 required");
  const DoubleWide nk = DoubleWide(static_cast<double>(n)) * static_cast<double>(k);
  return digamma(nk + static_cast<double>(n)) - digamma(nk);
}

}  // namespace trigsum

namespace trigsum {

DoubleWide alternating_series(const std::function<DoubleWide(std::int64_t, double&)>& term,
                              const SeriesAccel& accel, double* err) {
  accel.validate();
  const SeriesOut s = alternating_sum<DoubleWide>(term, accel, 1.0);
  if (err != nullptr) *err = s.err;
  return s.value;
}

}  // namespace trigsum
