#include "trigsum/asymptotics.hpp"

#include <array>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <string>

#include "trigsum/gammafun.hpp"
#include "trigsum/representations.hpp"
#include "trigsum/wide_math.hpp"

namespace trigsum {
namespace {

constexpr double kWideUnit = 1e-31;
constexpr double kArgUnit = 4e-32;

void check_order(int order) {
  if (order < 1 || order % 2 == 0) throw DomainError("derivative order must be odd and positive");
  if (order > kMaxDerivOrder) throw DomainError("derivative order exceeds " + std::to_string(kMaxDerivOrder));
}

struct PolyTable {
  std::array<TrigDerivPoly, (kMaxDerivOrder + 1) / 2> odd;
};

PolyTable build_table(DerivKind kind) {
  // csc: d(u^i v^j) = -i u^i v^{j+1} - j u^{i+2} v^{j-1}; sec has the opposite signs.
  const int sign = kind == DerivKind::Csc ? -1 : 1;
  PolyTable t;
  std::map<std::pair<int, int>, BigInt> cur{{{1, 0}, BigInt(1)}};
  for (int order = 1; order <= kMaxDerivOrder; ++order) {
    std::map<std::pair<int, int>, BigInt> next;
    for (const auto& [ij, c] : cur) {
      const auto [i, j] = ij;
      if (i > 0) next[{i, j + 1}] += c * i * sign;
      if (j > 0) next[{i + 2, j - 1}] += c * j * sign;
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    cur = std::move(next);
    if (order % 2 == 1) {
      TrigDerivPoly& p = t.odd[order / 2];
      p.kind = kind;
      p.order = order;
      p.coeffs = cur;
    }
  }
  return t;
}

const PolyTable& table(DerivKind kind) {
  static const PolyTable csc = build_table(DerivKind::Csc);
  static const PolyTable sec = build_table(DerivKind::Sec);
  return kind == DerivKind::Csc ? csc : sec;
}

struct PolyValue {
  DoubleWide value;
  double err = 0.0;
};

PolyValue eval_poly(const TrigDerivPoly& p, const DoubleWide& alpha) {
  const Reduced red = reduce_half_pi(alpha);
  const DoubleWide s = sin_of<DoubleWide>(red);
  const DoubleWide c = cos_of<DoubleWide>(red);
  const DoubleWide den = p.kind == DerivKind::Csc ? s : c;
  if (den.hi() == 0.0) throw PoleError("derivative polynomial evaluated on a pole", 0);
  const DoubleWide u = DoubleWide(1.0) / den;
  const DoubleWide v = (p.kind == DerivKind::Csc ? c : s) / den;
  const int top = p.order + 2;
  std::vector<DoubleWide> up(top + 1), vp(top + 1);
  up[0] = 1.0;
  vp[0] = 1.0;
  for (int k = 1; k <= top; ++k) {
    up[k] = up[k - 1] * u;
    vp[k] = vp[k - 1] * v;
  }
  ExactSum acc;
  double mass = 0.0;
  for (const auto& [ij, coef] : p.coeffs) {
    const DoubleWide term = to_wide(Rational(coef)) * up[ij.first] * vp[ij.second];
    mass += std::fabs(term.to_double());
    acc.add(term);
  }
  PolyValue out;
  out.value = acc.result();
  // Rounding of the terms plus the argument's own rounding carried through one more derivative.
  out.err = mass * kWideUnit * (2.0 + (p.order + 1) * (1.0 + std::fabs(u.to_double()) + std::fabs(v.to_double())) *
                                          std::fabs(alpha.to_double()) * kArgUnit / kWideUnit);
  return out;
}

DoubleWide factorial_wide(int m) {
  DoubleWide f = 1.0;
  for (int k = 2; k <= m; ++k) f *= static_cast<double>(k);
  return f;
}

/// x^(2r-1) B_{2r} / (2r)!
DoubleWide bernoulli_weight(const DoubleWide& x, int r) {
  return pow(x, 2 * r - 1) * bernoulli_cache().wide(2 * r) / factorial_wide(2 * r);
}

struct CotValue {
  DoubleWide value;
  double dist = 0.0;
  double err = 0.0;
};

/// ctg(phi_part + pi*t), t reduced exactly.
CotValue cot_term(const DoubleWide& phi_part, const DoubleWide& t) {
  const Reduced red = reduce_pi_multiple(phi_part, t);
  const DoubleWide s = sin_of<DoubleWide>(red);
  if (s.hi() == 0.0) throw PoleError("cotangent term sits on a pole", 0);
  CotValue out;
  out.value = cos_of<DoubleWide>(red) / s;
  out.dist = dist_to_sin_zero(red);
  const double v = out.value.to_double();
  const double span = std::fabs(phi_part.to_double()) + M_PI * std::fabs(t.to_double());
  out.err = (1.0 + v * v) * span * kArgUnit + std::fabs(v) * kWideUnit;
  return out;
}

void check_n_N(std::int64_t n, int N, int max_N) {
  if (n < 2) throw DomainError("n >= 2 required");
  if (N < 2 || N > max_N) throw DomainError("N must lie in 2.." + std::to_string(max_N));
}

constexpr int kMaxN = (kMaxDerivOrder + 1) / 2;

struct Builder {
  AsymptoticSeries s;
  const AsymptoticOptions& opt;

  Builder(SumSpec spec, int N, Regime regime, const AsymptoticOptions& o) : opt(o) {
    s.spec = spec;
    s.N = N;
    s.regime = regime;
    s.below_n0 = spec.n < o.n0;
  }
  void lead(const std::string& name, const DoubleWide& v, double err = 0.0) {
    s.leading.push_back({name, v});
    s.rounding += err + std::fabs(v.to_double()) * kWideUnit;
  }
  void cot(const std::string& name, const DoubleWide& scale, const CotValue& c) {
    if (c.dist < opt.pole_gap) s.unreliable = true;
    lead(name, c.value * scale, c.err * std::fabs(scale.to_double()));
  }
  /// coef(r) for r = 1..N; err is added in units of the r-th tail term's coefficient.
  template <class Coef>
  void tail(Coef coef) {
    const double nd = static_cast<double>(s.spec.n);
    for (int r = 1; r <= s.N; ++r) {
      double err = 0.0;
      const DoubleWide c = coef(r, err);
      if (r < s.N) {
        s.tail_coeffs.push_back(c);
        s.rounding += (err + std::fabs(c.to_double()) * kWideUnit) / std::pow(nd, 2 * r - 1);
      } else {
        s.next_coeff = c;
      }
    }
  }
};

DoubleWide harmonic_wide(std::int64_t n, double& err) {
  if (n <= 100000) {
    err = static_cast<double>(n) * 1e-32;
    return harmonic(n);
  }
  const DoubleWide v = digamma(DoubleWide(static_cast<double>(n) + 1.0)) + dw::euler_gamma;
  err = std::fabs(v.to_double()) * 1e-29;
  return v;
}

double strip_tol(double x) { return std::fabs(x) * 1e-15; }

}  // namespace

// ---- derivative polynomials ----

DoubleWide TrigDerivPoly::eval(const DoubleWide& alpha) const { return eval_poly(*this, alpha).value; }

double TrigDerivPoly::eval(double alpha) const { return eval_poly(*this, DoubleWide(alpha)).value.to_double(); }

const TrigDerivPoly& deriv_poly(DerivKind kind, int order) {
  check_order(order);
  return table(kind).odd[order / 2];
}

const TrigDerivPoly& csc_deriv_poly(int order) { return deriv_poly(DerivKind::Csc, order); }
const TrigDerivPoly& sec_deriv_poly(int order) { return deriv_poly(DerivKind::Sec, order); }

double deriv_poly_polygamma_check(DerivKind kind, int order, double alpha) {
  check_order(order);
  if (kind == DerivKind::Csc && !(alpha > 0.0 && alpha < M_PI)) throw DomainError("alpha must lie in (0, pi)");
  if (kind == DerivKind::Sec && !(std::fabs(alpha) < M_PI / 2)) throw DomainError("alpha must lie in (-pi/2, pi/2)");
  const DoubleWide x = DoubleWide(alpha) / dw::two_pi;
  auto pg = [order](const DoubleWide& z) { return polygamma(order, z); };
  DoubleWide combo;
  if (kind == DerivKind::Csc) {
    combo = pg(0.5 + x) + pg(0.5 - x) - pg(x) - pg(1.0 - x);
  } else {
    combo = pg(0.75 + x) + pg(0.25 - x) - pg(0.25 + x) - pg(0.75 - x);
  }
  combo /= pow(dw::two_pi, order + 1);
  const DoubleWide poly = deriv_poly(kind, order).eval(DoubleWide(alpha));
  return std::fabs((poly - combo).to_double()) / std::max(1.0, std::fabs(poly.to_double()));
}

double deriv_diff_integral_check(DerivKind kind, int order, double phi, double a) {
  check_order(order);
  if (kind == DerivKind::Csc) {
    if (!(phi > 0.0 && phi < M_PI && a > 1.0 - phi / M_PI && a < 2.0 - phi / M_PI)) {
      throw DomainError("(phi,a) outside 0 < phi < pi, 1 - phi/pi < a < 2 - phi/pi");
    }
  } else if (!(std::fabs(phi) < M_PI / 2 && a > 0.5 - phi / M_PI && a < 1.5 - phi / M_PI)) {
    throw DomainError("(phi,a) outside -pi/2 < phi < pi/2, 1/2 - phi/pi < a < 3/2 - phi/pi");
  }
  const double b = std::fabs(a - 1.0);
  const double c = 2.0 * phi / M_PI + a - (kind == DerivKind::Csc ? 2.0 : 1.0);
  const double kappa = 1.0 - b - std::fabs(c);
  if (!(kappa > 0.0)) throw DomainError("integral diverges at this (phi,a)");
  const int r2 = order + 1;
  double integral = 0.0;
  if (c != 0.0) {
    // ch(bt)/ch(t) * sh(ct) * t^(2r-1) written without overflow.
    auto f = [&](double t) {
      const double body = std::exp(-kappa * t) * (1.0 + std::exp(-2.0 * b * t)) * -std::expm1(-2.0 * std::fabs(c) * t) /
                          (2.0 * (1.0 + std::exp(-2.0 * t)));
      if (body == 0.0) return 0.0;
      return std::copysign(body, c) * std::pow(t, order);
    };
    boost::math::quadrature::exp_sinh<double> q;
    integral = q.integrate(f) * std::pow(2.0, r2 + 1) / std::pow(M_PI, r2);
  }
  const TrigDerivPoly& p = deriv_poly(kind, order);
  const DoubleWide diff = p.eval(DoubleWide(phi)) - p.eval(DoubleWide(phi) + DoubleWide(a) * dw::pi);
  return std::fabs(diff.to_double() - integral);
}

// ---- regimes ----

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::LogOnly: return "LogOnly";
    case Regime::CtgPlusLog_A1: return "CtgPlusLog_A1";
    case Regime::LogOnly_A01: return "LogOnly_A01";
    case Regime::CtgPlusLog_Aover1: return "CtgPlusLog_Aover1";
    case Regime::General: return "General";
    case Regime::Unsupported: return "Unsupported";
  }
  return "?";
}

RegimeInfo classify_regime(double phi, double a) {
  RegimeInfo info;
  if (!std::isfinite(phi) || !std::isfinite(a) || !(a > 0.0)) return info;
  if (phi == 0.0 && a == 1.0) {
    info.regime = Regime::LogOnly;
    info.leading = "(2n/pi)(ln(2n/pi) + gamma)";
  } else if (a == 1.0 && phi > 0.0 && phi < M_PI) {
    info.regime = Regime::CtgPlusLog_A1;
    info.leading = "-n ctg(n phi) - (2n/pi) ln tg(phi/2)";
  } else if (phi == 0.0 && a < 1.0) {
    info.regime = Regime::LogOnly_A01;
    info.leading = "(n/(a pi))(ln(2n/(pi a)) + gamma + ln tg(pi a/2)) - csc(a pi)/2";
  } else if (phi == 0.0 && a > 1.0 && a < 2.0) {
    info.regime = Regime::CtgPlusLog_Aover1;
    info.leading = "(n/a) ctg(pi n/a) + (n/(a pi))(ln(2n/(pi a)) + gamma + ln tg(pi - pi a/2)) - csc(a pi)/2";
  } else if (phi > 0.0 && phi < M_PI && a > 1.0 - phi / M_PI && a < 2.0 - phi / M_PI) {
    info.regime = Regime::General;
    info.leading =
        "(n/a) ctg(n(pi - phi)/a) + (n/(a pi)) ln[tg(pi - pi a/2 - phi/2)/tg(phi/2)] - (csc phi + csc(phi + a pi))/2";
    const double c = 2.0 * phi + a * M_PI - 2.0 * M_PI;
    info.zero_tail_line = std::fabs(c) <= 8.0 * strip_tol(2.0 * M_PI);
  }
  return info;
}

// ---- series container ----

DoubleWide AsymptoticSeries::leading_sum() const {
  ExactSum acc;
  for (const NamedTerm& t : leading) acc.add(t.value);
  return acc.result();
}

DoubleWide AsymptoticSeries::tail_term(int r) const {
  if (r < 1 || r > static_cast<int>(tail_coeffs.size())) throw DomainError("tail index out of range");
  return tail_coeffs[r - 1] / pow(DoubleWide(static_cast<double>(spec.n)), 2 * r - 1);
}

DoubleWide AsymptoticSeries::partial(int m) const {
  if (m < 0 || m > static_cast<int>(tail_coeffs.size())) throw DomainError("partial sum order out of range");
  ExactSum acc;
  for (const NamedTerm& t : leading) acc.add(t.value);
  for (int r = 1; r <= m; ++r) acc.add(tail_term(r));
  return acc.result();
}

double AsymptoticSeries::err_estimate() const {
  const double nd = static_cast<double>(spec.n);
  return std::fabs(next_coeff.to_double()) / std::pow(nd, 2 * N - 1) + rounding;
}

EvalResult AsymptoticSeries::to_eval_result() const {
  EvalResult r;
  r.value = value();
  r.method = Method::Asymptotic;
  r.order = N;
  r.err_estimate = err_estimate();
  r.precision = Precision::Wide;
  r.below_n0 = below_n0;
  r.unreliable = unreliable;
  return r;
}

// ---- S_n ----

Rational sn_log_tail_rational(int r) {
  if (r < 1 || 2 * r > bernoulli_cache().max_index) throw DomainError("r out of range");
  const Rational& b = bernoulli_cache().values[2 * r];
  BigInt fact = 1;
  for (int k = 2; k <= 2 * r; ++k) fact *= k;
  const BigInt p = (BigInt(1) << (2 * r)) - 2;
  const Rational v = Rational(p) * b * b / Rational(fact * r);
  return (r % 2 == 1) ? Rational(-v) : v;
}

double sn_bracket_margin(int r) {
  if (r < 1 || 2 * r > bernoulli_cache().max_index) throw DomainError("r out of range");
  const DoubleWide w = abs(bernoulli_weight(dw::pi, r)) * dw::pi * (std::ldexp(1.0, 2 * r) - 2.0);
  return (w - 1.0).to_double();
}

AsymptoticSeries asympt_Sn(std::int64_t n, int N, SnFlavor flavor, const AsymptoticOptions& opt) {
  check_n_N(n, N, 30);
  const double nd = static_cast<double>(n);
  Builder b(SumSpec{Family::Csc, n, 0.0, 1.0, false}, N, Regime::LogOnly, opt);
  const DoubleWide two_n_pi = DoubleWide(2.0 * nd) / dw::pi;
  if (flavor == SnFlavor::Harmonic) {
    double herr = 0.0;
    const DoubleWide h = harmonic_wide(n, herr);
    b.lead("harmonic", two_n_pi * (h - log(dw::half_pi)), herr * two_n_pi.to_double());
    b.lead("constant", -dw::inv_pi);
    b.tail([](int r, double& err) {
      const DoubleWide bern = bernoulli_cache().wide(2 * r);
      const DoubleWide w = abs(bernoulli_weight(dw::pi, r)) * dw::pi * (std::ldexp(1.0, 2 * r) - 2.0);
      const DoubleWide c = bern / (dw::pi * static_cast<double>(r)) * (DoubleWide(1.0) - w);
      err = std::fabs(c.to_double()) * kWideUnit;
      return c;
    });
  } else {
    b.lead("log", two_n_pi * (log(two_n_pi) + dw::euler_gamma));
    b.tail([](int r, double&) { return to_wide(sn_log_tail_rational(r)) * pow(dw::pi, 2 * r - 1); });
  }
  return b.s;
}

// ---- S_n(phi,a) ----

AsymptoticSeries asympt_Sn_phi_a(std::int64_t n, double phi, double a, int N, const AsymptoticOptions& opt) {
  check_n_N(n, N, kMaxN);
  if (!(phi > 0.0 && phi < M_PI && a > 1.0 - phi / M_PI && a < 2.0 - phi / M_PI)) {
    throw DomainError("(phi,a) outside 0 < phi < pi, 1 - phi/pi < a < 2 - phi/pi");
  }
  const double nd = static_cast<double>(n);
  Builder b(SumSpec{Family::Csc, n, phi, a, false}, N, Regime::General, opt);
  const DoubleWide aw(a), pw(phi);
  const DoubleWide n_a = DoubleWide(nd) / aw;
  // n(pi - phi)/a = pi*(n/a) - n phi/a
  b.cot("cotangent", n_a, cot_term(-(pw * nd) / aw, n_a));
  const DoubleWide half = DoubleWide(0.5);
  const DoubleWide num = tan(dw::pi - dw::half_pi * aw - pw * half);
  const DoubleWide den = tan(pw * half);
  b.lead("log", n_a / dw::pi * log(num / den));
  const DoubleWide alpha2 = pw + aw * dw::pi;
  b.lead("constant", -(DoubleWide(1.0) / sin(pw) + DoubleWide(1.0) / sin(alpha2)) * 0.5);
  const DoubleWide c = pw * 2.0 / dw::pi + aw - 2.0;
  const bool zero_tail = c.hi() == 0.0;
  b.tail([&](int r, double& err) -> DoubleWide {
    if (zero_tail) return 0.0;
    const TrigDerivPoly& p = csc_deriv_poly(2 * r - 1);
    const PolyValue f1 = eval_poly(p, pw), f2 = eval_poly(p, alpha2);
    const DoubleWide w = bernoulli_weight(aw * dw::pi, r);
    err = (f1.err + f2.err) * std::fabs(w.to_double());
    return -w * (f1.value - f2.value);
  });
  return b.s;
}

AsymptoticSeries asympt_Sn_phi1(std::int64_t n, double phi, int N, const AsymptoticOptions& opt) {
  check_n_N(n, N, kMaxN);
  if (!(phi > 0.0 && phi < M_PI)) throw DomainError("phi must lie in (0, pi)");
  const double nd = static_cast<double>(n);
  Builder b(SumSpec{Family::Csc, n, phi, 1.0, false}, N, Regime::CtgPlusLog_A1, opt);
  const DoubleWide pw(phi);
  b.cot("cotangent", DoubleWide(-nd), cot_term(pw * nd, 0.0));
  b.lead("log", -(DoubleWide(2.0 * nd) / dw::pi) * log(tan(pw * 0.5)));
  b.tail([&](int r, double& err) {
    const PolyValue f = eval_poly(csc_deriv_poly(2 * r - 1), pw);
    const DoubleWide w = bernoulli_weight(dw::pi, r) * -2.0;
    err = f.err * std::fabs(w.to_double());
    return w * f.value;
  });
  return b.s;
}

AsymptoticSeries asympt_Sn_0a(std::int64_t n, double a, int N, SnFlavor flavor, const AsymptoticOptions& opt) {
  check_n_N(n, N, kMaxN);
  if (!(a > 0.0 && a < 2.0) || a == 1.0) throw DomainError("0 < a < 2 and a != 1 required");
  const double nd = static_cast<double>(n);
  const bool over = a > 1.0;
  Builder b(SumSpec{Family::Csc, n, 0.0, a, false}, N, over ? Regime::CtgPlusLog_Aover1 : Regime::LogOnly_A01, opt);
  const DoubleWide aw(a);
  const DoubleWide a_pi = aw * dw::pi;
  const DoubleWide n_a = DoubleWide(nd) / aw;
  const DoubleWide n_api = n_a / dw::pi;
  if (over) b.cot("cotangent", n_a, cot_term(0.0, n_a));
  const DoubleWide ln_tg = log(abs(tan(a_pi * 0.5)));
  if (flavor == SnFlavor::Log) {
    b.lead("log", n_api * (log(DoubleWide(2.0 * nd) / a_pi) + dw::euler_gamma + ln_tg));
    b.lead("constant", -(DoubleWide(0.5) / sin(a_pi)));
  } else {
    double herr = 0.0;
    const DoubleWide h = harmonic_wide(n, herr);
    b.lead("harmonic", n_api * h, herr * n_api.to_double());
    b.lead("log", n_api * (ln_tg + log(DoubleWide(2.0) / a_pi)));
    b.lead("constant", -(DoubleWide(0.5) / a_pi) - DoubleWide(0.5) / sin(a_pi));
  }
  b.tail([&](int r, double& err) {
    const PolyValue f = eval_poly(csc_deriv_poly(2 * r - 1), a_pi);
    const DoubleWide bern = bernoulli_cache().wide(2 * r);
    // (2^{2r} - 2)(-1)^{r+1} B_{2r} / (2r)
    const DoubleWide corr = abs(bern) * (std::ldexp(1.0, 2 * r) - 2.0) / static_cast<double>(2 * r);
    const DoubleWide w = bernoulli_weight(a_pi, r);
    err = f.err * std::fabs(w.to_double());
    DoubleWide c = w * (f.value - corr);
    if (flavor == SnFlavor::Harmonic) c += bern / (a_pi * static_cast<double>(2 * r));
    return c;
  });
  return b.s;
}

// ---- C_n ----

AsymptoticSeries asympt_Cn(std::int64_t n, double phi, double a, int N, const AsymptoticOptions& opt) {
  check_n_N(n, N, kMaxN);
  if (!(std::fabs(phi) < M_PI / 2 && a > 0.5 - phi / M_PI && a < 1.5 - phi / M_PI)) {
    throw DomainError("(phi,a) outside -pi/2 < phi < pi/2, 1/2 - phi/pi < a < 3/2 - phi/pi");
  }
  const double nd = static_cast<double>(n);
  Builder b(SumSpec{Family::Sec, n, phi, a, false}, N, Regime::General, opt);
  const DoubleWide aw(a), pw(phi);
  const DoubleWide n_a = DoubleWide(nd) / aw;
  // n(pi/2 - phi)/a = pi*(n/2a) - n phi/a
  b.cot("cotangent", n_a, cot_term(-(pw * nd) / aw, n_a * 0.5));
  const DoubleWide num = tan(dw::pi * 0.75 - dw::half_pi * aw - pw * 0.5);
  const DoubleWide den = tan(pw * 0.5 + dw::pi * 0.25);
  b.lead("log", n_a / dw::pi * log(num / den));
  const DoubleWide alpha2 = pw + aw * dw::pi;
  b.lead("constant", -(DoubleWide(1.0) / cos(pw) + DoubleWide(1.0) / cos(alpha2)) * 0.5);
  const DoubleWide c = pw * 2.0 / dw::pi + aw - 1.0;
  const bool zero_tail = c.hi() == 0.0;
  b.tail([&](int r, double& err) -> DoubleWide {
    if (zero_tail) return 0.0;
    const TrigDerivPoly& p = sec_deriv_poly(2 * r - 1);
    const PolyValue g1 = eval_poly(p, pw), g2 = eval_poly(p, alpha2);
    const DoubleWide w = bernoulli_weight(aw * dw::pi, r);
    err = (g1.err + g2.err) * std::fabs(w.to_double());
    return -w * (g1.value - g2.value);
  });
  return b.s;
}

AsymptoticSeries asympt_Cn_phi1(std::int64_t n, double phi, int N, const AsymptoticOptions& opt) {
  check_n_N(n, N, kMaxN);
  if (!(std::fabs(phi) < M_PI / 2)) throw DomainError("phi must lie in (-pi/2, pi/2)");
  const double nd = static_cast<double>(n);
  Builder b(SumSpec{Family::Sec, n, phi, 1.0, false}, N, Regime::CtgPlusLog_A1, opt);
  const DoubleWide pw(phi);
  b.cot("cotangent", DoubleWide(-nd), cot_term(pw * nd, DoubleWide(nd) * 0.5));
  b.lead("log", -(DoubleWide(2.0 * nd) / dw::pi) * log(tan(pw * 0.5 + dw::pi * 0.25)));
  b.tail([&](int r, double& err) {
    const PolyValue g = eval_poly(sec_deriv_poly(2 * r - 1), pw);
    const DoubleWide w = bernoulli_weight(dw::pi, r) * -2.0;
    err = g.err * std::fabs(w.to_double());
    return w * g.value;
  });
  return b.s;
}

// ---- tangent / cotangent half-step ----

AsymptoticSeries asympt_ctg_tg_halfstep(std::int64_t n, double phi, int N, Family family,
                                        const AsymptoticOptions& opt) {
  check_n_N(n, N, kMaxN);
  if (family == Family::Ctg) {
    if (!(phi > 0.0 && phi < M_PI / 2)) throw DomainError("ctg half-step needs 0 < phi < pi/2");
  } else if (family == Family::Tg) {
    if (!(phi > M_PI / 2 && phi < M_PI)) throw DomainError("tg half-step needs pi/2 < phi < pi");
  } else {
    throw DomainError("half-step expansion is defined for Ctg and Tg only");
  }
  const double nd = static_cast<double>(n);
  Builder b(SumSpec{family, n, phi, 0.5, false}, N, Regime::General, opt);
  const DoubleWide pw(phi);
  const DoubleWide two_n_pi = DoubleWide(2.0 * nd) / dw::pi;
  const DoubleWide ctg2 = cos(pw * 2.0) / sin(pw * 2.0);
  if (family == Family::Ctg) {
    b.lead("log", -two_n_pi * log(tan(pw)));
    b.lead("constant", -ctg2);
  } else {
    b.lead("log", -two_n_pi * log(tan(dw::pi - pw)));
    b.lead("constant", ctg2);
  }
  b.tail([&](int r, double& err) {
    const PolyValue f = eval_poly(csc_deriv_poly(2 * r - 1), pw * 2.0);
    const DoubleWide w = bernoulli_weight(dw::pi, r) * -2.0;
    err = f.err * std::fabs(w.to_double());
    return w * f.value;
  });
  return b.s;
}

AsymptoticSeries asympt_auto(const SumSpec& spec, int N, const AsymptoticOptions& opt) {
  spec.validate();
  switch (spec.family) {
    case Family::Csc: {
      const RegimeInfo info = classify_regime(spec.phi, spec.a);
      switch (info.regime) {
        case Regime::LogOnly: return asympt_Sn(spec.n, N, SnFlavor::Log, opt);
        case Regime::CtgPlusLog_A1: return asympt_Sn_phi1(spec.n, spec.phi, N, opt);
        case Regime::LogOnly_A01:
        case Regime::CtgPlusLog_Aover1: return asympt_Sn_0a(spec.n, spec.a, N, SnFlavor::Log, opt);
        case Regime::General: return asympt_Sn_phi_a(spec.n, spec.phi, spec.a, N, opt);
        case Regime::Unsupported: break;
      }
      throw DomainError("no asymptotic expansion covers this (phi,a)");
    }
    case Family::Sec:
      if (spec.a == 1.0 && std::fabs(spec.phi) < M_PI / 2) return asympt_Cn_phi1(spec.n, spec.phi, N, opt);
      return asympt_Cn(spec.n, spec.phi, spec.a, N, opt);
    case Family::Tg:
    case Family::Ctg:
      if (spec.a != 0.5) throw DomainError("tangent-family expansions need the half step a = 1/2");
      return asympt_ctg_tg_halfstep(spec.n, spec.phi, N, spec.family, opt);
  }
  throw DomainError("unknown family");
}

// ---- alternating digamma tail ----

namespace {

void check_alternating_digamma(double alpha, double beta1, std::optional<double> beta2, std::int64_t n) {
  if (!(alpha > 0.0) || !(beta1 > 0.0) || (beta2 && !(*beta2 > 0.0))) {
    throw DomainError("alpha and beta must be positive");
  }
  if (!std::isfinite(alpha) || !std::isfinite(beta1) || (beta2 && !std::isfinite(*beta2))) {
    throw DomainError("parameters must be finite");
  }
  if (n < 1) throw DomainError("n >= 1 required");
}

}  // namespace

DoubleWide AlternatingDigammaExpansion::value() const {
  ExactSum acc;
  acc.add(log_gamma_constant);
  acc.add(inv_n_term);
  for (const DoubleWide& t : tail_terms) acc.add(t);
  return acc.result();
}

AlternatingDigammaExpansion alternating_digamma_expansion(double alpha, double beta1, std::optional<double> beta2, std::int64_t n, int N) {
  check_alternating_digamma(alpha, beta1, beta2, n);
  if (N < 2 || N > kMaxN) throw DomainError("N must lie in 2.." + std::to_string(kMaxN));
  AlternatingDigammaExpansion e;
  e.alpha = alpha;
  e.beta1 = beta1;
  e.beta2 = beta2;
  e.n = n;
  e.N = N;
  const DoubleWide al(alpha), two_al = al * 2.0;
  const DoubleWide nd(static_cast<double>(n));
  auto x_of = [&](double b) { return DoubleWide(b) / two_al; };
  auto P = [&](double b) {
    const DoubleWide x = x_of(b);
    return digamma(x + 0.5) - digamma(x) - two_al / b;
  };
  auto Q = [&](double b, int r) {
    const DoubleWide x = x_of(b);
    const int m = 2 * r - 1;
    return polygamma(m, x) - polygamma(m, x + 0.5) - pow(two_al, 2 * r) * factorial_wide(m) / pow(DoubleWide(b), 2 * r);
  };
  auto tail_weight = [&](int r) {
    return bernoulli_cache().wide(2 * r) / (pow(two_al * nd, 2 * r) * factorial_wide(2 * r - 1) * static_cast<double>(r)) *
           -0.5;
  };
  if (beta2) {
    const double b2 = *beta2;
    if (b2 == beta1) {
      e.tail_terms.assign(N - 1, DoubleWide(0.0));
      return e;
    }
    const DoubleWide x1 = x_of(beta1), x2 = x_of(b2);
    e.log_gamma_constant = log_gamma(x1 + 0.5) + log_gamma(x2) - log_gamma(x2 + 0.5) - log_gamma(x1) -
                           log(DoubleWide(beta1) / b2);
    e.inv_n_term = -(P(beta1) - P(b2)) / (al * nd * 4.0);
    for (int r = 1; r < N; ++r) e.tail_terms.push_back(tail_weight(r) * (Q(beta1, r) - Q(b2, r)));
  } else {
    const DoubleWide x1 = x_of(beta1);
    e.log_gamma_constant = log(al / beta1) + log_gamma(x1 + 0.5) - log_gamma(x1) + dw::ln2 - log(dw::pi) * 0.5;
    e.inv_n_term = -dw::ln2 / (al * nd * 2.0) - P(beta1) / (al * nd * 4.0);
    for (int r = 1; r < N; ++r) {
      const DoubleWide bern = bernoulli_cache().wide(2 * r);
      const DoubleWide extra =
          pow(dw::two_pi, 2 * r) * abs(bern) * (std::ldexp(1.0, 2 * r) - 2.0) / static_cast<double>(4 * r);
      e.tail_terms.push_back(tail_weight(r) * (Q(beta1, r) + extra));
    }
  }
  return e;
}

DoubleWide alternating_digamma_direct(double alpha, double beta1, std::optional<double> beta2, std::int64_t n, double* err) {
  check_alternating_digamma(alpha, beta1, beta2, n);
  const double nd = static_cast<double>(n);
  const DoubleWide na = DoubleWide(nd) * alpha;
  const DoubleWide nb1 = DoubleWide(nd) * beta1;
  const DoubleWide nb2 = DoubleWide(nd) * (beta2 ? *beta2 : 0.0);
  // sum_{k>=1} (-1)^k t_k = -sum_{j>=0} (-1)^j t_{j+1}
  auto term = [&](std::int64_t j, double& e) {
    const DoubleWide k = static_cast<double>(j + 1);
    const DoubleWide p1 = digamma(na * k + nb1);
    const DoubleWide p2 = digamma(na * k + nb2);
    e += (std::fabs(p1.to_double()) + std::fabs(p2.to_double())) * 1e-30;
    return p1 - p2;
  };
  SeriesAccel accel;
  accel.target_tol = 1e-28;
  accel.max_terms = 2000;
  const DoubleWide s = alternating_series(term, accel, err);
  return -s;
}

}  // namespace trigsum
