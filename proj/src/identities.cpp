#include "trigsum/identities.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <utility>

#include "trigsum/errors.hpp"
#include "trigsum/gammafun.hpp"
#include "trigsum/sums.hpp"
#include "trigsum/wide_math.hpp"

namespace trigsum {
namespace {

struct NamedId {
  IdentityId id;
  const char* name;
};

constexpr std::array<NamedId, 25> kNames{{
    {IdentityId::EulerProduct, "euler-product"},
    {IdentityId::CotangentSum, "cotangent-sum"},
    {IdentityId::CotangentSquareSum, "cotangent-square-sum"},
    {IdentityId::TangentSquareOdd, "tangent-square-odd"},
    {IdentityId::EisensteinCotSine, "eisenstein-cot-sine"},
    {IdentityId::SecantCosineSum, "secant-cosine-sum"},
    {IdentityId::DigammaHartley, "digamma-hartley"},
    {IdentityId::DhtRoundTrip, "dht-roundtrip"},
    {IdentityId::AlternatingCsc, "alternating-csc"},
    {IdentityId::AlternatingSec, "alternating-sec"},
    {IdentityId::TangentSum, "tangent-sum"},
    {IdentityId::CscStepTwo, "csc-step-two"},
    {IdentityId::SecStepTwo, "sec-step-two"},
    {IdentityId::CscSquareSum, "csc-square-sum"},
    {IdentityId::SecSquareSum, "sec-square-sum"},
    {IdentityId::TangentSquareSum, "tangent-square-sum"},
    {IdentityId::RationalCosFull, "rational-cos-full"},
    {IdentityId::RationalCosHalfPlus, "rational-cos-half-plus"},
    {IdentityId::RationalCosHalfMinus, "rational-cos-half-minus"},
    {IdentityId::RationalCosShifted, "rational-cos-shifted"},
    {IdentityId::RationalCosOddPlus, "rational-cos-odd-plus"},
    {IdentityId::RationalCosOddMinus, "rational-cos-odd-minus"},
    {IdentityId::RationalCotangent, "rational-cotangent"},
    {IdentityId::RationalCscSquare, "rational-csc-square"},
    {IdentityId::LogDerivative, "log-derivative"},
}};

using W = DoubleWide;

/// Residual helper: accumulates LHS terms and their magnitudes.
struct Lhs {
  W sum;
  double mass = 0.0;
  void add(const W& t) {
    sum += t;
    mass += std::fabs(t.to_double());
  }
};

double residual(const Lhs& lhs, const W& rhs) {
  const double scale = std::max({1.0, lhs.mass, std::fabs(rhs.to_double())});
  return std::fabs((lhs.sum - rhs).to_double()) / scale;
}

std::int64_t int_param(const IdentityCase& c, const char* key) {
  const auto it = c.params.find(key);
  if (it == c.params.end()) throw DomainError(std::string(identity_name(c.id)) + ": missing parameter " + key);
  const double v = it->second;
  if (!(std::isfinite(v) && v == std::floor(v) && std::fabs(v) < 0x1p53)) {
    throw DomainError(std::string(identity_name(c.id)) + ": " + key + " must be an integer");
  }
  return static_cast<std::int64_t>(v);
}

double real_param(const IdentityCase& c, const char* key) {
  const auto it = c.params.find(key);
  if (it == c.params.end()) throw DomainError(std::string(identity_name(c.id)) + ": missing parameter " + key);
  if (!std::isfinite(it->second)) throw DomainError(std::string(identity_name(c.id)) + ": " + key + " must be finite");
  return it->second;
}

[[noreturn]] void domain(IdentityId id, const std::string& clause) {
  throw DomainError(std::string(identity_name(id)) + ": " + clause);
}

void need_n(IdentityId id, std::int64_t n, std::int64_t min_n) {
  if (n < min_n) domain(id, "n >= " + std::to_string(min_n) + " required");
}

void need_odd(IdentityId id, std::int64_t n) {
  if (n % 2 == 0) domain(id, "n must be odd (n = 1, 3, 5, ...)");
}

void need_x_not_one(IdentityId id, double x) {
  if (x == 1.0) domain(id, "x != 1 required");
}

/// f(phi + pi*t) for the four families.
W term(Family f, const W& phi, const W& t) { return family_term<W>(f, phi, t); }

W ratio(std::int64_t num, std::int64_t den) { return W(static_cast<double>(num)) / static_cast<double>(den); }

W sin_w(const W& x) { return sin_of<W>(reduce_pi_multiple(x, W(0.0))); }
W cos_w(const W& x) { return cos_of<W>(reduce_pi_multiple(x, W(0.0))); }

struct Cw {
  W re, im;
};
Cw operator+(const Cw& a, const Cw& b) { return {a.re + b.re, a.im + b.im}; }
Cw operator*(const Cw& a, const Cw& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Cw cpow(Cw z, std::int64_t e) {
  Cw r{W(1.0), W(0.0)};
  while (e > 0) {
    if (e & 1) r = r * z;
    z = z * z;
    e >>= 1;
  }
  return r;
}
Cw cdiv(const Cw& a, const Cw& b) {
  const W d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

/// Sum of 1/(1 + sign*2x cos(pi*t_l) + x^2) over the given t_l = num_l / den.
template <class Fn>
Lhs rational_cos_sum(double x, double sign, std::int64_t l0, std::int64_t l1, Fn t_of) {
  const W xw(x);
  const W base = W(1.0) + xw * xw;
  Lhs lhs;
  for (std::int64_t l = l0; l <= l1; ++l) {
    const W c = cos_pi<W>(t_of(l));
    lhs.add(W(1.0) / (base + xw * c * (2.0 * sign)));
  }
  return lhs;
}

W half_rhs(double x, std::int64_t n, bool uncorrected) {
  const W xw(x);
  const W x2m1 = xw * xw - 1.0;
  const W x2n = pow(xw, static_cast<int>(2 * n));
  const W numer = uncorrected ? x2n - 1.0 : x2n + 1.0;
  return W(static_cast<double>(n)) * numer / (x2m1 * (x2n - 1.0)) - (xw * xw + 1.0) / (x2m1 * x2m1);
}

W csc_square_rhs(double x, std::int64_t n, double phi, bool uncorrected) {
  const W xw(x);
  const int ni = static_cast<int>(n);
  const W p = xw + 1.0, m = xw - 1.0;
  const W x2m1 = xw * xw - 1.0;
  const W s = sin_w(W(phi) * static_cast<double>(n));
  const W s2 = s * s;
  const W second = uncorrected ? pow(p, 2 * ni - 1) : pow(m, 2 * ni - 1);
  const W numer = pow(p, 2 * ni - 1) - xw * pow(x2m1, ni - 1) * 2.0 + second + xw * pow(x2m1, ni - 1) * s2 * 4.0;
  const W diff = pow(p, ni) - pow(m, ni);
  const W denom = xw * diff * diff + xw * pow(x2m1, ni) * s2 * 4.0;
  return W(static_cast<double>(n)) * numer / denom;
}

double rational_cos_half(const IdentityCase& c, bool uncorrected) {
  const std::int64_t n = int_param(c, "n");
  const double x = real_param(c, "x");
  need_n(c.id, n, 1);
  need_x_not_one(c.id, x);
  if (x == -1.0) domain(c.id, "x != -1 required");
  const double sign = c.id == IdentityId::RationalCosHalfPlus ? 1.0 : -1.0;
  const Lhs lhs = rational_cos_sum(x, sign, 1, n - 1, [&](std::int64_t l) { return ratio(l, n); });
  return residual(lhs, half_rhs(x, n, uncorrected));
}

double rational_csc_square(const IdentityCase& c, bool uncorrected) {
  const std::int64_t n = int_param(c, "n");
  const double x = real_param(c, "x");
  const double phi = real_param(c, "phi");
  need_n(c.id, n, 1);
  if (x == 0.0) domain(c.id, "x != 0 required");
  const W xw(x), pw(phi);
  Lhs lhs;
  for (std::int64_t l = 0; l < n; ++l) {
    const W cs = term(Family::Csc, pw, ratio(l, n));
    lhs.add(W(1.0) / (xw * xw - 1.0 + cs * cs));
  }
  return residual(lhs, csc_square_rhs(x, n, phi, uncorrected));
}

/// The secant form carries (-1)^{(n-1)/2}; uncorrected drops it.
double alternating(const IdentityCase& c, bool uncorrected) {
  const IdentityId id = c.id;
  const std::int64_t n = int_param(c, "n");
  need_n(id, n, 1);
  need_odd(id, n);
  const Family f = id == IdentityId::AlternatingCsc ? Family::Csc : Family::Sec;
  const W phi(real_param(c, "phi"));
  Lhs lhs;
  for (std::int64_t l = 0; l < n; ++l) {
    const W t = term(f, phi, ratio(l, n));
    lhs.add(l % 2 ? -t : t);
  }
  double sign = 1.0;
  if (f == Family::Sec && !uncorrected && (n / 2) % 2 == 1) sign = -1.0;
  return residual(lhs, term(f, phi * static_cast<double>(n), W(0.0)) * (sign * static_cast<double>(n)));
}

/// Step 2pi/n sums; the secant form carries (-1)^{(n-1)/2} for odd n.
double step_two(const IdentityCase& c, bool uncorrected) {
  const IdentityId id = c.id;
  const std::int64_t n = int_param(c, "n");
  need_n(id, n, 1);
  const Family f = id == IdentityId::CscStepTwo ? Family::Csc : Family::Sec;
  const W phi(real_param(c, "phi"));
  Lhs lhs;
  for (std::int64_t l = 0; l < n; ++l) lhs.add(term(f, phi, ratio(2 * l, n)));
  if (n % 2 == 0) return residual(lhs, W(0.0));
  double sign = 1.0;
  if (f == Family::Sec && !uncorrected && (n / 2) % 2 == 1) sign = -1.0;
  return residual(lhs, term(f, phi * static_cast<double>(n), W(0.0)) * (sign * static_cast<double>(n)));
}

W parity_rhs(std::int64_t n, Family odd, Family even, const W& nphi) {
  return W(static_cast<double>(n)) * term(n % 2 ? odd : even, nphi, W(0.0));
}

}  // namespace

const char* identity_name(IdentityId id) {
  for (const NamedId& e : kNames) {
    if (e.id == id) return e.name;
  }
  return "?";
}

IdentityId identity_from_name(const std::string& name) {
  for (const NamedId& e : kNames) {
    if (name == e.name) return e.id;
  }
  throw DomainError("unknown identity '" + name + "'");
}

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = [] {
    std::vector<IdentityId> v;
    for (const NamedId& e : kNames) v.push_back(e.id);
    return v;
  }();
  return ids;
}

double run_identity(const IdentityCase& c) {
  const IdentityId id = c.id;
  switch (id) {
    case IdentityId::EulerProduct: {
      const std::int64_t n = int_param(c, "n");
      need_n(id, n, 1);
      const W a(real_param(c, "a")), x(real_param(c, "x")), phi(real_param(c, "phi"));
      const W phi_n = phi / static_cast<double>(n);
      W prod(1.0);
      for (std::int64_t l = 0; l < n; ++l) {
        const W cs = cos_of<W>(reduce_pi_multiple(phi_n, ratio(2 * l, n)));
        prod *= a * a - a * x * cs * 2.0 + x * x;
      }
      const int ni = static_cast<int>(n);
      const W rhs = pow(a, 2 * ni) - pow(a, ni) * pow(x, ni) * cos_w(phi) * 2.0 + pow(x, 2 * ni);
      const double scale = std::max(1.0, std::pow(std::fabs(a.to_double()) + std::fabs(x.to_double()), 2.0 * n));
      return std::fabs((prod - rhs).to_double()) / scale;
    }
    case IdentityId::CotangentSum:
    case IdentityId::CotangentSquareSum: {
      const std::int64_t n = int_param(c, "n");
      need_n(id, n, 1);
      const W phi(real_param(c, "phi"));
      const bool square = id == IdentityId::CotangentSquareSum;
      Lhs lhs;
      for (std::int64_t l = 0; l < n; ++l) {
        const W t = term(Family::Ctg, phi, ratio(l, n));
        lhs.add(square ? t * t : t);
      }
      const W nphi = phi * static_cast<double>(n);
      const double nd = static_cast<double>(n);
      W rhs;
      if (square) {
        const W cs = term(Family::Csc, nphi, W(0.0));
        rhs = cs * cs * (nd * nd) - nd;
      } else {
        rhs = term(Family::Ctg, nphi, W(0.0)) * nd;
      }
      return residual(lhs, rhs);
    }
    case IdentityId::TangentSquareOdd: {
      const std::int64_t n = int_param(c, "n");
      need_odd(id, n);
      need_n(id, n, 3);
      Lhs lhs;
      for (std::int64_t l = 1; l < n; ++l) {
        const W t = term(Family::Tg, W(0.0), ratio(l, n));
        lhs.add(t * t);
      }
      return residual(lhs, W(static_cast<double>(n * (n - 1))));
    }
    case IdentityId::EisensteinCotSine: {
      const std::int64_t n = int_param(c, "n");
      const std::int64_t k = int_param(c, "k");
      need_n(id, n, 2);
      if (k < 1 || k > n - 1) domain(id, "k = 1, ..., n-1 required");
      Lhs lhs;
      for (std::int64_t l = 1; l < n; ++l) {
        const W s = sin_pi<W>(ratio((2 * l * k) % (2 * n), n));
        lhs.add(term(Family::Ctg, W(0.0), ratio(l, n)) * s);
      }
      return residual(lhs, W(static_cast<double>(n - 2 * k)));
    }
    case IdentityId::SecantCosineSum: {
      const std::int64_t n = int_param(c, "n");
      const std::int64_t k = int_param(c, "k");
      need_n(id, n, 1);
      if (k < 0 || k > 2 * n - 1) domain(id, "k = 0, 1, ..., 2n-1 required");
      Lhs lhs;
      for (std::int64_t l = 0; l < n; ++l) {
        const W cs = cos_pi<W>(ratio(((2 * k + 1) * l) % (4 * n), 2 * n));
        lhs.add(term(Family::Sec, W(0.0), ratio(l, 2 * n)) * cs);
      }
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      return residual(lhs, W(sign * static_cast<double>(n - 2 * ((k + 1) / 2))));
    }
    case IdentityId::DigammaHartley:
      return run_digamma_hartley(int_param(c, "n"), int_param(c, "nu"));
    case IdentityId::DhtRoundTrip: {
      const std::int64_t n = int_param(c, "n");
      need_n(id, n, 1);
      std::mt19937_64 rng(static_cast<std::uint64_t>(int_param(c, "seed")));
      std::uniform_real_distribution<double> u(-1.0, 1.0);
      std::vector<double> h(static_cast<std::size_t>(n));
      for (double& v : h) v = u(rng);
      return run_dht_roundtrip(n, h);
    }
    case IdentityId::AlternatingCsc:
    case IdentityId::AlternatingSec:
      return alternating(c, false);
    case IdentityId::TangentSum: {
      const std::int64_t n = int_param(c, "n");
      need_n(id, n, 1);
      const W phi(real_param(c, "phi"));
      Lhs lhs;
      for (std::int64_t l = 0; l < n; ++l) lhs.add(term(Family::Tg, phi, ratio(l, n)));
      const W rhs = parity_rhs(n, Family::Tg, Family::Ctg, phi * static_cast<double>(n));
      return residual(lhs, n % 2 ? rhs : -rhs);
    }
    case IdentityId::CscStepTwo:
    case IdentityId::SecStepTwo:
      return step_two(c, false);
    case IdentityId::CscSquareSum:
    case IdentityId::SecSquareSum:
    case IdentityId::TangentSquareSum: {
      const std::int64_t n = int_param(c, "n");
      need_n(id, n, 1);
      const W phi(real_param(c, "phi"));
      const Family f = id == IdentityId::CscSquareSum ? Family::Csc
                       : id == IdentityId::SecSquareSum ? Family::Sec
                                                        : Family::Tg;
      Lhs lhs;
      for (std::int64_t l = 0; l < n; ++l) {
        const W t = term(f, phi, ratio(l, n));
        lhs.add(t * t);
      }
      const Family rf = (id == IdentityId::CscSquareSum || n % 2 == 0) ? Family::Csc : Family::Sec;
      const W r = term(rf, phi * static_cast<double>(n), W(0.0));
      const double nd = static_cast<double>(n);
      W rhs = r * r * (nd * nd);
      if (id == IdentityId::TangentSquareSum) rhs -= nd;
      return residual(lhs, rhs);
    }
    case IdentityId::RationalCosFull: {
      const std::int64_t n = int_param(c, "n");
      const double x = real_param(c, "x");
      need_n(id, n, 1);
      need_x_not_one(id, x);
      const Lhs lhs = rational_cos_sum(x, 1.0, 0, n - 1, [&](std::int64_t l) { return ratio(2 * l, n); });
      const W xw(x);
      const W xn = pow(xw, static_cast<int>(n));
      const W x2m1 = xw * xw - 1.0;
      const double nd = static_cast<double>(n);
      const W rhs = n % 2 ? W(nd) * (xn - 1.0) / (x2m1 * (xn + 1.0)) : W(nd) * (xn + 1.0) / (x2m1 * (xn - 1.0));
      return residual(lhs, rhs);
    }
    case IdentityId::RationalCosHalfPlus:
    case IdentityId::RationalCosHalfMinus:
      return rational_cos_half(c, false);
    case IdentityId::RationalCosShifted: {
      const std::int64_t n = int_param(c, "n");
      const double x = real_param(c, "x");
      need_n(id, n, 1);
      need_x_not_one(id, x);
      const Lhs lhs = rational_cos_sum(x, -1.0, 0, n - 1, [&](std::int64_t l) { return ratio(2 * l + 1, 2 * n); });
      const W xw(x);
      const W x2n = pow(xw, static_cast<int>(2 * n));
      const W rhs = W(static_cast<double>(n)) * (x2n - 1.0) / ((xw * xw - 1.0) * (x2n + 1.0));
      return residual(lhs, rhs);
    }
    case IdentityId::RationalCosOddPlus:
    case IdentityId::RationalCosOddMinus: {
      const std::int64_t n = int_param(c, "n");
      const double x = real_param(c, "x");
      need_n(id, n, 1);
      need_x_not_one(id, x);
      const double s = id == IdentityId::RationalCosOddPlus ? 1.0 : -1.0;
      if (x == -s) domain(id, "x != -1 for the '+' form");
      const Lhs lhs = rational_cos_sum(x, s, 1, n, [&](std::int64_t l) { return ratio(2 * l, 2 * n + 1); });
      const W xw(x);
      const W xo = pow(xw, static_cast<int>(2 * n + 1));
      const W x2m1 = xw * xw - 1.0;
      const W rhs = (W(static_cast<double>(n)) * (xo - s) + xo) / (x2m1 * (xo + s)) - xw / (x2m1 * (xw + s));
      return residual(lhs, rhs);
    }
    case IdentityId::RationalCotangent: {
      const std::int64_t n = int_param(c, "n");
      need_n(id, n, 1);
      const double x = real_param(c, "x");
      const W xw(x), phi(real_param(c, "phi"));
      Lhs lhs;
      for (std::int64_t l = 0; l < n; ++l) lhs.add(W(1.0) / (xw + term(Family::Ctg, phi, ratio(l, n))));
      const W ct = term(Family::Ctg, phi * static_cast<double>(n), W(0.0));
      const Cw p{W(1.0), xw}, m{W(-1.0), xw};
      const Cw num = Cw{-ct, W(1.0)} * cpow(p, n - 1) + Cw{ct, W(1.0)} * cpow(m, n - 1);
      const Cw den = Cw{W(1.0), ct} * cpow(p, n) + Cw{W(1.0), -ct} * cpow(m, n);
      const Cw q = cdiv(num, den);
      const double imag = std::fabs(q.im.to_double()) * static_cast<double>(n);
      return residual(lhs, q.re * static_cast<double>(n)) + imag / std::max(1.0, lhs.mass);
    }
    case IdentityId::RationalCscSquare:
      return rational_csc_square(c, false);
    case IdentityId::LogDerivative:
      return log_derivative_spotcheck(int_param(c, "n"), real_param(c, "x"));
  }
  domain(id, "unknown identity");
}

double run_uncorrected_form(const IdentityCase& c) {
  switch (c.id) {
    case IdentityId::RationalCosHalfPlus:
    case IdentityId::RationalCosHalfMinus:
      return rational_cos_half(c, true);
    case IdentityId::RationalCscSquare:
      return rational_csc_square(c, true);
    case IdentityId::AlternatingSec:
      return alternating(c, true);
    case IdentityId::SecStepTwo:
      return step_two(c, true);
    default:
      domain(c.id, "no uncorrected form recorded");
  }
}

IdentityCase random_case(IdentityId id, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  auto uni_int = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  // n*phi/pi has fractional part in (0.05, 0.45) or (0.55, 0.95): every csc, sec, tg, ctg
  // argument on the pi/n and 2pi/n lattices stays off its poles.
  auto lattice_phi = [&](std::int64_t n) {
    double frac = 0.05 + 0.4 * u01(rng);
    if (u01(rng) < 0.5) frac += 0.5;
    const double m = static_cast<double>(uni_int(0, n - 1));
    return M_PI * (m + frac) / static_cast<double>(n);
  };
  // x in (0.1, 3) at least 0.05 from 1, or within 1e-3 of 1 for one draw in eight
  bool near_one = false;
  auto rational_x = [&]() {
    if (u01(rng) < 0.125) {
      near_one = true;
      const double d = 1e-6 + 1e-3 * u01(rng);
      return u01(rng) < 0.5 ? 1.0 + d : 1.0 - d;
    }
    double x;
    do {
      x = 0.1 + 2.9 * u01(rng);
    } while (std::fabs(x - 1.0) < 0.05);
    return x;
  };
  IdentityCase c;
  c.id = id;
  auto& p = c.params;
  switch (id) {
    case IdentityId::EulerProduct: {
      p["n"] = static_cast<double>(uni_int(1, 24));
      p["a"] = 0.2 + 1.3 * u01(rng);
      p["x"] = 0.2 + 1.3 * u01(rng);
      p["phi"] = -M_PI + 2.0 * M_PI * u01(rng);
      break;
    }
    case IdentityId::TangentSquareOdd:
      p["n"] = static_cast<double>(2 * uni_int(1, 50) + 1);
      break;
    case IdentityId::EisensteinCotSine: {
      const std::int64_t n = uni_int(2, 64);
      p["n"] = static_cast<double>(n);
      p["k"] = static_cast<double>(uni_int(1, n - 1));
      break;
    }
    case IdentityId::SecantCosineSum: {
      const std::int64_t n = uni_int(1, 64);
      p["n"] = static_cast<double>(n);
      p["k"] = static_cast<double>(uni_int(0, 2 * n - 1));
      break;
    }
    case IdentityId::DigammaHartley: {
      const std::int64_t n = uni_int(1, 48);
      p["n"] = static_cast<double>(n);
      p["nu"] = static_cast<double>(uni_int(1, n));
      break;
    }
    case IdentityId::DhtRoundTrip:
      p["n"] = static_cast<double>(uni_int(1, 128));
      p["seed"] = static_cast<double>(uni_int(0, 1 << 30));
      break;
    case IdentityId::AlternatingCsc:
    case IdentityId::AlternatingSec: {
      const std::int64_t n = 2 * uni_int(0, 20) + 1;
      p["n"] = static_cast<double>(n);
      p["phi"] = lattice_phi(n);
      break;
    }
    case IdentityId::CotangentSum:
    case IdentityId::CotangentSquareSum:
    case IdentityId::TangentSum:
    case IdentityId::CscStepTwo:
    case IdentityId::SecStepTwo:
    case IdentityId::CscSquareSum:
    case IdentityId::SecSquareSum:
    case IdentityId::TangentSquareSum: {
      const std::int64_t n = uni_int(1, 40);
      p["n"] = static_cast<double>(n);
      p["phi"] = lattice_phi(n);
      break;
    }
    case IdentityId::RationalCosFull:
    case IdentityId::RationalCosHalfPlus:
    case IdentityId::RationalCosHalfMinus:
    case IdentityId::RationalCosShifted:
    case IdentityId::RationalCosOddPlus:
    case IdentityId::RationalCosOddMinus:
    case IdentityId::LogDerivative:
      p["n"] = static_cast<double>(uni_int(1, 24));
      p["x"] = rational_x();
      break;
    case IdentityId::RationalCscSquare: {
      const std::int64_t n = uni_int(1, 16);
      p["n"] = static_cast<double>(n);
      p["x"] = rational_x();
      p["phi"] = lattice_phi(n);
      break;
    }
    case IdentityId::RationalCotangent: {
      const std::int64_t n = uni_int(1, 16);
      p["n"] = static_cast<double>(n);
      const double phi = lattice_phi(n);
      p["phi"] = phi;
      // keep x + ctg(phi + pi l/n) away from zero
      double x;
      bool ok;
      do {
        x = -3.0 + 6.0 * u01(rng);
        ok = true;
        for (std::int64_t l = 0; l < n && ok; ++l) {
          const double ct = 1.0 / std::tan(phi + M_PI * static_cast<double>(l) / static_cast<double>(n));
          ok = std::fabs(x + ct) > 0.05;
        }
      } while (!ok);
      p["x"] = x;
      break;
    }
  }
  c.residual_tol = id == IdentityId::DhtRoundTrip ? 1e-12 : (near_one ? 1e-14 : 1e-20);
  return c;
}

DoubleWide digamma_hartley_value(std::int64_t n, std::int64_t nu) {
  if (n < 1) throw DomainError("digamma-hartley: n >= 1 required");
  if (nu < 1 || nu > n) throw DomainError("digamma-hartley: 1 <= nu <= n required");
  const W nd(static_cast<double>(n));
  if (nu == n) return -(nd * log(nd)) - nd * dw::euler_gamma;
  return nd * (dw::ln2 - dw::half_pi) + nd * log(sin_pi<W>(ratio(nu, n))) + dw::pi * static_cast<double>(nu);
}

double run_digamma_hartley(std::int64_t n, std::int64_t nu) {
  const W rhs = digamma_hartley_value(n, nu);
  Lhs lhs;
  for (std::int64_t l = 1; l <= n; ++l) {
    const W t = ratio((2 * l * nu) % (2 * n), n);
    const W cas = sin_pi<W>(t) + cos_pi<W>(t);
    lhs.add(digamma<W>(ratio(l, n)) * cas);
  }
  return residual(lhs, rhs);
}

std::vector<double> dht(std::span<const double> signal) {
  const auto n = static_cast<std::int64_t>(signal.size());
  std::vector<double> cas(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) {
    const double ang = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n);
    cas[static_cast<std::size_t>(k)] = std::sin(ang) + std::cos(ang);
  }
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<double> out(static_cast<std::size_t>(n));
  for (std::int64_t nu = 1; nu <= n; ++nu) {
    double acc = 0.0;
    for (std::int64_t l = 1; l <= n; ++l) acc += signal[static_cast<std::size_t>(l - 1)] * cas[static_cast<std::size_t>((l * nu) % n)];
    out[static_cast<std::size_t>(nu - 1)] = acc * norm;
  }
  return out;
}

double run_dht_roundtrip(std::int64_t n, std::span<const double> signal) {
  if (n < 1) throw DomainError("dht-roundtrip: n >= 1 required");
  if (static_cast<std::int64_t>(signal.size()) != n) throw DomainError("dht-roundtrip: signal length must equal n");
  const std::vector<double> back = dht(dht(signal));
  double err = 0.0;
  for (std::size_t i = 0; i < back.size(); ++i) err = std::max(err, std::fabs(back[i] - signal[i]));
  return err;
}

double log_derivative_spotcheck(std::int64_t n, double x) {
  const IdentityId id = IdentityId::LogDerivative;
  need_n(id, n, 1);
  if (!(x > 0.0)) domain(id, "x > 0 required");
  need_x_not_one(id, x);
  const W xw(x);
  const W lead = xw - W(1.0) / xw;
  const W base = W(1.0) + xw * xw;
  Lhs lhs;
  for (std::int64_t l = 0; l < n; ++l) lhs.add(lead / (base - xw * cos_pi<W>(ratio(2 * l, n)) * 2.0));
  const W xn = pow(xw, static_cast<int>(n));
  return residual(lhs, W(static_cast<double>(n)) * (xn + 1.0) / (xw * (xn - 1.0)));
}

}  // namespace trigsum
