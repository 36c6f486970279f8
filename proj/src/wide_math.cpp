#include "trigsum/wide_math.hpp"

#include <array>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

namespace trigsum {
namespace {

constexpr int kInvFact = 36;

// 1/k! as DoubleWide, built once.
const std::array<DoubleWide, kInvFact>& inv_factorials() {
  static const auto table = [] {
    std::array<DoubleWide, kInvFact> t{};
    DoubleWide f = 1.0;
    t[0] = 1.0;
    for (int k = 1; k < kInvFact; ++k) {
      f *= static_cast<double>(k);
      t[k] = DoubleWide(1.0) / f;
    }
    return t;
  }();
  return table;
}

DoubleWide nan_wide() {
  return DoubleWide(std::numeric_limits<double>::quiet_NaN());
}

// expm1 of |r| <= ~0.35 via halving and s -> s(s+2).
DoubleWide expm1_reduced(const DoubleWide& x) {
  constexpr int kHalvings = 9;
  const DoubleWide r = ldexp(x, -kHalvings);
  const auto& f = inv_factorials();
  DoubleWide s = r * f[10];
  for (int k = 9; k >= 1; --k) s = (s + f[k]) * r;
  for (int i = 0; i < kHalvings; ++i) s = s * (s + 2.0);
  return s;
}

}  // namespace

DoubleWide sqrt(const DoubleWide& x) {
  if (x.hi() <= 0.0) {
    if (x.hi() == 0.0) return DoubleWide(0.0);
    return nan_wide();
  }
  const double y = std::sqrt(x.hi());
  DoubleWide sq = DoubleWide::product(y, y);
  const DoubleWide diff = x - sq;
  return DoubleWide::from_sum(y, diff.hi() / (2.0 * y));
}

DoubleWide exp(const DoubleWide& x) {
  if (x.hi() > 709.78) return DoubleWide(std::numeric_limits<double>::infinity());
  if (x.hi() < -745.2) return DoubleWide(0.0);
  if (x.hi() == 0.0) return DoubleWide(1.0);
  const double k = std::nearbyint(x.hi() / dw::ln2.hi());
  DoubleWide r = x - DoubleWide::product(k, dw::ln2.hi());
  r -= DoubleWide::product(k, dw::ln2.lo());
  r -= k * dw::ln2_3;
  const DoubleWide e = expm1_reduced(r) + 1.0;
  return ldexp(e, static_cast<int>(k));
}

DoubleWide expm1(const DoubleWide& x) {
  if (std::fabs(x.hi()) < 0.35) return expm1_reduced(x);
  return exp(x) - 1.0;
}

DoubleWide log(const DoubleWide& x) {
  if (x.hi() < 0.0) return nan_wide();
  if (x.hi() == 0.0) return DoubleWide(-std::numeric_limits<double>::infinity());
  if (!std::isfinite(x.hi())) return x;
  DoubleWide y = std::log(x.hi());
  y = y + x * exp(-y) - 1.0;
  return y;
}

DoubleWide log1p(const DoubleWide& x) {
  if (std::fabs(x.hi()) > 0.25) return log(x + 1.0);
  DoubleWide y = std::log1p(x.hi());
  const DoubleWide em = expm1(y);
  y -= (em - x) / (em + 1.0);
  return y;
}

DoubleWide sin_kernel(const DoubleWide& r) {
  // Taylor series, |r| <= pi/4.
  const auto& f = inv_factorials();
  const DoubleWide r2 = r * r;
  DoubleWide s = f[33];
  for (int j = 15; j >= 0; --j) {
    s *= r2;
    s = (j % 2 == 0) ? s + f[2 * j + 1] : s - f[2 * j + 1];
  }
  return s * r;
}

DoubleWide cos_kernel(const DoubleWide& r) {
  const auto& f = inv_factorials();
  const DoubleWide r2 = r * r;
  DoubleWide s = -f[34];
  for (int j = 16; j >= 0; --j) {
    s *= r2;
    s = (j % 2 == 0) ? s + f[2 * j] : s - f[2 * j];
  }
  return s;
}

Reduced reduce_half_pi(const DoubleWide& x) {
  Reduced out;
  const double k = std::nearbyint(x.hi() / dw::half_pi.hi());
  DoubleWide r = x - DoubleWide::product(k, dw::half_pi.hi());
  r -= DoubleWide::product(k, dw::half_pi.lo());
  r -= k * dw::half_pi_3;
  long long q = static_cast<long long>(std::fmod(k, 4.0));
  if (q < 0) q += 4;
  out.quadrant = static_cast<int>(q);
  out.r = r;
  return out;
}

Reduced reduce_pi_multiple(const DoubleWide& phi, const DoubleWide& t) {
  const DoubleWide m = nearbyint(ldexp(t, -1));
  const DoubleWide tr = t - ldexp(m, 1);
  if (phi.hi() == 0.0) {
    // Reduce exactly in units of 1/2 so that poles land on r = 0.
    const DoubleWide q = nearbyint(ldexp(tr, 1));
    const DoubleWide u = tr - ldexp(q, -1);
    Reduced out;
    long long qi = static_cast<long long>(q.hi()) % 4;
    if (qi < 0) qi += 4;
    out.quadrant = static_cast<int>(qi);
    out.r = u * dw::pi;
    return out;
  }
  return reduce_half_pi(phi + tr * dw::pi);
}

DoubleWide sin(const DoubleWide& x) { return sin_of<DoubleWide>(reduce_half_pi(x)); }
DoubleWide cos(const DoubleWide& x) { return cos_of<DoubleWide>(reduce_half_pi(x)); }
DoubleWide tan(const DoubleWide& x) {
  const Reduced red = reduce_half_pi(x);
  return sin_of<DoubleWide>(red) / cos_of<DoubleWide>(red);
}

DoubleWide sinh(const DoubleWide& x) {
  if (std::fabs(x.hi()) < 0.35) {
    const DoubleWide e = expm1_reduced(x);
    // sinh = (e^x - e^-x)/2 = e (e + 2) / (2 (e + 1))
    return e * (e + 2.0) / ((e + 1.0) * 2.0);
  }
  const DoubleWide e = exp(x);
  return (e - 1.0 / e) * 0.5;
}

DoubleWide cosh(const DoubleWide& x) {
  const DoubleWide e = exp(x);
  return (e + 1.0 / e) * 0.5;
}

DoubleWide pow(DoubleWide x, int e) {
  if (e < 0) return 1.0 / pow(x, -e);
  DoubleWide r = 1.0;
  while (e > 0) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

std::string to_string(const DoubleWide& x, int digits) {
  if (std::isnan(x.hi())) return "nan";
  if (std::isinf(x.hi())) return x.hi() > 0 ? "inf" : "-inf";
  if (x.hi() == 0.0) return "0";
  std::string out;
  DoubleWide y = abs(x);
  if (x.hi() < 0) out.push_back('-');
  int e = static_cast<int>(std::floor(std::log10(y.hi())));
  y = y / pow(DoubleWide(10.0), e);
  while (y.hi() >= 10.0) {
    y /= 10.0;
    ++e;
  }
  while (y.hi() < 1.0) {
    y *= 10.0;
    --e;
  }
  std::string d;
  for (int i = 0; i <= digits; ++i) {
    int di = static_cast<int>(std::floor(y.hi()));
    if (di > 9) di = 9;
    if (di < 0) di = 0;
    d.push_back(static_cast<char>('0' + di));
    y = (y - static_cast<double>(di)) * 10.0;
  }
  // Round on the extra digit.
  bool carry = d.back() >= '5';
  d.pop_back();
  for (int i = static_cast<int>(d.size()) - 1; carry && i >= 0; --i) {
    if (d[i] == '9') {
      d[i] = '0';
    } else {
      ++d[i];
      carry = false;
    }
  }
  if (carry) {
    d.insert(d.begin(), '1');
    d.pop_back();
    ++e;
  }
  while (d.size() > 1 && d.back() == '0') d.pop_back();
  out.push_back(d[0]);
  if (d.size() > 1) {
    out.push_back('.');
    out.append(d.begin() + 1, d.end());
  }
  if (e != 0) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "e%+d", e);
    out += buf;
  }
  return out;
}

DoubleWide parse_wide(const std::string& s) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
  DoubleWide v = 0.0;
  int scale = 0;
  bool any = false, dot = false;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (c >= '0' && c <= '9') {
      v = v * 10.0 + static_cast<double>(c - '0');
      if (dot) --scale;
      any = true;
    } else if (c == '.' && !dot) {
      dot = true;
    } else {
      break;
    }
  }
  if (!any) throw std::invalid_argument("not a number: " + s);
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    std::size_t used = 0;
    scale += std::stoi(s.substr(i + 1), &used);
    i += 1 + used;
  }
  if (i != s.size()) throw std::invalid_argument("trailing characters: " + s);
  if (scale > 0) v *= pow(DoubleWide(10.0), scale);
  if (scale < 0) v /= pow(DoubleWide(10.0), -scale);
  return neg ? -v : v;
}

}  // namespace trigsum
