#include "trigsum/bounds.hpp"

#include <cmath>
#include <limits>

#include "trigsum/asymptotics.hpp"
#include "trigsum/errors.hpp"
#include "trigsum/wide_math.hpp"

namespace trigsum {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kWideUnit = 1e-31;

DoubleWide log_center(std::int64_t n) {
  const DoubleWide two_n_pi = DoubleWide(2.0 * static_cast<double>(n)) / dw::pi;
  return two_n_pi * (log(two_n_pi) + dw::euler_gamma);
}

/// The sum lies between center + A/n and center + A/n - B/n^3.
/// upper_is_a says which of the two is the upper bound.
BoundPair envelope(const AsymptoticSeries& s, BoundFlavor flavor, bool upper_is_a) {
  const double nd = static_cast<double>(s.spec.n);
  BoundPair p;
  p.flavor = flavor;
  p.center = s.leading_sum();
  const DoubleWide a_coef = s.tail_coeffs.at(0);
  const DoubleWide b_coef = -s.tail_coeffs.at(1);
  const DoubleWide first = p.center + a_coef / nd;
  const DoubleWide second = first - b_coef / (nd * nd * nd);
  p.upper = upper_is_a ? first : second;
  p.lower = upper_is_a ? second : first;
  p.constants["A"] = a_coef.to_double();
  p.constants["B"] = b_coef.to_double();
  p.rounding = s.rounding;
  p.valid = !s.unreliable;
  return p;
}

}  // namespace

const char* bound_flavor_name(BoundFlavor f) {
  switch (f) {
    case BoundFlavor::HarmonicEnvelope: return "harmonic-envelope";
    case BoundFlavor::LogEnvelope: return "log-envelope";
    case BoundFlavor::CosecantStrip: return "cosecant-strip";
    case BoundFlavor::CosecantUnitStep: return "cosecant-unit-step";
    case BoundFlavor::SecantStrip: return "secant-strip";
    case BoundFlavor::SecantUnitStep: return "secant-unit-step";
    case BoundFlavor::AdditiveConstant: return "additive-constant";
    case BoundFlavor::SharpConstant: return "sharp-constant";
    case BoundFlavor::QuadraticCorrection: return "quadratic-correction";
    case BoundFlavor::InverseLinear: return "inverse-linear";
  }
  return "?";
}

bool BoundPair::has_lower() const { return std::isfinite(lower.hi()); }
bool BoundPair::has_upper() const { return std::isfinite(upper.hi()); }

bool BoundPair::contains(const DoubleWide& x, double margin) const {
  if (has_lower() && !(x - lower >= DoubleWide(margin))) return false;
  if (has_upper() && !(upper - x >= DoubleWide(margin))) return false;
  return true;
}

BoundPair bounds_Sn(std::int64_t n, BoundFlavor flavor) {
  if (n < 2) throw DomainError("n >= 2 required");
  const double nd = static_cast<double>(n);
  BoundPair p;
  p.flavor = flavor;
  DoubleWide a_coef, b_coef;
  const DoubleWide pi3 = dw::pi * dw::pi * dw::pi;
  const DoubleWide c_coef = dw::pi / 36.0;
  const DoubleWide d_coef = pi3 * 7.0 / 21600.0;
  if (flavor == BoundFlavor::HarmonicEnvelope) {
    const AsymptoticSeries s = asympt_Sn(n, 2, SnFlavor::Harmonic);
    p.center = s.leading_sum();
    p.rounding = s.rounding;
    a_coef = c_coef - dw::inv_pi / 6.0;
    b_coef = d_coef - dw::inv_pi / 60.0;
    p.constants["A"] = a_coef.to_double();
    p.constants["B"] = b_coef.to_double();
  } else if (flavor == BoundFlavor::LogEnvelope) {
    p.center = log_center(n);
    p.rounding = std::fabs(p.center.to_double()) * kWideUnit;
    a_coef = c_coef;
    b_coef = d_coef;
    p.constants["C"] = a_coef.to_double();
    p.constants["D"] = b_coef.to_double();
  } else {
    throw DomainError("bounds_Sn takes HarmonicEnvelope or LogEnvelope");
  }
  p.lower = p.center - a_coef / nd;
  p.upper = p.lower + b_coef / (nd * nd * nd);
  return p;
}

BoundPair bounds_Sn_phi_a(std::int64_t n, double phi, double a) {
  const AsymptoticSeries s = asympt_Sn_phi_a(n, phi, a, 3);
  const DoubleWide side = DoubleWide(phi) * 2.0 / dw::pi + DoubleWide(a) - 2.0;
  return envelope(s, BoundFlavor::CosecantStrip, side.hi() < 0.0);
}

BoundPair bounds_Sn_phi1(std::int64_t n, double phi) {
  const AsymptoticSeries s = asympt_Sn_phi1(n, phi, 3);
  const DoubleWide side = DoubleWide(phi) - dw::half_pi;
  return envelope(s, BoundFlavor::CosecantUnitStep, side.hi() < 0.0);
}

BoundPair bounds_Cn(std::int64_t n, double phi, double a) {
  const AsymptoticSeries s = asympt_Cn(n, phi, a, 3);
  const DoubleWide side = DoubleWide(phi) * 2.0 / dw::pi + DoubleWide(a) - 1.0;
  return envelope(s, BoundFlavor::SecantStrip, side.hi() < 0.0);
}

BoundPair bounds_Cn_phi1(std::int64_t n, double phi) {
  const AsymptoticSeries s = asympt_Cn_phi1(n, phi, 3);
  return envelope(s, BoundFlavor::SecantUnitStep, phi < 0.0);
}

std::vector<BoundPair> historical_bounds(std::int64_t n) {
  if (n < 2) throw DomainError("n >= 2 required");
  const double nd = static_cast<double>(n);
  const DoubleWide center = log_center(n);
  const double rounding = std::fabs(center.to_double()) * kWideUnit;
  std::vector<BoundPair> out;

  BoundPair cp;
  cp.flavor = BoundFlavor::AdditiveConstant;
  cp.center = center;
  const DoubleWide additive = DoubleWide(1.0) - dw::inv_pi;
  cp.lower = -kInf;
  cp.upper = center + additive;
  cp.constants["additive"] = additive.to_double();
  cp.rounding = rounding;
  out.push_back(cp);

  BoundPair ak;
  ak.flavor = BoundFlavor::SharpConstant;
  ak.center = center;
  const DoubleWide alpha = DoubleWide(1.0) - (dw::euler_gamma + dw::ln2 * 2.0 - log(dw::pi)) * 4.0 / dw::pi;
  ak.lower = center + alpha;
  ak.upper = center;
  ak.constants["alpha"] = alpha.to_double();
  ak.constants["beta"] = 0.0;
  ak.rounding = rounding;
  out.push_back(ak);

  BoundPair pm;
  pm.flavor = BoundFlavor::QuadraticCorrection;
  const DoubleWide two_n_pi = DoubleWide(2.0 * nd) / dw::pi;
  pm.center = two_n_pi * (log(DoubleWide(4.0 * nd) / dw::pi) + dw::pi * dw::pi / (12.0 * nd * nd));
  pm.lower = -kInf;
  pm.upper = pm.center;
  pm.constants["pi2_over_12"] = (dw::pi * dw::pi / 12.0).to_double();
  pm.rounding = std::fabs(pm.center.to_double()) * kWideUnit;
  out.push_back(pm);

  BoundPair tg;
  tg.flavor = BoundFlavor::InverseLinear;
  tg.center = center;
  const DoubleWide lo_coef = DoubleWide(-0.358) / dw::pi;
  const DoubleWide hi_coef = DoubleWide(-0.186) / dw::pi;
  tg.lower = center + lo_coef / nd;
  tg.upper = center + hi_coef / nd;
  tg.constants["lower_coeff"] = lo_coef.to_double();
  tg.constants["upper_coeff"] = hi_coef.to_double();
  tg.rounding = rounding;
  out.push_back(tg);
  return out;
}

}  // namespace trigsum
