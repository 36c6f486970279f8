#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "trigsum/double_wide.hpp"

namespace trigsum {

enum class BoundFlavor {
  HarmonicEnvelope,
  LogEnvelope,
  CosecantStrip,
  CosecantUnitStep,
  SecantStrip,
  SecantUnitStep,
  AdditiveConstant,
  SharpConstant,
  QuadraticCorrection,
  InverseLinear
};

const char* bound_flavor_name(BoundFlavor f);

/// Absolute bounds on the sum. A missing side is +-infinity.
struct BoundPair {
  DoubleWide lower;
  DoubleWide upper;
  DoubleWide center;
  BoundFlavor flavor = BoundFlavor::HarmonicEnvelope;
  bool valid = true;
  std::map<std::string, double> constants;
  /// Rounding level of lower/upper.
  double rounding = 0.0;

  bool has_lower() const;
  bool has_upper() const;
  /// lower + margin <= x <= upper - margin on the finite sides.
  bool contains(const DoubleWide& x, double margin = 0.0) const;
};

/// Only HarmonicEnvelope and LogEnvelope are accepted.
BoundPair bounds_Sn(std::int64_t n, BoundFlavor flavor);

/// 0 < phi < pi, 1 - phi/pi < a < 2 - phi/pi.
BoundPair bounds_Sn_phi_a(std::int64_t n, double phi, double a);

/// 0 < phi < pi, phi not on the pi/n lattice.
BoundPair bounds_Sn_phi1(std::int64_t n, double phi);

/// -pi/2 < phi < pi/2, 1/2 - phi/pi < a < 3/2 - phi/pi.
BoundPair bounds_Cn(std::int64_t n, double phi, double a);

/// -pi/2 < phi < pi/2, phi + pi/2 not on the pi/n lattice.
BoundPair bounds_Cn_phi1(std::int64_t n, double phi);

/// AdditiveConstant, SharpConstant, QuadraticCorrection, InverseLinear, in that order.
std::vector<BoundPair> historical_bounds(std::int64_t n);

}  // namespace trigsum
