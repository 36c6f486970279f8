#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "trigsum/double_wide.hpp"

namespace trigsum {

enum class IdentityId {
  EulerProduct,
  CotangentSum,
  CotangentSquareSum,
  TangentSquareOdd,
  EisensteinCotSine,
  SecantCosineSum,
  DigammaHartley,
  DhtRoundTrip,
  AlternatingCsc,
  AlternatingSec,
  TangentSum,
  CscStepTwo,
  SecStepTwo,
  CscSquareSum,
  SecSquareSum,
  TangentSquareSum,
  RationalCosFull,
  RationalCosHalfPlus,
  RationalCosHalfMinus,
  RationalCosShifted,
  RationalCosOddPlus,
  RationalCosOddMinus,
  RationalCotangent,
  RationalCscSquare,
  LogDerivative
};

const char* identity_name(IdentityId id);
/// Throws DomainError for an unknown name.
IdentityId identity_from_name(const std::string& name);
const std::vector<IdentityId>& all_identities();

struct IdentityCase {
  IdentityId id = IdentityId::CotangentSum;
  /// Integer parameters (n, k, nu, seed) are stored as exact doubles.
  std::map<std::string, double> params;
  double residual_tol = 1e-20;
};

/// |LHS - RHS| / max(1, sum of |LHS terms|), wide precision.
/// Throws DomainError naming the violated clause.
double run_identity(const IdentityCase& c);

/// The uncorrected variants of RationalCosHalfPlus/Minus (table numerator x^{2n} - 1),
/// RationalCscSquare (second (x+1)^{2n-1}), AlternatingSec and SecStepTwo (no (-1)^{(n-1)/2}).
/// Other ids throw DomainError.
double run_uncorrected_form(const IdentityCase& c);

/// A case inside the identity's domain, away from poles by a fixed margin.
/// Near-x=1 draws get residual_tol 1e-14, DHT round trips (native) 1e-12.
IdentityCase random_case(IdentityId id, std::mt19937_64& rng);

/// sum_{l=1}^{n} Psi(l/n) cas(2 pi l nu / n) against its closed form, 1 <= nu <= n.
double run_digamma_hartley(std::int64_t n, std::int64_t nu);
/// Closed form of the digamma-Hartley sum.
DoubleWide digamma_hartley_value(std::int64_t n, std::int64_t nu);

/// H(nu) = n^{-1/2} sum_{l=1}^{n} h(l) cas(2 pi l nu / n), nu = 1..n; h(l) = signal[l-1].
std::vector<double> dht(std::span<const double> signal);
/// max |DHT^{-1}[DHT[h]] - h|. Throws DomainError when signal.size() != n.
double run_dht_roundtrip(std::int64_t n, std::span<const double> signal);

/// sum_{l=0}^{n-1} (x - 1/x)/(1 - 2x cos(2 pi l/n) + x^2) against n(x^n + 1)/(x(x^n - 1)).
double log_derivative_spotcheck(std::int64_t n, double x);

}  // namespace trigsum
