#pragma once

#include <cstdint>
#include <functional>

#include "trigsum/double_wide.hpp"
#include "trigsum/sums.hpp"

namespace trigsum {

struct QuadratureConfig {
  double abs_tol = 1e-26;
  int max_levels = 12;
  double truncation_ratio = 1e-34;  // integrand cutoff relative to its peak

  void validate() const;
};

struct SeriesAccel {
  enum class Scheme { EulerTransform, Direct };
  Scheme scheme = Scheme::EulerTransform;
  std::int64_t max_terms = 400;
  double target_tol = 1e-26;

  void validate() const;
};

/// S_n(phi,1) through half-angle cotangents. phi = 0 uses the limit form.
EvalResult eval_cotangent_form(std::int64_t n, double phi, Precision precision = Precision::Native);

/// Four-digamma finite series; Csc or Sec.
EvalResult eval_digamma_finite(const SumSpec& spec, Precision precision = Precision::Native);

/// Alternating digamma series, Csc or Sec, inside the convergence strip.
EvalResult eval_digamma_infinite(const SumSpec& spec, const SeriesAccel& accel = {},
                                 Precision precision = Precision::Native);

/// S_n(phi,1) from digammas, cotangents and logarithms. phi = 0 has its own form.
EvalResult eval_mixed_form(std::int64_t n, double phi, Precision precision = Precision::Native);

/// Csc or Sec via the hyperbolic integral, inside the convergence strip.
EvalResult eval_integral_form(const SumSpec& spec, const QuadratureConfig& cfg = {},
                              Precision precision = Precision::Native);

/// True when (phi, a) lies in the strip where the integral and the infinite series converge.
bool in_convergence_strip(const SumSpec& spec);

/// Integrand of the integral form at x > 0 (without the 2n/pi factor).
double integral_integrand(const SumSpec& spec, double x);

/// Digamma-side identities tying finite digamma sums to S_n.
enum class DigammaSumId {
  HalfGridSum,         // sum_{l=1}^{n} Psi(l/2n)
  OddGridWeightedSum,  // sum_{l<n} (2l+1)/2n Psi((2l+1)/2n)
  ShiftedTangentSum,   // sum_{l<n} Psi(l/2n+z)+Psi(l/2n-z), tangent side
  ShiftedCosecantSum,  // same with l up to n, cosecant side
  CosecantFromDigamma  // S_n from the odd-grid weighted sum
};

double digamma_summation_check(DigammaSumId id, std::int64_t n, double z = 0.0);

/// |S_n + (1/n) sum_{k<n} (2k+1) ctg(pi(2k+1)/2n)| in wide precision.
double odd_cotangent_check(std::int64_t n);

/// sum_{k>=0} (-1)^k a_k for completely monotone a_k. term(k, err) returns a_k and adds its error to err.
DoubleWide alternating_series(const std::function<DoubleWide(std::int64_t, double&)>& term,
                              const SeriesAccel& accel = {}, double* err = nullptr);

/// Psi(nk+n) - Psi(nk), the general term of the phi=0, a=1 alternating series.
DoubleWide harmonic_series_term(std::int64_t n, std::int64_t k);

}  // namespace trigsum
