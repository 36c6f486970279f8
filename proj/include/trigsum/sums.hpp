#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trigsum/double_wide.hpp"
#include "trigsum/errors.hpp"

namespace trigsum {

enum class Family { Csc, Sec, Tg, Ctg };

const char* family_name(Family f);

struct SumSpec {
  Family family = Family::Csc;
  std::int64_t n = 2;
  double phi = 0.0;
  double a = 1.0;
  bool principal_value = false;

  /// n >= 2, a > 0, finite phi. Pole checks happen during evaluation.
  void validate() const;
};

enum class Method { Direct, CotangentId, DigammaFinite, DigammaInfinite, Integral, Mixed, Asymptotic };

struct EvalResult {
  DoubleWide value;
  Method method = Method::Direct;
  int order = 0;  // truncation order N for Asymptotic
  double err_estimate = 0.0;
  std::vector<std::int64_t> skipped_terms;
  Precision precision = Precision::Native;
  bool below_n0 = false;
  bool unreliable = false;

  std::string method_name() const;
};

inline constexpr double kPoleHardGap = 1e-12;
inline constexpr double kPoleValueGap = 1e-10;
inline constexpr double kPoleValueMagnitude = 1e14;

struct RawSum {
  DoubleWide value;
  double max_abs_term = 0.0;
  double conditioning = 0.0;  // sum of (1 + f^2) * |argument|
  std::vector<std::int64_t> skipped;
};

/// sum_{l=l0}^{l1} f(phi + pi*(shift + a*l/n)) for the family's function f.
/// Any sign of a and any n >= 1 is accepted; poles raise PoleError unless pv.
template <class T>
RawSum family_sum(Family f, std::int64_t n, const DoubleWide& phi, const DoubleWide& shift,
                  const DoubleWide& a, std::int64_t l0, std::int64_t l1, bool pv);

/// One term f(phi + pi*shift), T precision; PoleError within kPoleHardGap.
template <class T>
T family_term(Family f, const DoubleWide& phi, const DoubleWide& shift);

/// Wide S_n(phi + pi*shift, a) for any n >= 1 (S_1 = 0).
DoubleWide wide_csc_sum(std::int64_t n, const DoubleWide& phi, const DoubleWide& shift,
                        const DoubleWide& a);

EvalResult eval_direct(const SumSpec& spec, Precision precision = Precision::Native);

enum class FunctionalId {
  AntiPeriodicity,
  Periodicity,
  APeriodicity,
  Parity,
  EvenPhiA1,
  Doubling,
  Multiplication,
  MultiplicationCommuted,
  RecurrenceN,
  RecurrencePhi
};

enum class SpecialValueId { S1Zero, S2Closed, A2kn, A2Plus2kn };

struct IdentityParams {
  std::int64_t n = 2;
  double phi = 0.0;
  double a = 1.0;
  std::int64_t k = 1;
};

/// |LHS - RHS| in wide precision. noise, if given, receives the rounding level
/// of both sides including argument conditioning.
double check_functional_identity(FunctionalId id, const IdentityParams& p, double* noise = nullptr);
double check_special_value(SpecialValueId id, const IdentityParams& p, double* noise = nullptr);

}  // namespace trigsum
