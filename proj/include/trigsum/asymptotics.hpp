#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trigsum/double_wide.hpp"
#include "trigsum/numerics.hpp"
#include "trigsum/sums.hpp"

namespace trigsum {

enum class DerivKind { Csc, Sec };

/// d^order/dα^order of csc (or sec) as sum c_ij u^i v^j, (u,v) = (csc,ctg) or (sec,tg).
struct TrigDerivPoly {
  DerivKind kind = DerivKind::Csc;
  int order = 1;
  std::map<std::pair<int, int>, BigInt> coeffs;

  /// Throws PoleError when alpha sits on a pole of u.
  DoubleWide eval(const DoubleWide& alpha) const;
  double eval(double alpha) const;
};

inline constexpr int kMaxDerivOrder = 119;

/// Cached; order must be odd and at most kMaxDerivOrder.
const TrigDerivPoly& csc_deriv_poly(int order);
const TrigDerivPoly& sec_deriv_poly(int order);
const TrigDerivPoly& deriv_poly(DerivKind kind, int order);

/// |polynomial - polygamma combination| / max(1, |polynomial|).
double deriv_poly_polygamma_check(DerivKind kind, int order, double alpha);

/// |quadrature - (D(phi) - D(phi + a pi))| for the odd derivative D of csc or sec.
double deriv_diff_integral_check(DerivKind kind, int order, double phi, double a);

enum class Regime { LogOnly, CtgPlusLog_A1, LogOnly_A01, CtgPlusLog_Aover1, General, Unsupported };

const char* regime_name(Regime r);

struct RegimeInfo {
  Regime regime = Regime::Unsupported;
  /// 2phi + a*pi = 2pi: every tail term vanishes.
  bool zero_tail_line = false;
  std::string leading;
};

/// Leading-term region of S_n(phi, a) for large n.
RegimeInfo classify_regime(double phi, double a);

enum class SnFlavor { Harmonic, Log };

struct AsymptoticOptions {
  int n0 = 8;
  double pole_gap = 1e-6;
};

struct NamedTerm {
  std::string name;
  DoubleWide value;
};

struct AsymptoticSeries {
  SumSpec spec;
  int N = 2;
  Regime regime = Regime::General;
  std::vector<NamedTerm> leading;
  /// Tail term r (1-based) is tail_coeffs[r-1] / n^(2r-1).
  std::vector<DoubleWide> tail_coeffs;
  DoubleWide next_coeff;  // coefficient of the first omitted term
  double rounding = 0.0;
  bool below_n0 = false;
  bool unreliable = false;

  DoubleWide leading_sum() const;
  DoubleWide tail_term(int r) const;
  /// Leading terms plus the first m tail terms.
  DoubleWide partial(int m) const;
  DoubleWide value() const { return partial(N - 1); }
  /// First omitted term plus rounding.
  double err_estimate() const;
  EvalResult to_eval_result() const;
};

/// S_n(0,1). Harmonic: via H_n; Log: via ln(2n/pi) + gamma. 2 <= N <= 30.
AsymptoticSeries asympt_Sn(std::int64_t n, int N, SnFlavor flavor, const AsymptoticOptions& opt = {});

/// Tail coefficient r of the Log flavor divided by pi^(2r-1).
Rational sn_log_tail_rational(int r);

/// (2^{2r}-2) pi^{2r} |B_{2r}| / (2r)! - 1.
double sn_bracket_margin(int r);

/// S_n(phi,a) with 0 < phi < pi and 1 - phi/pi < a < 2 - phi/pi.
AsymptoticSeries asympt_Sn_phi_a(std::int64_t n, double phi, double a, int N, const AsymptoticOptions& opt = {});

/// S_n(phi,1), 0 < phi < pi.
AsymptoticSeries asympt_Sn_phi1(std::int64_t n, double phi, int N, const AsymptoticOptions& opt = {});

/// S_n(0,a), 0 < a < 2, a != 1.
AsymptoticSeries asympt_Sn_0a(std::int64_t n, double a, int N, SnFlavor flavor, const AsymptoticOptions& opt = {});

/// C_n(phi,a) with -pi/2 < phi < pi/2 and 1/2 - phi/pi < a < 3/2 - phi/pi.
AsymptoticSeries asympt_Cn(std::int64_t n, double phi, double a, int N, const AsymptoticOptions& opt = {});

/// C_n(phi,1), -pi/2 < phi < pi/2.
AsymptoticSeries asympt_Cn_phi1(std::int64_t n, double phi, int N, const AsymptoticOptions& opt = {});

/// sum_{l=1}^{n-1} ctg(phi + pi l/2n) (0 < phi < pi/2) or tg(...) (pi/2 < phi < pi).
AsymptoticSeries asympt_ctg_tg_halfstep(std::int64_t n, double phi, int N, Family family,
                                        const AsymptoticOptions& opt = {});

/// Picks the expansion matching the spec's family and region.
AsymptoticSeries asympt_auto(const SumSpec& spec, int N, const AsymptoticOptions& opt = {});

/// sum_{k>=1} (-1)^k {Psi[n(alpha k + beta1)] - Psi[n(alpha k + beta2)]}.
/// Without beta2 the second digamma is Psi(n alpha k).
struct AlternatingDigammaExpansion {
  double alpha = 1.0;
  double beta1 = 1.0;
  std::optional<double> beta2;
  std::int64_t n = 1;
  int N = 2;
  DoubleWide log_gamma_constant;
  DoubleWide inv_n_term;
  std::vector<DoubleWide> tail_terms;  // B_{2r} terms, r = 1..N-1

  DoubleWide value() const;
};

AlternatingDigammaExpansion alternating_digamma_expansion(double alpha, double beta1, std::optional<double> beta2, std::int64_t n, int N);

/// The same alternating series summed with the Euler transform.
DoubleWide alternating_digamma_direct(double alpha, double beta1, std::optional<double> beta2, std::int64_t n,
                         double* err = nullptr);

}  // namespace trigsum
