// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "sampling.hpp"
#include "trigsum/asymptotics.hpp"
#include "trigsum/bounds.hpp"
#include "trigsum/errors.hpp"
#include "trigsum/identities.hpp"
#include "trigsum/representations.hpp"
#include "trigsum/sums.hpp"

using namespace trigsum;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

EvalResult wide_direct(Family f, std::int64_t n, double phi, double a) {
  return eval_direct(SumSpec{f, n, phi, a, false}, Precision::Wide);
}

/// 1. Harmonic upper-bound gap over n = 10..2000.
Verdict figure_five_gap() {
  const auto t0 = Clock::now();
  int bad = 0;
  double worst10 = 0.0, worst50 = 0.0, rel10 = 0.0, rel50 = 0.0;
  for (std::int64_t n = 10; n <= 2000; ++n) {
    const EvalResult d = wide_direct(Family::Csc, n, 0.0, 1.0);
    const double gap = (bounds_Sn(n, BoundFlavor::HarmonicEnvelope).upper - d.value).to_double();
    const double rel = gap / d.value.to_double();
    if (!(gap > 0.0)) ++bad;
    worst10 = std::max(worst10, gap);
    rel10 = std::max(rel10, rel);
    if (n >= 50) {
      worst50 = std::max(worst50, gap);
      rel50 = std::max(rel50, rel);
    }
  }
  const double secs = seconds_since(t0);
  Verdict v;
  v.pass = bad == 0 && worst10 <= 3e-8 && worst50 <= 8e-12 && rel10 <= 2e-9 && rel50 <= 7e-14 && secs < 30.0;
  v.detail = "nonpositive=" + std::to_string(bad) + " max_gap(n>=10)=" + fmt("%.3g", worst10) +
             " max_gap(n>=50)=" + fmt("%.3g", worst50) + " max_rel(n>=10)=" + fmt("%.3g", rel10) +
             " max_rel(n>=50)=" + fmt("%.3g", rel50) + " time=" + fmt("%.2fs", secs);
  return v;
}

/// 2. Upper-bound gap ranking at n = 100.
Verdict dominance_ordering() {
  const std::int64_t n = 100;
  const EvalResult d = wide_direct(Family::Csc, n, 0.0, 1.0);
  std::vector<BoundPair> ranked{bounds_Sn(n, BoundFlavor::HarmonicEnvelope), bounds_Sn(n, BoundFlavor::LogEnvelope)};
  const std::vector<BoundPair> hist = historical_bounds(n);
  for (const BoundFlavor f : {BoundFlavor::InverseLinear, BoundFlavor::QuadraticCorrection}) {
    for (const BoundPair& p : hist) {
      if (p.flavor == f) ranked.push_back(p);
    }
  }
  std::vector<double> gaps;
  double noise = d.err_estimate;
  for (const BoundPair& p : ranked) {
    gaps.push_back((p.upper - d.value).to_double());
    noise += p.rounding;
  }
  bool ok = ranked.size() == 4;
  for (std::size_t i = 0; ok && i + 1 < gaps.size(); ++i) ok = gaps[i + 1] - gaps[i] >= 10.0 * noise;
  Verdict v;
  v.pass = ok && gaps.front() > 10.0 * noise;
  std::ostringstream os;
  os << "gaps harmonic=" << fmt("%.3g", gaps[0]) << " log=" << fmt("%.3g", gaps[1])
     << " inverse-linear=" << fmt("%.3g", gaps[2]) << " quadratic=" << fmt("%.3g", gaps[3])
     << " noise=" << fmt("%.2g", noise);
  v.detail = os.str();
  return v;
}

bool digits_match(double value, const std::string& reference) {
  const int decimals = static_cast<int>(reference.size() - reference.find('.') - 1);
  const double scale = std::pow(10.0, decimals);
  const double truncated = std::trunc(value * scale) / scale;
  return std::fabs(truncated - std::stod(reference)) < 0.5 / scale;
}

/// 3. Constants to their reference digits.
Verdict constants_regression() {
  const BoundPair h = bounds_Sn(10, BoundFlavor::HarmonicEnvelope);
  const BoundPair l = bounds_Sn(10, BoundFlavor::LogEnvelope);
  const std::vector<BoundPair> hist = historical_bounds(10);
  auto find = [&](BoundFlavor f) {
    for (const BoundPair& p : hist) {
      if (p.flavor == f) return p;
    }
    return BoundPair{};
  };
  const BoundPair add = find(BoundFlavor::AdditiveConstant);
  const BoundPair sharp = find(BoundFlavor::SharpConstant);
  const BoundPair inv = find(BoundFlavor::InverseLinear);
  struct Item {
    const char* name;
    double value;
    const char* reference;
  };
  const Item items[] = {{"A", h.constants.at("A"), "0.0342"},
                        {"B", h.constants.at("B"), "0.00474"},
                        {"C", l.constants.at("C"), "0.0872"},
                        {"D", l.constants.at("D"), "0.0100"},
                        {"alpha", sharp.constants.at("alpha"), "-0.0425"},
                        {"additive", add.constants.at("additive"), "0.681"},
                        {"inverse_lower", inv.constants.at("lower_coeff"), "-0.113"},
                        {"inverse_upper", inv.constants.at("upper_coeff"), "-0.059"}};
  Verdict v;
  v.pass = true;
  std::ostringstream os;
  for (const Item& it : items) {
    const bool ok = digits_match(it.value, it.reference);
    v.pass = v.pass && ok;
    os << it.name << '=' << fmt("%.6g", it.value) << (ok ? "" : "(MISMATCH)") << ' ';
  }
  v.detail = os.str();
  return v;
}

/// 4. Pairwise agreement of all representations on 300 strip draws.
Verdict cross_representation() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(300);
  int failures = 0, pairs = 0, errors = 0;
  for (int i = 0; i < 300; ++i) {
    const SumSpec s = sampling::strip_spec(rng, 64);
    std::vector<EvalResult> rs;
    try {
      rs.push_back(eval_direct(s, Precision::Wide));
      rs.push_back(eval_digamma_finite(s, Precision::Wide));
      rs.push_back(eval_digamma_infinite(s, {}, Precision::Wide));
      rs.push_back(eval_integral_form(s, {}, Precision::Wide));
      if (s.a == 1.0 && s.family == Family::Csc) {
        rs.push_back(eval_cotangent_form(s.n, s.phi, Precision::Wide));
        rs.push_back(eval_mixed_form(s.n, s.phi, Precision::Wide));
      }
    } catch (const Error& e) {
      ++errors;
      std::fprintf(stderr, "draw %d (n=%lld phi=%.17g a=%.17g): %s\n", i, static_cast<long long>(s.n), s.phi, s.a,
                   e.what());
      continue;
    }
    for (std::size_t p = 0; p < rs.size(); ++p) {
      for (std::size_t q = p + 1; q < rs.size(); ++q) {
        ++pairs;
        const double diff = std::fabs((rs[p].value - rs[q].value).to_double());
        if (!(diff <= rs[p].err_estimate + rs[q].err_estimate)) ++failures;
      }
    }
  }
  const double secs = seconds_since(t0);
  Verdict v;
  v.pass = failures == 0 && errors == 0 && secs < 120.0;
  v.detail = "draws=300 pairs=" + std::to_string(pairs) + " failures=" + std::to_string(failures) +
             " evaluation_errors=" + std::to_string(errors) + " time=" + fmt("%.2fs", secs);
  return v;
}

/// Least-squares slope of log err against log n over points above the noise floor.
struct SlopeFit {
  double slope = 0.0;
  int used = 0;
};

SlopeFit error_slope(const std::function<AsymptoticSeries(std::int64_t)>& make) {
  std::vector<double> xs, ys;
  for (int k = 3; k <= 12; ++k) {
    const std::int64_t n = std::int64_t{1} << k;
    const AsymptoticSeries s = make(n);
    const EvalResult d = wide_direct(s.spec.family, n, s.spec.phi, s.spec.a);
    const double err = std::fabs((s.value() - d.value).to_double());
    const double floor = 50.0 * (d.err_estimate + s.rounding);
    if (err > floor) {
      xs.push_back(std::log(static_cast<double>(n)));
      ys.push_back(std::log(err));
    }
  }
  SlopeFit fit;
  fit.used = static_cast<int>(xs.size());
  if (fit.used < 2) return fit;
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / fit.used;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / fit.used;
  double sxy = 0.0, sxx = 0.0;
  for (int i = 0; i < fit.used; ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  fit.slope = sxy / sxx;
  return fit;
}

/// 5. Error slopes of the expansions at N = 2, 3, 4.
Verdict asymptotic_order() {
  struct Case {
    const char* name;
    std::function<AsymptoticSeries(std::int64_t, int)> make;
  };
  const double ln2 = std::log(2.0);
  const std::vector<Case> cases{
      {"harmonic", [](std::int64_t n, int N) { return asympt_Sn(n, N, SnFlavor::Harmonic); }},
      {"log", [](std::int64_t n, int N) { return asympt_Sn(n, N, SnFlavor::Log); }},
      {"phi-a(2,0.5)", [](std::int64_t n, int N) { return asympt_Sn_phi_a(n, 2.0, 0.5, N); }},
      {"zero-a(ln2)", [ln2](std::int64_t n, int N) { return asympt_Sn_0a(n, ln2, N, SnFlavor::Harmonic); }},
      {"zero-a(2ln2)", [ln2](std::int64_t n, int N) { return asympt_Sn_0a(n, 2.0 * ln2, N, SnFlavor::Log); }},
      {"phi1(1)", [](std::int64_t n, int N) { return asympt_Sn_phi1(n, 1.0, N); }}};
  Verdict v;
  v.pass = true;
  std::ostringstream os;
  for (const Case& c : cases) {
    os << c.name << ':';
    for (const int N : {2, 3, 4}) {
      const SlopeFit fit = error_slope([&](std::int64_t n) { return c.make(n, N); });
      const bool ok = fit.used >= 4 && fit.slope <= -(2.0 * N - 1.0) + 0.3;
      v.pass = v.pass && ok;
      os << fmt("%.2f", fit.slope) << '/' << fit.used << (ok ? "" : "!") << (N < 4 ? "," : " ");
    }
  }
  v.detail = os.str() + "(slope/points used)";
  return v;
}

/// 6. The sum lies strictly between consecutive partial sums.
Verdict enveloping() {
  int violations = 0, checks = 0;
  for (const std::int64_t n : {5, 10, 20, 50}) {
    const AsymptoticSeries s = asympt_Sn(n, 8, SnFlavor::Harmonic);
    const oracle::Big exact = oracle::trig_sum('c', n, 0.0, 1.0, 1, n - 1);
    for (int N = 2; N <= 6; ++N) {
      ++checks;
      const oracle::Big lo = oracle::Big(s.partial(N - 1)) - exact;
      const oracle::Big hi = oracle::Big(s.partial(N)) - exact;
      const double margin = 2.0 * s.rounding;
      const bool strictly = (lo.to_double() < -margin && hi.to_double() > margin) ||
                            (lo.to_double() > margin && hi.to_double() < -margin);
      if (!strictly) ++violations;
    }
  }
  Verdict v;
  v.pass = violations == 0;
  v.detail = "checks=" + std::to_string(checks) + " violations=" + std::to_string(violations);
  return v;
}

/// 7. Identity corpus plus parity and domain gates.
Verdict identity_corpus() {
  std::mt19937_64 rng(20240611);
  int failures = 0, draws = 0;
  double worst = 0.0;
  for (const IdentityId id : all_identities()) {
    for (int k = 0; k < 50; ++k) {
      const IdentityCase c = random_case(id, rng);
      const double r = run_identity(c);
      ++draws;
      worst = std::max(worst, r / c.residual_tol);
      if (!(r <= c.residual_tol)) ++failures;
    }
  }
  int gates = 0, rejected = 0;
  auto expect_reject = [&](IdentityId id, std::map<std::string, double> params) {
    ++gates;
    try {
      run_identity(IdentityCase{id, std::move(params)});
    } catch (const DomainError&) {
      ++rejected;
    }
  };
  expect_reject(IdentityId::TangentSquareOdd, {{"n", 6}});
  expect_reject(IdentityId::AlternatingCsc, {{"n", 6}, {"phi", 0.3}});
  expect_reject(IdentityId::AlternatingSec, {{"n", 8}, {"phi", 0.3}});
  expect_reject(IdentityId::RationalCosFull, {{"n", 4}, {"x", 1.0}});
  expect_reject(IdentityId::EisensteinCotSine, {{"n", 5}, {"k", 5}});
  expect_reject(IdentityId::SecantCosineSum, {{"n", 3}, {"k", 6}});
  expect_reject(IdentityId::CotangentSum, {{"n", 2.5}, {"phi", 0.3}});
  expect_reject(IdentityId::DigammaHartley, {{"n", 8}, {"nu", 9}});
  Verdict v;
  v.pass = failures == 0 && rejected == gates;
  v.detail = "identities=" + std::to_string(all_identities().size()) + " draws=" + std::to_string(draws) +
             " failures=" + std::to_string(failures) + " worst_residual/tol=" + fmt("%.2g", worst) +
             " gates_rejected=" + std::to_string(rejected) + "/" + std::to_string(gates);
  return v;
}

/// 8. Digamma summation formulas for n = 2..200.
Verdict digamma_summation() {
  double worst = 0.0;
  int checks = 0;
  for (std::int64_t n = 2; n <= 200; ++n) {
    for (const DigammaSumId id : {DigammaSumId::HalfGridSum, DigammaSumId::OddGridWeightedSum,
                                  DigammaSumId::CosecantFromDigamma}) {
      worst = std::max(worst, digamma_summation_check(id, n));
      ++checks;
    }
    worst = std::max(worst, digamma_summation_check(DigammaSumId::ShiftedCosecantSum, n, 0.237));
    worst = std::max(worst, digamma_summation_check(DigammaSumId::ShiftedTangentSum, n, 0.0113));
    checks += 2;
  }
  Verdict v;
  v.pass = worst <= 1e-20;
  v.detail = "checks=" + std::to_string(checks) + " max_residual=" + fmt("%.3g", worst);
  return v;
}

/// 9. Regimes of the four value panels and the spike at (0, 2ln2).
Verdict regime_sanity() {
  const double ln2 = std::log(2.0);
  const bool regimes = classify_regime(2.0 * ln2, 1.0).regime == Regime::CtgPlusLog_A1 &&
                       classify_regime(0.0, 1.0).regime == Regime::LogOnly &&
                       classify_regime(0.0, 2.0 * ln2).regime == Regime::CtgPlusLog_Aover1 &&
                       classify_regime(0.0, ln2).regime == Regime::LogOnly_A01;
  std::int64_t spike_n = 2;
  double spike = 0.0;
  for (std::int64_t n = 2; n <= 500; ++n) {
    const double s = std::fabs(wide_direct(Family::Csc, n, 0.0, 2.0 * ln2).value.to_double());
    if (s > spike) {
      spike = s;
      spike_n = n;
    }
  }
  const AsymptoticSeries series = asympt_Sn_0a(spike_n, 2.0 * ln2, 3, SnFlavor::Log);
  double cot_mag = 0.0, log_mag = 0.0;
  for (const NamedTerm& t : series.leading) {
    if (t.name == "cotangent") cot_mag = std::fabs(t.value.to_double());
    if (t.name == "log") log_mag = std::fabs(t.value.to_double());
  }
  Verdict v;
  v.pass = regimes && cot_mag > log_mag;
  v.detail = std::string("regimes ") + (regimes ? "match" : "MISMATCH") + "; largest |S_n(0,2ln2)| at n=" +
             std::to_string(spike_n) + " (" + fmt("%.4g", spike) + "), |cotangent|=" + fmt("%.4g", cot_mag) +
             " |log|=" + fmt("%.4g", log_mag);
  return v;
}

template <class F>
double median_seconds(F&& f, int reps) {
  std::vector<double> t;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = Clock::now();
    std::int64_t calls = 0;
    double elapsed = 0.0;
    do {
      f();
      ++calls;
      elapsed = seconds_since(t0);
    } while (elapsed < 2e-3);
    t.push_back(elapsed / static_cast<double>(calls));
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

/// 10. asympt:3 against direct summation at n = 10^6.
Verdict performance() {
  const SumSpec spec{Family::Csc, 1000000, 0.0, 1.0, false};
  volatile double keep = 0.0;
  const double t_direct = median_seconds([&] { keep = eval_direct(spec).value.hi(); }, 5);
  const double t_asympt = median_seconds([&] { keep = asympt_auto(spec, 3).to_eval_result().value.hi(); }, 5);
  const DoubleWide exact = eval_direct(spec, Precision::Wide).value;
  const double rel = std::fabs(((asympt_auto(spec, 3).value() - exact) / exact).to_double());
  const double speedup = t_direct / t_asympt;
  Verdict v;
  v.pass = speedup >= 100.0 && rel <= 1e-14;
  v.detail = "direct=" + fmt("%.3gs", t_direct) + " asympt:3=" + fmt("%.3gs", t_asympt) +
             " speedup=" + fmt("%.0f", speedup) + " rel_error=" + fmt("%.2g", rel);
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Verdict (*run)();
  };
  const Criterion criteria[] = {{"harmonic upper-bound gap n=10..2000", figure_five_gap},
                                {"bound dominance ordering at n=100", dominance_ordering},
                                {"bound constants to reference digits", constants_regression},
                                {"cross-representation agreement", cross_representation},
                                {"asymptotic error slopes", asymptotic_order},
                                {"enveloping partial sums", enveloping},
                                {"identity corpus", identity_corpus},
                                {"digamma summation formulas n=2..200", digamma_summation},
                                {"regime classifier and spike", regime_sanity},
                                {"asympt:3 speed and accuracy at n=1e6", performance}};
  int failed = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    if (!v.pass) ++failed;
    std::printf("%s %d %s: %s\n", v.pass ? "PASS" : "FAIL", index, c.name, v.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
