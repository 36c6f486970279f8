#include "trigsum/sums.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <string>
#include <thread>

#include "trigsum/numerics.hpp"
#include "trigsum/wide_math.hpp"

namespace trigsum {
namespace {

bool pole_at_sin_zero(Family f) { return f == Family::Csc || f == Family::Sec || f == Family::Ctg; }

// Splits the shift into whole half-turns (moved into the quadrant exactly) and a remainder.
struct Shift {
  int quadrant = 0;
  DoubleWide frac;
};

Shift split_shift(Family f, const DoubleWide& shift) {
  const DoubleWide s = f == Family::Sec ? shift + 0.5 : shift;
  const DoubleWide q = nearbyint(ldexp(s, 1));
  Shift out;
  out.frac = s - ldexp(q, -1);
  const double qm = std::fmod(q.hi(), 4.0) + std::fmod(q.lo(), 4.0);
  out.quadrant = static_cast<int>(std::fmod(qm + 8.0, 4.0));
  return out;
}

Reduced reduce_term(const DoubleWide& phi, const Shift& sh, const DoubleWide& t) {
  Reduced red = reduce_pi_multiple(phi, sh.frac + t);
  red.quadrant = (red.quadrant + sh.quadrant) & 3;
  return red;
}

template <class T>
T evaluate(Family f, const Reduced& red) {
  switch (f) {
    case Family::Csc:
    case Family::Sec: return T(1.0) / sin_of<T>(red);
    case Family::Tg: return sin_of<T>(red) / cos_of<T>(red);
    default: return cos_of<T>(red) / sin_of<T>(red);
  }
}

double pole_distance(Family f, const Reduced& red) {
  return pole_at_sin_zero(f) ? dist_to_sin_zero(red) : dist_to_cos_zero(red);
}

struct Chunk {
  ExactSum acc;
  double max_abs = 0.0;
  double cond = 0.0;
  std::vector<std::int64_t> skipped;
  std::int64_t pole = 0;
  bool hit = false;
};

template <class T>
Chunk sum_range(Family f, std::int64_t n, const DoubleWide& phi, const DoubleWide& shift,
                const DoubleWide& a, std::int64_t l0, std::int64_t l1, bool pv) {
  Chunk c;
  const Shift sh = split_shift(f, shift);
  const double span = std::fabs(phi.hi()) + 2.0 * dw::pi.hi() * (1.0 + std::fabs(sh.frac.hi()));
  for (std::int64_t l = l0; l <= l1; ++l) {
    const DoubleWide t = a * static_cast<double>(l) / static_cast<double>(n);
    const Reduced red = reduce_term(phi, sh, t);
    const double d = pole_distance(f, red);
    if (d <= kPoleValueGap) {
      const double mag = (d == 0.0) ? INFINITY : std::fabs(to_double(evaluate<double>(f, red)));
      if (pv && mag > kPoleValueMagnitude) {
        c.skipped.push_back(l);
        continue;
      }
      if (d < kPoleHardGap) {
        c.pole = l;
        c.hit = true;
        return c;
      }
    }
    const T v = evaluate<T>(f, red);
    const double av = std::fabs(to_double(v));
    c.max_abs = std::max(c.max_abs, av);
    // |f'| <= 1 + f^2 for all four families
    c.cond += (1.0 + av * av) * span;
    c.acc.add(v);
  }
  return c;
}

constexpr std::int64_t kParallelThreshold = 1 << 17;

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::Csc: return "csc";
    case Family::Sec: return "sec";
    case Family::Tg: return "tg";
    default: return "ctg";
  }
}

void SumSpec::validate() const {
  if (n < 2) throw DomainError("n >= 2 required");
  if (!std::isfinite(phi)) throw DomainError("phi must be finite");
  if (!std::isfinite(a) || !(a > 0.0)) throw DomainError("a > 0 required");
}

std::string EvalResult::method_name() const {
  switch (method) {
    case Method::Direct: return "direct";
    case Method::CotangentId: return "cotangent";
    case Method::DigammaFinite: return "digamma-finite";
    case Method::DigammaInfinite: return "digamma-infinite";
    case Method::Integral: return "integral";
    case Method::Mixed: return "mixed";
    default: return "asympt:" + std::to_string(order);
  }
}

template <class T>
RawSum family_sum(Family f, std::int64_t n, const DoubleWide& phi, const DoubleWide& shift,
                  const DoubleWide& a, std::int64_t l0, std::int64_t l1, bool pv) {
  if (n < 1) throw DomainError("n >= 1 required");
  RawSum out;
  if (l1 < l0) return out;
  std::vector<Chunk> chunks;
  const std::int64_t count = l1 - l0 + 1;
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (count < kParallelThreshold || hw == 1) {
    chunks.push_back(sum_range<T>(f, n, phi, shift, a, l0, l1, pv));
  } else {
    const std::int64_t parts = std::min<std::int64_t>(hw, 16);
    std::vector<std::future<Chunk>> jobs;
    for (std::int64_t p = 0; p < parts; ++p) {
      const std::int64_t lo = l0 + count * p / parts;
      const std::int64_t hi = l0 + count * (p + 1) / parts - 1;
      jobs.push_back(std::async(std::launch::async, [=] {
        return sum_range<T>(f, n, phi, shift, a, lo, hi, pv);
      }));
    }
    for (auto& j : jobs) chunks.push_back(j.get());
  }
  ExactSum acc;
  for (auto& c : chunks) {
    if (c.hit) {
      throw PoleError(std::string(family_name(f)) + " term l=" + std::to_string(c.pole) +
                          " sits on a pole",
                      c.pole);
    }
    acc.merge(c.acc);
    out.max_abs_term = std::max(out.max_abs_term, c.max_abs);
    out.conditioning += c.cond;
    out.skipped.insert(out.skipped.end(), c.skipped.begin(), c.skipped.end());
  }
  out.value = acc.result();
  return out;
}

template <class T>
T family_term(Family f, const DoubleWide& phi, const DoubleWide& shift) {
  const Reduced red = reduce_term(phi, split_shift(f, shift), 0.0);
  if (pole_distance(f, red) < kPoleHardGap) {
    throw PoleError(std::string(family_name(f)) + " argument sits on a pole", 0);
  }
  return evaluate<T>(f, red);
}

DoubleWide wide_csc_sum(std::int64_t n, const DoubleWide& phi, const DoubleWide& shift,
                        const DoubleWide& a) {
  return family_sum<DoubleWide>(Family::Csc, n, phi, shift, a, 1, n - 1, false).value;
}

EvalResult eval_direct(const SumSpec& spec, Precision precision) {
  spec.validate();
  EvalResult r;
  r.method = Method::Direct;
  r.precision = precision;
  const DoubleWide phi(spec.phi), a(spec.a);
  const RawSum s = (precision == Precision::Wide)
                       ? family_sum<DoubleWide>(spec.family, spec.n, phi, 0.0, a, 1, spec.n - 1,
                                                spec.principal_value)
                       : family_sum<double>(spec.family, spec.n, phi, 0.0, a, 1, spec.n - 1,
                                            spec.principal_value);
  r.value = (precision == Precision::Wide) ? s.value : DoubleWide(s.value.to_double());
  const double unit = (precision == Precision::Wide) ? 1e-30 : 0x1p-52;
  // Argument rounding of the wide reduction, amplified by |f'|.
  const double arg_unit = (precision == Precision::Wide) ? 4e-32 : 0.0;
  r.err_estimate = static_cast<double>(spec.n - 1) * s.max_abs_term * unit + s.conditioning * arg_unit;
  r.skipped_terms = s.skipped;
  return r;
}

namespace {

thread_local double g_noise = 0.0;

DoubleWide S(std::int64_t n, const DoubleWide& phi, const DoubleWide& a, const DoubleWide& shift = 0.0) {
  const RawSum r = family_sum<DoubleWide>(Family::Csc, n, phi, shift, a, 1, n - 1, false);
  g_noise += static_cast<double>(std::max<std::int64_t>(n - 1, 0)) * r.max_abs_term * 1e-30 +
             r.conditioning * 4e-32 * (1.0 + std::fabs(a.hi()));
  return r.value;
}

DoubleWide csc_w(const DoubleWide& phi, const DoubleWide& shift = 0.0) {
  const DoubleWide v = family_term<DoubleWide>(Family::Csc, phi, shift);
  const double av = std::fabs(v.hi());
  g_noise += av * 1e-30 + (1.0 + av * av) * (std::fabs(phi.hi()) + 7.0) * 4e-32;
  return v;
}

void require_n(const IdentityParams& p, std::int64_t min_n, const char* name) {
  if (p.n < min_n) {
    throw DomainError(std::string(name) + ": n >= " + std::to_string(min_n) + " required");
  }
  if (!std::isfinite(p.phi) || !std::isfinite(p.a)) throw DomainError(std::string(name) + ": finite phi, a required");
}

}  // namespace

double check_functional_identity(FunctionalId id, const IdentityParams& p, double* noise) {
  g_noise = 0.0;
  const DoubleWide phi(p.phi), a(p.a);
  const std::int64_t n = p.n;
  DoubleWide r;
  switch (id) {
    case FunctionalId::AntiPeriodicity:
      require_n(p, 1, "antiperiodicity");
      r = S(n, phi, a, static_cast<double>(2 * p.k - 1)) + S(n, phi, a);
      break;
    case FunctionalId::Periodicity:
      require_n(p, 1, "periodicity");
      r = S(n, phi, a, static_cast<double>(2 * p.k)) - S(n, phi, a);
      break;
    case FunctionalId::APeriodicity:
      require_n(p, 1, "a-periodicity");
      r = S(n, phi, a + static_cast<double>(2 * p.k * n)) - S(n, phi, a);
      break;
    case FunctionalId::Parity:
      require_n(p, 1, "parity");
      r = S(n, phi, -a) + S(n, -phi, a);
      break;
    case FunctionalId::EvenPhiA1:
      require_n(p, 1, "even-phi");
      r = S(n, -phi, DoubleWide(1.0) + static_cast<double>(2 * p.k * n)) - S(n, phi, 1.0);
      break;
    case FunctionalId::Doubling: {
      require_n(p, 1, "doubling");
      const DoubleWide h = a * 0.5;
      r = S(2 * n, phi, a) - S(n, phi, h) - S(n, phi, h, h) - csc_w(phi, h);
      break;
    }
    case FunctionalId::Multiplication: {
      require_n(p, 1, "multiplication");
      if (p.k < 1) throw DomainError("multiplication: k >= 1 required");
      const DoubleWide ak = a / static_cast<double>(p.k);
      ExactSum acc;
      acc.add(S(p.k * n, phi, a));
      for (std::int64_t l = 0; l < p.k; ++l) acc.add(-S(n, phi, ak, ak * static_cast<double>(l)));
      acc.add(-S(p.k, phi, a));
      r = acc.result();
      break;
    }
    case FunctionalId::MultiplicationCommuted: {
      require_n(p, 1, "multiplication");
      if (p.k < 1) throw DomainError("multiplication: k >= 1 required");
      const DoubleWide an = a / static_cast<double>(n);
      ExactSum acc;
      acc.add(S(p.k * n, phi, a));
      for (std::int64_t l = 0; l < n; ++l) acc.add(-S(p.k, phi, an, an * static_cast<double>(l)));
      acc.add(-S(n, phi, a));
      r = acc.result();
      break;
    }
    case FunctionalId::RecurrenceN: {
      require_n(p, 1, "recurrence in n");
      const DoubleWide q = a * static_cast<double>(n) / static_cast<double>(n + 1);
      r = S(n + 1, phi, a) - S(n, phi, q) - csc_w(phi, q);
      break;
    }
    case FunctionalId::RecurrencePhi: {
      require_n(p, 1, "recurrence in phi");
      const double m = static_cast<double>(2 * n + 1);
      const DoubleWide q = DoubleWide(2.0 * static_cast<double>(n)) / m;
      const DoubleWide step = DoubleWide(1.0) / m;
      ExactSum acc;
      acc.add(S(n, phi, q, step));
      acc.add(-S(n, phi, q));
      acc.add(csc_w(phi * m) * m);
      acc.add(-csc_w(phi));
      acc.add(csc_w(phi, step));
      acc.add(csc_w(phi, -step));
      r = acc.result();
      break;
    }
  }
  if (noise) *noise = g_noise;
  return std::fabs(r.to_double());
}

double check_special_value(SpecialValueId id, const IdentityParams& p, double* noise) {
  g_noise = 0.0;
  const DoubleWide phi(p.phi), a(p.a);
  const std::int64_t n = p.n;
  DoubleWide r;
  switch (id) {
    case SpecialValueId::S1Zero:
      r = S(1, phi, a);
      break;
    case SpecialValueId::S2Closed:
      r = S(2, phi, a) - csc_w(phi, a * 0.5);
      break;
    case SpecialValueId::A2kn:
      require_n(p, 1, "S_n(phi,2kn)");
      r = S(n, phi, static_cast<double>(2 * p.k * n)) - csc_w(phi) * static_cast<double>(n - 1);
      break;
    case SpecialValueId::A2Plus2kn: {
      require_n(p, 1, "S_n(phi,2+2kn)");
      const DoubleWide lhs = S(n, phi, static_cast<double>(2 + 2 * p.k * n));
      const DoubleWide rhs = (n % 2 == 1) ? csc_w(phi * static_cast<double>(n)) * static_cast<double>(n) - csc_w(phi)
                                          : -csc_w(phi);
      r = lhs - rhs;
      break;
    }
  }
  if (noise) *noise = g_noise;
  return std::fabs(r.to_double());
}

template RawSum family_sum<double>(Family, std::int64_t, const DoubleWide&, const DoubleWide&,
                                   const DoubleWide&, std::int64_t, std::int64_t, bool);
template RawSum family_sum<DoubleWide>(Family, std::int64_t, const DoubleWide&, const DoubleWide&,
                                       const DoubleWide&, std::int64_t, std::int64_t, bool);
template double family_term<double>(Family, const DoubleWide&, const DoubleWide&);
template DoubleWide family_term<DoubleWide>(Family, const DoubleWide&, const DoubleWide&);

}  // namespace trigsum
