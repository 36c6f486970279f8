#include "trigsum/numerics.hpp"

#include <cmath>
#include <string>

#include "trigsum/wide_math.hpp"

namespace trigsum {

double to_double_rne(const Rational& q) {
  using boost::multiprecision::msb;
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  if (num == 0) return 0.0;
  const bool neg = num < 0;
  if (neg) num = -num;
  // Choose e so that the integer quotient has 54 or 55 bits.
  long long e = static_cast<long long>(msb(num)) - static_cast<long long>(msb(den)) - 54;
  BigInt a = num, b = den;
  if (e < 0) {
    a <<= static_cast<unsigned>(-e);
  } else {
    b <<= static_cast<unsigned>(e);
  }
  BigInt quo, rem;
  boost::multiprecision::divide_qr(a, b, quo, rem);
  // quo has 54 or 55 bits; keep 53.
  const unsigned extra = static_cast<unsigned>(msb(quo)) + 1 - 53;
  const BigInt mask = (BigInt(1) << extra) - 1;
  BigInt low = quo & mask;
  quo >>= extra;
  e += extra;
  const BigInt half = BigInt(1) << (extra - 1);
  bool up = false;
  if (low > half) {
    up = true;
  } else if (low == half) {
    up = rem != 0 || (quo & 1) != 0;
  }
  if (up) quo += 1;
  double m = static_cast<double>(static_cast<std::uint64_t>(quo));
  double v = std::ldexp(m, static_cast<int>(e));
  return neg ? -v : v;
}

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite value has no rational form");
  if (x == 0.0) return Rational(0);
  int e = 0;
  const double m = std::frexp(x, &e);
  const auto mi = static_cast<long long>(std::ldexp(m, 53));
  e -= 53;
  Rational r = Rational(BigInt(mi));
  if (e > 0) {
    r *= Rational(BigInt(1) << e);
  } else if (e < 0) {
    r /= Rational(BigInt(1) << (-e));
  }
  return r;
}

DoubleWide to_wide(const Rational& q) {
  const double hi = to_double_rne(q);
  const double lo = to_double_rne(q - exact_rational(hi));
  return DoubleWide::raw(hi, lo);
}

void ExactSum::add(double x) {
  if (!std::isfinite(x)) throw DomainError("compensated_sum: non-finite input");
  std::size_t i = 0;
  for (double y : partials_) {
    if (std::fabs(x) < std::fabs(y)) std::swap(x, y);
    const double hi = x + y;
    const double lo = y - (hi - x);
    if (lo != 0.0) partials_[i++] = lo;
    x = hi;
  }
  partials_.resize(i);
  if (x != 0.0 || partials_.empty()) partials_.push_back(x);
}

void ExactSum::merge(const ExactSum& other) {
  for (double p : other.partials_) add(p);
}

namespace {

// Correctly rounded sum of non-overlapping partials (increasing magnitude).
double round_partials(const std::vector<double>& p) {
  std::size_t n = p.size();
  if (n == 0) return 0.0;
  double hi = p[--n];
  double lo = 0.0;
  while (n > 0) {
    const double x = hi;
    const double y = p[--n];
    hi = x + y;
    const double yr = hi - x;
    lo = y - yr;
    if (lo != 0.0) break;
  }
  if (n > 0 && ((lo < 0 && p[n - 1] < 0) || (lo > 0 && p[n - 1] > 0))) {
    const double y = lo * 2.0;
    const double x = hi + y;
    const double yr = x - hi;
    if (y == yr) hi = x;
  }
  return hi;
}

}  // namespace

DoubleWide ExactSum::result() const {
  const double hi = round_partials(partials_);
  ExactSum rest = *this;
  rest.add(-hi);
  const double lo = round_partials(rest.partials_);
  return DoubleWide::from_sum(hi, lo);
}

DoubleWide compensated_sum(std::span<const double> terms) {
  ExactSum acc;
  for (double t : terms) acc.add(t);
  return acc.result();
}

const DoubleWide& BernoulliTable::wide(int m) const {
  if (m < 0 || m > max_index) {
    throw DomainError("Bernoulli index " + std::to_string(m) + " exceeds table max_index " +
                      std::to_string(max_index));
  }
  return wides[static_cast<std::size_t>(m)];
}

BernoulliTable bernoulli_table(int max_index) {
  if (max_index <= 0 || max_index % 2 != 0) {
    throw DomainError("bernoulli_table: max_index must be even and positive");
  }
  if (max_index > 120) throw DomainError("bernoulli_table: max_index must be <= 120");
  BernoulliTable t;
  t.max_index = max_index;
  t.values.assign(static_cast<std::size_t>(max_index) + 1, Rational(0));
  t.values[0] = 1;
  // sum_{k=0}^{m} C(m+1,k) B_k = 0
  for (int m = 1; m <= max_index; ++m) {
    if (m > 1 && m % 2 == 1) continue;
    Rational s = 0;
    BigInt binom = 1;  // C(m+1, 0)
    for (int k = 0; k < m; ++k) {
      if (t.values[k] != 0) s += Rational(binom) * t.values[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    t.values[m] = -s / Rational(m + 1);
  }
  t.floats.reserve(t.values.size());
  t.wides.reserve(t.values.size());
  for (const auto& v : t.values) {
    t.floats.push_back(to_double_rne(v));
    t.wides.push_back(to_wide(v));
  }
  return t;
}

const BernoulliTable& bernoulli_cache() {
  static const BernoulliTable table = bernoulli_table(120);
  return table;
}

DoubleWide harmonic(std::int64_t n) {
  if (n < 1) throw DomainError("harmonic: n must be >= 1");
  ExactSum acc;
  for (std::int64_t k = 1; k <= n; ++k) acc.add(DoubleWide(1.0) / static_cast<double>(k));
  return acc.result();
}

DoubleWide zeta_even(int r, const BernoulliTable& table) {
  if (r < 1) throw DomainError("zeta_even: r must be >= 1");
  if (2 * r > table.max_index) throw DomainError("zeta_even: 2r exceeds table max_index");
  // (-1)^{r+1} (2 pi)^{2r} B_{2r} / (2 (2r)!)
  DoubleWide v = abs(table.wide(2 * r)) * pow(dw::two_pi, 2 * r) * 0.5;
  for (int k = 2; k <= 2 * r; ++k) v /= static_cast<double>(k);
  return v;
}

}  // namespace trigsum
