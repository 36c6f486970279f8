#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <span>
#include <vector>

#include "trigsum/double_wide.hpp"
#include "trigsum/errors.hpp"

namespace trigsum {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Round-half-even projection of an exact rational.
double to_double_rne(const Rational& q);
/// hi = rne(q), lo = rne(q - hi).
DoubleWide to_wide(const Rational& q);
Rational exact_rational(double x);

/// Exact running sum of doubles kept as non-overlapping partials.
class ExactSum {
 public:
  void add(double x);
  void add(const DoubleWide& x) {
    add(x.hi());
    add(x.lo());
  }
  void merge(const ExactSum& other);
  /// Correctly rounded to DoubleWide.
  DoubleWide result() const;
  bool empty() const { return partials_.empty(); }

 private:
  std::vector<double> partials_;
};

/// Sum rounded once from the exact value; order independent.
DoubleWide compensated_sum(std::span<const double> terms);

struct BernoulliTable {
  int max_index = 0;
  std::vector<Rational> values;
  std::vector<double> floats;
  std::vector<DoubleWide> wides;

  /// B_m as a DoubleWide; throws DomainError past max_index.
  const DoubleWide& wide(int m) const;
};

BernoulliTable bernoulli_table(int max_index);

/// Shared table with max_index 120.
const BernoulliTable& bernoulli_cache();

DoubleWide harmonic(std::int64_t n);

DoubleWide zeta_even(int r, const BernoulliTable& table);

}  // namespace trigsum
