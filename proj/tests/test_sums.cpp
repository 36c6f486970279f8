#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "trigsum/sums.hpp"

using namespace trigsum;

namespace {

oracle::Big mpfr_sum(Family f, long n, double phi, double a, long l0, long l1) {
  const char code[] = {'c', 's', 't', 'k'};
  return oracle::trig_sum(code[static_cast<int>(f)], n, phi, a, l0, l1);
}

EvalResult wide(Family f, std::int64_t n, double phi, double a, bool pv = false) {
  return eval_direct(SumSpec{f, n, phi, a, pv}, Precision::Wide);
}

}  // namespace

TEST(EvalDirect, ClosedFormValues) {
  EXPECT_NEAR(wide(Family::Csc, 2, 0, 1).value.to_double(), 1.0, 1e-30);
  const DoubleWide s4 = wide(Family::Csc, 4, 0, 1).value;
  EXPECT_LT(oracle::rel_diff(s4, oracle::Big(2.0) * oracle::sqrt(oracle::Big(2.0)) + oracle::Big(1.0)), 1e-30);
  EXPECT_NEAR(wide(Family::Csc, 10, 0, 1).value.to_double(), 15.4, 0.05);
  EXPECT_NEAR(wide(Family::Csc, 50, 0, 1).value.to_double(), 129.0, 0.5);
  const EvalResult sec = eval_direct(SumSpec{Family::Sec, 5, 0.0, 1.0, true});
  EXPECT_NEAR(sec.value.to_double(), 0.0, 1e-14);
  EXPECT_TRUE(sec.skipped_terms.empty());
}

TEST(EvalDirect, WideMatchesMpfrAcrossFamilies) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> uphi(-4, 4), ua(0.05, 3.0);
  std::uniform_int_distribution<int> un(2, 60);
  for (Family f : {Family::Csc, Family::Sec, Family::Tg, Family::Ctg}) {
    for (int i = 0; i < 60; ++i) {
      const int n = un(rng);
      const double phi = uphi(rng), a = ua(rng);
      EvalResult r;
      try {
        r = wide(f, n, phi, a);
      } catch (const PoleError&) {
        continue;
      }
      const oracle::Big ref = mpfr_sum(f, n, phi, a, 1, n - 1);
      EXPECT_LE(oracle::abs_diff(r.value, ref), r.err_estimate + 1e-300) << family_name(f) << n;
      const EvalResult nat = eval_direct(SumSpec{f, n, phi, a, false});
      EXPECT_LE(oracle::abs_diff(nat.value, ref), nat.err_estimate) << family_name(f) << n;
    }
  }
}

TEST(EvalDirect, PoleHitCarriesIndexAndPrincipalValueSkipsIt) {
  try {
    eval_direct(SumSpec{Family::Csc, 4, 0.0, 2.0, false});
    FAIL();
  } catch (const PoleError& e) {
    EXPECT_EQ(e.index(), 2);
  }
  const EvalResult pv = eval_direct(SumSpec{Family::Csc, 4, 0.0, 2.0, true}, Precision::Wide);
  ASSERT_EQ(pv.skipped_terms.size(), 1u);
  EXPECT_EQ(pv.skipped_terms[0], 2);
  // csc(pi/2) + csc(3pi/2) = 0
  EXPECT_NEAR(pv.value.to_double(), 0.0, 1e-30);
  const EvalResult sec6 = eval_direct(SumSpec{Family::Sec, 6, 0.0, 1.0, true}, Precision::Wide);
  EXPECT_EQ(sec6.skipped_terms, std::vector<std::int64_t>{3});
  EXPECT_NEAR(sec6.value.to_double(), 0.0, 1e-28);
  EXPECT_THROW(eval_direct(SumSpec{Family::Tg, 2, 0.0, 1.0, false}), PoleError);
}

TEST(EvalDirect, RejectsInvalidSpecs) {
  EXPECT_THROW(eval_direct(SumSpec{Family::Csc, 1, 0.1, 1.0, false}), DomainError);
  EXPECT_THROW(eval_direct(SumSpec{Family::Csc, 5, 0.1, 0.0, false}), DomainError);
  EXPECT_THROW(eval_direct(SumSpec{Family::Csc, 5, NAN, 1.0, false}), DomainError);
}

TEST(EvalDirect, SecantIsCosecantShiftedByHalfPi) {
  for (double phi : {0.0, 0.3, -1.1}) {
    const RawSum c = family_sum<DoubleWide>(Family::Csc, 9, phi, 0.5, 0.8, 1, 8, false);
    const RawSum s = family_sum<DoubleWide>(Family::Sec, 9, phi, 0.0, 0.8, 1, 8, false);
    EXPECT_EQ(c.value.hi(), s.value.hi());
    EXPECT_EQ(c.value.lo(), s.value.lo());
  }
}

TEST(EvalDirect, LargeNParallelReductionIsDeterministic) {
  const SumSpec spec{Family::Csc, 400000, 0.3, 0.7, false};
  const EvalResult a = eval_direct(spec, Precision::Wide);
  const EvalResult b = eval_direct(spec, Precision::Wide);
  EXPECT_EQ(a.value.hi(), b.value.hi());
  EXPECT_EQ(a.value.lo(), b.value.lo());
  const EvalResult nat = eval_direct(spec);
  EXPECT_LE(std::fabs((nat.value - a.value).to_double()), nat.err_estimate);
}

TEST(FunctionalIdentity, AntiPeriodicityRandom) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> uphi(-3, 3), ua(0.05, 4.0);
  std::uniform_int_distribution<int> un(2, 80);
  int done = 0;
  while (done < 200) {
    const IdentityParams p{un(rng), uphi(rng), ua(rng), 1};
    try {
      EXPECT_LE(check_functional_identity(FunctionalId::AntiPeriodicity, p), 1e-25) << p.n << " " << p.phi;
      ++done;
    } catch (const PoleError&) {
    }
  }
}

TEST(FunctionalIdentity, Multiplication) {
  const IdentityParams p{4, 0.2, 0.7, 3};
  EXPECT_LE(check_functional_identity(FunctionalId::Multiplication, p), 1e-25);
  EXPECT_LE(check_functional_identity(FunctionalId::MultiplicationCommuted, p), 1e-25);
  EXPECT_THROW(check_functional_identity(FunctionalId::Multiplication, IdentityParams{4, 0.2, 0.7, 0}), DomainError);
}

TEST(FunctionalIdentity, AllIdentitiesOnRandomDraws) {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> uphi(-3, 3), ua(0.05, 3.0);
  std::uniform_int_distribution<int> un(1, 30), uk(-2, 3);
  for (FunctionalId id :
       {FunctionalId::AntiPeriodicity, FunctionalId::Periodicity, FunctionalId::APeriodicity, FunctionalId::Parity,
        FunctionalId::EvenPhiA1, FunctionalId::Doubling, FunctionalId::Multiplication,
        FunctionalId::MultiplicationCommuted, FunctionalId::RecurrenceN, FunctionalId::RecurrencePhi}) {
    int done = 0;
    while (done < 50) {
      IdentityParams p{un(rng), uphi(rng), ua(rng), uk(rng)};
      if (id == FunctionalId::Multiplication || id == FunctionalId::MultiplicationCommuted) p.k = 1 + std::abs(p.k);
      try {
        double noise = 0.0;
        const double res = check_functional_identity(id, p, &noise);
        EXPECT_LE(res, std::max(1e-25, noise)) << static_cast<int>(id) << " n=" << p.n << " phi=" << p.phi << " a=" << p.a
                              << " k=" << p.k;
        ++done;
      } catch (const PoleError&) {
      }
    }
  }
}

TEST(FunctionalIdentity, EvenInPhiForAOneHoldsForNonzeroK) {
  for (std::int64_t k : {-3, -1, 0, 1, 2, 5}) {
    for (std::int64_t n : {2, 3, 7, 12}) {
      EXPECT_LE(check_functional_identity(FunctionalId::EvenPhiA1, IdentityParams{n, 0.37, 1.0, k}), 1e-25);
    }
  }
}

TEST(FunctionalIdentity, RecurrenceInPhiNeedsPositiveN) {
  EXPECT_THROW(check_functional_identity(FunctionalId::RecurrencePhi, IdentityParams{0, 0.3, 1.0, 1}), DomainError);
  EXPECT_LE(check_functional_identity(FunctionalId::RecurrencePhi, IdentityParams{5, 0.3, 1.0, 1}), 1e-25);
}

TEST(SpecialValue, ReferenceCases) {
  EXPECT_EQ(check_special_value(SpecialValueId::S1Zero, IdentityParams{1, 0.4, 1.3, 0}), 0.0);
  EXPECT_LE(check_special_value(SpecialValueId::A2kn, IdentityParams{6, 0.9, 0.0, 1}), 1e-25);
  EXPECT_LE(check_special_value(SpecialValueId::A2Plus2kn, IdentityParams{5, 0.4, 0.0, 0}), 1e-25);
  EXPECT_LE(check_special_value(SpecialValueId::A2Plus2kn, IdentityParams{6, 0.4, 0.0, 0}), 1e-25);
  for (double phi : {-1.0, 0.2, 2.9}) {
    const IdentityParams p{2, phi, 0.77, 0};
    EXPECT_LE(check_special_value(SpecialValueId::S2Closed, p), 1e-30);
  }
  for (std::int64_t n : {3, 4, 9, 10}) {
    for (std::int64_t k : {-2, 1, 3}) {
      EXPECT_LE(check_special_value(SpecialValueId::A2Plus2kn, IdentityParams{n, 0.61, 0.0, k}), 1e-24);
      EXPECT_LE(check_special_value(SpecialValueId::A2kn, IdentityParams{n, 0.61, 0.0, k}), 1e-24);
    }
  }
}

TEST(TangentFamily, EulerTheorem) {
  for (std::int64_t n : {2, 3, 4, 7, 10, 15}) {
    for (double phi : {0.1, 0.47, 1.3}) {
      const DoubleWide lhs = family_sum<DoubleWide>(Family::Tg, n, phi, 0.0, 1.0, 0, n - 1, false).value;
      const DoubleWide nphi = DoubleWide(phi) * static_cast<double>(n);
      const DoubleWide rhs = (n % 2 == 1) ? family_term<DoubleWide>(Family::Tg, nphi, 0.0) * static_cast<double>(n)
                                          : -family_term<DoubleWide>(Family::Ctg, nphi, 0.0) * static_cast<double>(n);
      EXPECT_LE(std::fabs((lhs - rhs).to_double()), 1e-24) << n << " " << phi;
    }
  }
}
