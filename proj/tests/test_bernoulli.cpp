#include <gtest/gtest.h>
#include <mpfr.h>

#include <thread>

#include "stirling/bernoulli.hpp"
#include "stirling/errors.hpp"
#include "support.hpp"

using namespace stirling;

TEST(Bernoulli, TabulatedValues) {
  const std::vector<std::pair<int, Rational>> known{
      {0, Rational(1)},           {1, Rational(-1, 2)},      {2, Rational(1, 6)},    {4, Rational(-1, 30)},
      {6, Rational(1, 42)},       {8, Rational(-1, 30)},     {10, Rational(5, 66)},  {12, Rational(-691, 2730)},
      {14, Rational(7, 6)},       {16, Rational(-3617, 510)}, {18, Rational(43867, 798)},
      {20, Rational(-174611, 330)}};
  for (const auto& [k, b] : known) EXPECT_EQ(bernoulli(k), b) << k;
  for (int k = 3; k < 200; k += 2) EXPECT_TRUE(bernoulli(k).is_zero()) << k;
}

TEST(Bernoulli, SeriesCoefficientsTimesFactorial) {
  EXPECT_EQ(series_coeff_a(0), Rational(1));
  EXPECT_EQ(series_coeff_a(1), Rational(-1, 2));
  EXPECT_EQ(series_coeff_a(2), Rational(1, 12));
  EXPECT_EQ(series_coeff_a(4), Rational(-1, 720));
  for (int k = 0; k <= 200; ++k) {
    ASSERT_EQ(series_coeff_a(k) * Rational(factorial(static_cast<unsigned long>(k))), bernoulli(k)) << k;
  }
}

// Von Staudt–Clausen: B_2k + Σ_{(p−1) | 2k} 1/p is an integer.
TEST(Bernoulli, VonStaudtClausen) {
  auto is_prime = [](long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d) {
      if (p % d == 0) return false;
    }
    return true;
  };
  for (int k = 2; k <= 300; k += 2) {
    Rational sum = bernoulli(k);
    for (long p = 2; p <= k + 1; ++p) {
      if (is_prime(p) && k % (p - 1) == 0) sum += Rational(1, p);
    }
    ASSERT_EQ(sum.denominator(), mpz_class(1)) << k;
  }
}

// B_2k = (−1)^{k+1} 2 (2k)! ζ(2k) / (2π)^{2k}, with ζ from MPFR.
TEST(Bernoulli, ZetaRelation) {
  PrecisionCtx ctx(512);
  for (int k = 1; k <= 60; ++k) {
    BigFloat zeta(ctx);
    mpfr_zeta_ui(zeta.raw(), static_cast<unsigned long>(2 * k), MPFR_RNDN);
    BigFloat two_pi = pi(ctx) * 2;
    BigFloat expected = zeta * BigFloat(factorial(static_cast<unsigned long>(2 * k)), ctx) * 2 /
                        pow(two_pi, 2 * k, ctx);
    if (k % 2 == 0) expected = -expected;
    BigFloat got = rational_to_float(bernoulli(2 * k), ctx);
    EXPECT_LE(abs(got - expected), abs(expected) * power_of_two(-480, ctx)) << k;
  }
}

TEST(Bernoulli, RecurrenceResidualIsZero) {
  for (int k = 1; k <= 128; ++k) {
    Rational residual(0);
    mpz_class binom;
    for (int j = 0; j <= k; ++j) {
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k + 1), static_cast<unsigned long>(j));
      residual += Rational(binom) * bernoulli(j);
    }
    ASSERT_TRUE(residual.is_zero()) << k;
  }
}

TEST(BernoulliCache, CapIsEnforced) {
  BernoulliCache cache(40);
  EXPECT_NO_THROW(cache.bernoulli(40));
  EXPECT_THROW(cache.bernoulli(41), ResourceError);
  EXPECT_THROW(cache.bernoulli(-1), DomainError);
  EXPECT_THROW(default_bernoulli_cache().bernoulli(BernoulliCache::kDefaultCap + 1), ResourceError);
}

TEST(BernoulliCache, TableHasRequestedLength) {
  BernoulliTable t = bernoulli_table(10);
  EXPECT_EQ(t.max_index, 10);
  EXPECT_EQ(t.b.size(), 11u);
  EXPECT_EQ(t.a.size(), 11u);
}

TEST(BernoulliCache, ConcurrentReadersSeeTheSameValues) {
  BernoulliCache cache;
  std::vector<std::vector<Rational>> seen(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (int k = 0; k <= 160; ++k) seen[t].push_back(cache.bernoulli((k * (t + 3)) % 161));
    });
  }
  for (auto& th : threads) th.join();
  for (int t = 0; t < 4; ++t) {
    for (int k = 0; k <= 160; ++k) EXPECT_EQ(seen[t][k], bernoulli((k * (t + 3)) % 161));
  }
}
