#include <gtest/gtest.h>

#include "stirling/errors.hpp"
#include "stirling/oracle.hpp"
#include "support.hpp"

using namespace stirling;
using stirling::testing::dec;
using stirling::testing::Gen;
using stirling::testing::mpfr_gamma_oracle;
using stirling::testing::mpfr_lngamma_oracle;

TEST(Oracle, ExactFactorialMatchesMpfr) {
  PrecisionCtx ctx(256);
  for (long n : {0L, 1L, 2L, 10L, 170L, 1000L, 54321L}) {
    OracleValue v = ln_factorial_exact(n, ctx);
    BigFloat truth = mpfr_lngamma_oracle(BigFloat(n + 1, ctx), ctx);
    EXPECT_LE(abs(v.value - truth), v.error_bound + ulp(truth) * 2) << n;
    EXPECT_EQ(v.method, OracleMethod::exact_factorial);
  }
  EXPECT_THROW(ln_factorial_exact(-1, ctx), DomainError);
  EXPECT_THROW(ln_factorial_exact(kMaxExactFactorial + 1, ctx), ResourceError);
}

TEST(Oracle, FactorialTableMatchesPointValues) {
  PrecisionCtx ctx(128);
  std::vector<BigFloat> table = ln_factorial_table(300, ctx);
  for (long n : {0L, 5L, 77L, 300L}) {
    EXPECT_LE(abs(table[n] - ln_factorial_exact(n, ctx).value), ulp(table[n]) * 4 + power_of_two(-120, ctx));
  }
}

TEST(Oracle, Binet2AgainstMpfrOnRandomArguments) {
  PrecisionCtx ctx(200);
  Gen gen(31);
  for (int i = 0; i < stirling::testing::kCases; ++i) {
    BigFloat z = dec(gen.decimal(0, 120).c_str(), ctx);
    OracleValue v = lngamma_binet2(z, ctx);
    BigFloat truth = mpfr_lngamma_oracle(z, ctx);
    EXPECT_LE(abs(v.value - truth), v.error_bound + ulp(truth)) << z.to_decimal(8);
    EXPECT_LE(v.error_bound, abs(truth) * power_of_two(-180, ctx) + power_of_two(-190, ctx)) << z.to_decimal(8);
  }
}

TEST(Oracle, Binet2AtIntegersMatchesExactFactorials) {
  PrecisionCtx ctx(256);
  BigFloat tight = dec("1e-30", ctx);
  for (long n = 2; n <= 50; ++n) {
    OracleValue b = lngamma_binet2(BigFloat(n, ctx), ctx);
    BigFloat diff = abs(b.value - ln_factorial_exact(n - 1, ctx).value);
    EXPECT_LE(diff, tight) << n;
    EXPECT_LE(diff, b.error_bound * 2) << n;
  }
}

TEST(Oracle, SlowOraclesBracketTheTruth) {
  PrecisionCtx ctx(128);
  for (const char* text : {"0.3", "1", "2.5", "7"}) {
    BigFloat z = dec(text, ctx);
    BigFloat truth = mpfr_lngamma_oracle(z, ctx);
    OracleValue euler = lngamma_euler_limit(z, 4000, ctx);
    EXPECT_LE(abs(euler.value - truth), euler.error_bound) << text;
    OracleValue inv = weierstrass_inv_gamma(z, 4000, ctx);
    BigFloat inv_truth = 1L / mpfr_gamma_oracle(z, ctx);
    EXPECT_LE(abs(inv.value - inv_truth), inv.error_bound) << text;
  }
}

TEST(Oracle, EulerGammaLiteral) {
  const EulerGamma& g = euler_gamma();
  EXPECT_LT(g.self_check_residual, BigFloat::from_decimal("1e-11", PrecisionCtx(128)));
  PrecisionCtx ctx(400);
  BigFloat mpfr_gamma_const(ctx);
  mpfr_const_euler(mpfr_gamma_const.raw(), MPFR_RNDN);
  EXPECT_LE(abs(euler_gamma_value(ctx) - mpfr_gamma_const), dec("1e-126", ctx));
}

TEST(Oracle, DuplicationAndMultiplication) {
  PrecisionCtx ctx(256);
  BigFloat tol = dec("1e-25", ctx);
  for (const char* text : {"0.3", "0.5", "1", "2.5", "7", "20"}) {
    IdentityResidual d = check_duplication(dec(text, ctx), ctx);
    EXPECT_LE(d.residual, tol) << text;
    EXPECT_LE(d.residual, d.error_bound) << text;
    for (int m : {2, 3, 5}) {
      IdentityResidual r = check_multiplication(m, dec(text, ctx), ctx);
      EXPECT_LE(r.residual, tol) << text << " m=" << m;
    }
  }
  EXPECT_THROW(check_multiplication(6, BigFloat(1, ctx), ctx), DomainError);
}

TEST(Oracle, GammaAtHalfIntegers) {
  PrecisionCtx ctx(200);
  for (long k : {1L, 2L, 3L, 7L, 40L, 101L}) {
    BigFloat truth = mpfr_gamma_oracle(BigFloat(Rational(k, 2), ctx), ctx);
    EXPECT_LE(abs(gamma_half_integer(k, ctx) - truth), abs(truth) * power_of_two(-190, ctx)) << k;
  }
  EXPECT_EQ(gamma_half_integer(8, ctx), BigFloat(6, ctx));
  EXPECT_THROW(gamma_half_integer(0, ctx), DomainError);
}

TEST(Oracle, DomainChecks) {
  PrecisionCtx ctx(128);
  EXPECT_THROW(lngamma_binet2(BigFloat(0, ctx), ctx), DomainError);
  EXPECT_THROW(lngamma_euler_limit(BigFloat(1, ctx), 1, ctx), DomainError);
  EXPECT_THROW(weierstrass_inv_gamma(BigFloat(-2, ctx), 10, ctx), DomainError);
  EXPECT_EQ(to_string(OracleMethod::binet2), "binet2");
}
