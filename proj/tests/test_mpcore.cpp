#include <gtest/gtest.h>

#include "stirling/bigfloat.hpp"
#include "stirling/errors.hpp"
#include "stirling/rational.hpp"
#include "support.hpp"

using namespace stirling;
using stirling::testing::dec;
using stirling::testing::Gen;

TEST(Rational, ParsesAndCanonicalizes) {
  EXPECT_EQ(Rational::parse("6/8"), Rational(3, 4));
  EXPECT_EQ(Rational::parse("-5"), Rational(-5));
  EXPECT_EQ(Rational(2, -4).to_string(), "-1/2");
  EXPECT_EQ(Rational(7).to_string(), "7/1");
  EXPECT_THROW(Rational(1, 0), DomainError);
  EXPECT_THROW(Rational::parse("1/x"), DomainError);
}

TEST(Rational, FieldLawsOnRandomOperands) {
  Gen gen(11);
  for (int i = 0; i < stirling::testing::kCases; ++i) {
    Rational a(gen.integer(-1000, 1000), gen.integer(1, 997));
    Rational b(gen.integer(-1000, 1000), gen.integer(1, 997));
    Rational c(gen.integer(1, 1000), gen.integer(1, 997));
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ((a * c) / c, a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(abs(a), a.sign() < 0 ? -a : a);
  }
}

TEST(Rational, FactorialMatchesNaiveProduct) {
  mpz_class naive = 1;
  for (unsigned long n = 0; n <= 300; ++n) {
    if (n > 0) naive *= n;
    ASSERT_EQ(factorial(n), naive) << n;
  }
  EXPECT_EQ(range_product(5, 7), mpz_class(210));
}

TEST(Precision, RejectsBelowFloor) {
  EXPECT_THROW(PrecisionCtx(63), PrecisionError);
  EXPECT_NO_THROW(PrecisionCtx(64));
  EXPECT_EQ(PrecisionCtx().bits(), 256);
  EXPECT_EQ(PrecisionCtx(100).widened(28).bits(), 128);
}

TEST(BigFloat, DecimalParsing) {
  PrecisionCtx ctx(128);
  EXPECT_EQ(dec("0.5", ctx), BigFloat(Rational(1, 2), ctx));
  EXPECT_EQ(dec("3/4", ctx), BigFloat(Rational(3, 4), ctx));
  EXPECT_EQ(dec("1e3", ctx), BigFloat(1000, ctx));
  EXPECT_THROW(dec("1.5x", ctx), DomainError);
  EXPECT_THROW(dec("", ctx), DomainError);
}

TEST(BigFloat, HexRoundTripIsExact) {
  Gen gen(12);
  for (long bits : {64L, 200L, 512L}) {
    PrecisionCtx ctx(bits);
    for (int i = 0; i < stirling::testing::kCases; ++i) {
      BigFloat x = ln(dec(gen.decimal(1, 1000).c_str(), ctx), ctx) / gen.integer(1, 99);
      BigFloat back = from_hex(to_hex(x), ctx);
      ASSERT_EQ(back, x) << to_hex(x);
    }
  }
  EXPECT_THROW(from_hex("1.8p0", PrecisionCtx(64)), DomainError);
}

TEST(BigFloat, DecimalRendering) {
  PrecisionCtx ctx(128);
  EXPECT_EQ(BigFloat(Rational(1, 8), ctx).to_decimal(3), "0.125");
  EXPECT_EQ(pi(ctx).to_decimal(20), "3.1415926535897932385");
  EXPECT_EQ(dec("1e-30", ctx).to_decimal(3), "1.00e-30");
}

TEST(BigFloat, KnownConstants) {
  PrecisionCtx ctx(256);
  // Reference digit strings, truncated well inside 256 bits.
  BigFloat pi_ref = dec("3.14159265358979323846264338327950288419716939937510582097494459", ctx);
  BigFloat ln2_ref = dec("0.693147180559945309417232121458176568075500134360255254120680009", ctx);
  BigFloat half_ln_2pi_ref = dec("0.918938533204672741780329736405617639861397473637783412817151540", ctx);
  BigFloat eps = dec("1e-60", ctx);
  EXPECT_LT(abs(pi(ctx) - pi_ref), eps);
  EXPECT_LT(abs(ln2(ctx) - ln2_ref), eps);
  EXPECT_LT(abs(half_ln_two_pi(ctx) - half_ln_2pi_ref), eps);
}

TEST(BigFloat, ElementaryInversesAgree) {
  Gen gen(13);
  PrecisionCtx ctx(192);
  BigFloat eps = power_of_two(-180, ctx);
  for (int i = 0; i < stirling::testing::kCases; ++i) {
    BigFloat x = dec(gen.decimal(0, 50).c_str(), ctx);
    EXPECT_LE(abs(exp(ln(x, ctx), ctx) - x), eps * x * 4);
    EXPECT_LE(abs(sqrt(x, ctx) * sqrt(x, ctx) - x), eps * x * 4);
    EXPECT_LE(abs(expm1(log1p(x, ctx), ctx) - x), eps * x * 4);
    EXPECT_LE(abs(pow(x, 3, ctx) - x * x * x), eps * x * x * x * 8);
  }
  EXPECT_THROW(ln(BigFloat(-1, ctx), ctx), DomainError);
}

TEST(BigFloat, MixedPrecisionTakesTheWider) {
  BigFloat a(1, PrecisionCtx(64));
  BigFloat b(1, PrecisionCtx(300));
  EXPECT_EQ((a + b).precision(), 300);
  EXPECT_EQ((b / a).precision(), 300);
}

TEST(BigFloat, UlpAndEstimate) {
  PrecisionCtx ctx(100);
  EXPECT_EQ(ulp(BigFloat(1, ctx)), power_of_two(-99, ctx));
  Estimate e = cross_checked([](const PrecisionCtx& c) { return pi(c) / 3; }, ctx);
  EXPECT_GT(e.error, BigFloat(0, ctx));
  EXPECT_LE(e.error, power_of_two(-95, ctx));
  EXPECT_GE(e.agreed_bits, 95);
}
