#include <gtest/gtest.h>

#include "stirling/bounds.hpp"
#include "stirling/errors.hpp"
#include "stirling/series.hpp"
#include "support.hpp"

using namespace stirling;
using stirling::testing::dec;
using stirling::testing::Gen;
using stirling::testing::mpfr_lngamma_oracle;

namespace {

// r_n from MPFR's ln Γ rather than the library's factorial ladder.
BigFloat r_oracle(long n, const PrecisionCtx& ctx) {
  BigFloat nw(n, ctx);
  return mpfr_lngamma_oracle(nw + 1, ctx) + nw - half_ln_two_pi(ctx) - ln(nw, ctx) / 2 - nw * ln(nw, ctx);
}

}  // namespace

TEST(Bounds, SequencePointAtOne) {
  PrecisionCtx ctx(200);
  SequencePoint p = sequence_point(1, ctx);
  EXPECT_LE(abs(p.r_n - (BigFloat(1, ctx) - half_ln_two_pi(ctx))), power_of_two(-190, ctx));
  EXPECT_EQ(p.c_n, BigFloat(0, ctx));
  EXPECT_LE(abs(p.v_n - exp(BigFloat(-1, ctx), ctx)), power_of_two(-190, ctx));
}

TEST(Bounds, SequenceAgreesWithMpfrOracle) {
  PrecisionCtx ctx(200);
  Gen gen(41);
  for (int i = 0; i < stirling::testing::kCases; ++i) {
    long n = gen.integer(1, 20000);
    EXPECT_LE(abs(sequence_point(n, ctx).r_n - r_oracle(n, ctx)), power_of_two(-170, ctx)) << n;
  }
}

TEST(Bounds, ClassicalFamiliesHoldOnRandomN) {
  PrecisionCtx ctx(128);
  Gen gen(42);
  for (BoundFamily f : {BoundFamily::robbins, BoundFamily::maria, BoundFamily::hummel, BoundFamily::nanjundiah,
                        BoundFamily::michel}) {
    for (int i = 0; i < stirling::testing::kCases; ++i) {
      long n = gen.integer(min_valid_n(f), 50000);
      BoundReport r = check_bound(f, n, ctx);
      EXPECT_TRUE(r.holds) << to_string(f) << " n=" << n;
      EXPECT_GT(r.margin, r.error_bound) << to_string(f) << " n=" << n;
    }
  }
}

TEST(Bounds, RobbinsSidesAreTheStatedRationals) {
  PrecisionCtx ctx(128);
  BoundReport r = check_bound(BoundFamily::robbins, 5, ctx);
  EXPECT_EQ(*r.lhs, BigFloat(Rational(1, 61), ctx));
  EXPECT_EQ(*r.rhs, BigFloat(Rational(1, 60), ctx));
  EXPECT_EQ(r.label, "n=5");
  EXPECT_EQ(r.verdict, Verdict::holds);
}

TEST(Bounds, MichelIsOneSided) {
  BoundReport r = check_bound(BoundFamily::michel, 3, PrecisionCtx(128));
  EXPECT_FALSE(r.lhs.has_value());
  EXPECT_TRUE(r.rhs.has_value());
}

TEST(Bounds, ValidityRanges) {
  PrecisionCtx ctx(128);
  EXPECT_THROW(check_bound(BoundFamily::michel, 2, ctx), ValidityError);
  EXPECT_THROW(check_bound(BoundFamily::hummel, 1, ctx), ValidityError);
  EXPECT_THROW(check_bound(BoundFamily::robbins, 0, ctx), ValidityError);
  EXPECT_THROW(check_bound(BoundFamily::impens, 3, ctx), DomainError);
  EXPECT_EQ(parse_bound_family("maria"), BoundFamily::maria);
  EXPECT_FALSE(parse_bound_family("stirling").has_value());
}

// Hummel's lower bound fails at n = 1: r_1 + ½ln2π = 1 exactly hits the upper side.
TEST(Bounds, HummelOutsideItsRangeIsNotClaimed) {
  BigFloat r1 = sequence_point(1, PrecisionCtx(128)).r_n + half_ln_two_pi(PrecisionCtx(128));
  EXPECT_LE(abs(r1 - BigFloat(1, PrecisionCtx(128))), power_of_two(-120, PrecisionCtx(128)));
}

TEST(Bounds, SurveyCoversTheRange) {
  auto rows = survey_bound(BoundFamily::nanjundiah, 1, 200, PrecisionCtx(128));
  ASSERT_EQ(rows.size(), 200u);
  for (const auto& r : rows) EXPECT_EQ(r.verdict, Verdict::holds) << r.label;
}

TEST(Bounds, ImpensSandwichOnTheGrid) {
  PrecisionCtx ctx(256);
  auto rows = survey_impens(impens_grid_points(), 6, ctx);
  ASSERT_EQ(rows.size(), 7u * 49u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.verdict, Verdict::holds) << r.label;
    EXPECT_GT(r.margin, r.error_bound) << r.label;
  }
}

// The mid value is ln Γ(x) − 𝒫(x); check it against MPFR where it is not too small.
TEST(Bounds, ImpensMidMatchesMpfr) {
  PrecisionCtx ctx(256);
  for (const char* text : {"0.3", "1", "5"}) {
    BigFloat x = dec(text, ctx);
    BoundReport r = impens_sandwich(x, 1, 1, ctx);
    BigFloat truth = mpfr_lngamma_oracle(x, ctx) - main_term(x, ctx);
    EXPECT_LE(abs(r.mid - truth), power_of_two(-240, ctx)) << text;
  }
}

TEST(Bounds, ImpensAt64BitsIsInconclusiveForTightPairs) {
  PrecisionCtx ctx(64);
  EXPECT_THROW(impens_sandwich(dec("50", ctx), 6, 6, ctx), InconclusiveError);
  EXPECT_NO_THROW(impens_sandwich(dec("1", ctx), 0, 0, ctx));
}

TEST(Bounds, AissenRatioTendsToZero) {
  PrecisionCtx ctx(128);
  BigFloat prev = abs(aissen_ratio(10, ctx));
  for (long n : {100L, 1000L, 10000L}) {
    BigFloat cur = abs(aissen_ratio(n, ctx));
    EXPECT_LT(cur, prev) << n;
    prev = cur;
  }
  EXPECT_LT(prev, dec("1e-5", ctx));
}
