#pragma once

// Shared helpers for the test binaries: a seeded generator for property tests
// and MPFR's own special functions as an oracle that shares no code with the
// library's series, quadrature or products.

#include <mpfr.h>

#include <cstdint>
#include <random>
#include <string>

#include "stirling/bigfloat.hpp"

namespace stirling::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  // Decimal text with up to four fractional digits in [lo, hi].
  std::string decimal(long lo, long hi) {
    long whole = integer(lo, hi - 1);
    long frac = integer(1, 9999);
    std::string f = std::to_string(frac);
    return std::to_string(whole) + "." + std::string(4 - f.size(), '0') + f;
  }

 private:
  std::mt19937_64 rng_;
};

inline constexpr int kCases = 40;

inline BigFloat mpfr_lngamma_oracle(const BigFloat& z, const PrecisionCtx& ctx) {
  BigFloat out(ctx);
  int sign = 0;
  mpfr_lgamma(out.raw(), &sign, z.raw(), MPFR_RNDN);
  return out;
}

inline BigFloat mpfr_gamma_oracle(const BigFloat& z, const PrecisionCtx& ctx) {
  BigFloat out(ctx);
  mpfr_gamma(out.raw(), z.raw(), MPFR_RNDN);
  return out;
}

inline BigFloat dec(const char* text, const PrecisionCtx& ctx) { return BigFloat::from_decimal(text, ctx); }

}  // namespace stirling::testing
