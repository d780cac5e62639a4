#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

#include "stirling/rational.hpp"

namespace stirling {

/// Significand precision, in bits, for every approximate computation.
/// Values below 64 bits are rejected.
class PrecisionCtx {
 public:
  static constexpr long kMinBits = 64;
  static constexpr long kDefaultBits = 256;

  PrecisionCtx() : PrecisionCtx(kDefaultBits) {}
  explicit PrecisionCtx(long bits);

  [[nodiscard]] long bits() const { return bits_; }
  [[nodiscard]] PrecisionCtx widened(long extra_bits) const { return PrecisionCtx(bits_ + extra_bits); }

  friend bool operator==(const PrecisionCtx&, const PrecisionCtx&) = default;

 private:
  long bits_;
};

/// Radix-2 floating value backed by an mpfr_t. The precision is fixed at
/// construction; binary operations produce the larger operand precision.
/// Every operation rounds to nearest, and non-finite results raise DomainError.
class BigFloat {
 public:
  explicit BigFloat(const PrecisionCtx& ctx);
  BigFloat(long value, const PrecisionCtx& ctx);
  BigFloat(const Rational& value, const PrecisionCtx& ctx);
  BigFloat(const mpz_class& value, const PrecisionCtx& ctx);
  /// Rounds `other` to `ctx`.
  BigFloat(const BigFloat& other, const PrecisionCtx& ctx);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  /// Decimal literal ("12.5", "-3e-4") or a rational "p/q", correctly rounded.
  static BigFloat from_decimal(std::string_view text, const PrecisionCtx& ctx);
  /// Inverse of to_hex(); exact when `ctx` is at least the serialized precision.
  static BigFloat from_hex(std::string_view text, const PrecisionCtx& ctx);

  [[nodiscard]] long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }
  [[nodiscard]] PrecisionCtx ctx() const { return PrecisionCtx(precision()); }

  [[nodiscard]] int sign() const { return mpfr_sgn(value_); }
  [[nodiscard]] bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  [[nodiscard]] double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Hexadecimal significand/exponent form, e.g. "0x1.5bf0a8b145769p+1",
  /// carrying every significant bit.
  [[nodiscard]] std::string to_hex() const;
  /// `digits` significant decimal digits; fixed notation for moderate
  /// exponents, otherwise "d.ddde-XX". Independent of the C locale.
  [[nodiscard]] std::string to_decimal(int digits = 20) const;

  [[nodiscard]] mpfr_srcptr raw() const { return value_; }
  [[nodiscard]] mpfr_ptr raw() { return value_; }

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);
  BigFloat& operator+=(long rhs);
  BigFloat& operator-=(long rhs);
  BigFloat& operator*=(long rhs);
  BigFloat& operator/=(long rhs);
  BigFloat& operator+=(const Rational& rhs);
  BigFloat& operator-=(const Rational& rhs);
  BigFloat& operator*=(const Rational& rhs);
  BigFloat& operator/=(const Rational& rhs);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator+(BigFloat a, long b) { return a += b; }
  friend BigFloat operator-(BigFloat a, long b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, long b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, long b) { return a /= b; }
  friend BigFloat operator+(long a, BigFloat b) { return b += a; }
  friend BigFloat operator*(long a, BigFloat b) { return b *= a; }
  friend BigFloat operator+(BigFloat a, const Rational& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const Rational& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const Rational& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const Rational& b) { return a /= b; }
  friend BigFloat operator-(long a, const BigFloat& b);
  friend BigFloat operator/(long a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& x);

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::strong_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
    return mpfr_cmp(a.value_, b.value_) <=> 0;
  }
  friend bool operator==(const BigFloat& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }
  friend std::strong_ordering operator<=>(const BigFloat& a, long b) { return mpfr_cmp_si(a.value_, b) <=> 0; }

 private:
  BigFloat(mpfr_prec_t prec, int /*tag*/);
  void check_finite(const char* what) const;

  mpfr_t value_;
};

enum class Elementary { ln, exp, sqrt, arctan };

/// Unary elementary function at `ctx` precision. ln and sqrt need x > 0 and
/// x >= 0 respectively; violations raise DomainError.
BigFloat elementary(Elementary fn, const BigFloat& x, const PrecisionCtx& ctx);
/// x^y for x > 0, or any x when y is integral.
BigFloat pow(const BigFloat& x, const BigFloat& y, const PrecisionCtx& ctx);
BigFloat pow(const BigFloat& x, long y, const PrecisionCtx& ctx);

BigFloat ln(const BigFloat& x, const PrecisionCtx& ctx);
BigFloat exp(const BigFloat& x, const PrecisionCtx& ctx);
BigFloat sqrt(const BigFloat& x, const PrecisionCtx& ctx);
BigFloat atan(const BigFloat& x, const PrecisionCtx& ctx);
BigFloat log1p(const BigFloat& x, const PrecisionCtx& ctx);
BigFloat expm1(const BigFloat& x, const PrecisionCtx& ctx);
BigFloat log10(const BigFloat& x, const PrecisionCtx& ctx);
BigFloat abs(const BigFloat& x);

BigFloat pi(const PrecisionCtx& ctx);
BigFloat ln2(const PrecisionCtx& ctx);
/// ½ ln(2π)
BigFloat half_ln_two_pi(const PrecisionCtx& ctx);

/// Correctly rounded conversion of an exact rational.
BigFloat rational_to_float(const Rational& q, const PrecisionCtx& ctx);

/// Spacing of representable values at x's binade and precision; 0 for x = 0.
BigFloat ulp(const BigFloat& x);
/// 2^e at `ctx` precision.
BigFloat power_of_two(long e, const PrecisionCtx& ctx);

std::string to_hex(const BigFloat& x);
BigFloat from_hex(std::string_view text, const PrecisionCtx& ctx);

/// Value computed at a precision together with an error estimate obtained by
/// recomputing at 64 extra bits.
struct Estimate {
  BigFloat value;
  BigFloat error;
  /// Number of leading bits on which both evaluations agree.
  long agreed_bits;
};

Estimate make_estimate(BigFloat value, const BigFloat& wide_value);

/// Evaluates fn(ctx) and fn(ctx + 64 bits); the error is |difference| plus
/// one ulp at ctx.
template <class Fn>
Estimate cross_checked(Fn&& fn, const PrecisionCtx& ctx) {
  BigFloat value = fn(ctx);
  BigFloat wide = fn(ctx.widened(64));
  return make_estimate(std::move(value), wide);
}

}  // namespace stirling
