#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace stirling {

/// Exact signed rational, always held in lowest terms with a positive
/// denominator, so equality is structural.
class Rational {
 public:
  Rational() = default;
  Rational(long value);  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  Rational(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rational(const mpz_class& value);
  explicit Rational(mpq_class value);

  /// Parses "num/den" or a bare integer. Throws DomainError on malformed
  /// input or a zero denominator.
  static Rational parse(std::string_view text);

  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  /// "num/den" in decimal; the denominator is always printed.
  [[nodiscard]] std::string to_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpq_class value_{0};
};

Rational abs(const Rational& x);

/// n! as an exact integer, n >= 0, by binary splitting.
mpz_class factorial(unsigned long n);

/// Product lo * (lo+1) * ... * hi by binary splitting; 1 when lo > hi.
mpz_class range_product(unsigned long lo, unsigned long hi);

}  // namespace stirling
