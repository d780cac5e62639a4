#include "stirling/rational.hpp"

#include <string>

#include "stirling/errors.hpp"

namespace stirling {

namespace {

mpz_class parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw DomainError("malformed integer: '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw DomainError("malformed integer: '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return mpz_class(s, 10);
}

}  // namespace

Rational::Rational(long value) : value_(value) {}

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw DomainError("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw DomainError("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpz_class& value) : value_(value) {}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::string Rational::to_string() const {
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero rational");
  value_ /= rhs.value_;
  return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

mpz_class range_product(unsigned long lo, unsigned long hi) {
  if (lo > hi) return 1;
  if (hi - lo < 16) {
    mpz_class acc = lo;
    for (unsigned long k = lo + 1; k <= hi; ++k) acc *= k;
    return acc;
  }
  unsigned long mid = lo + (hi - lo) / 2;
  return range_product(lo, mid) * range_product(mid + 1, hi);
}

mpz_class factorial(unsigned long n) { return n < 2 ? mpz_class(1) : range_product(2, n); }

}  // namespace stirling
