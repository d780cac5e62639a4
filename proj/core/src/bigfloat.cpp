#include "stirling/bigfloat.hpp"

#include <algorithm>
#include <cstring>
#include <string>

#include "stirling/errors.hpp"

namespace stirling {

namespace {

mpfr_prec_t to_prec(const PrecisionCtx& ctx) { return static_cast<mpfr_prec_t>(ctx.bits()); }

template <class Op>
BigFloat binary(const BigFloat& a, const BigFloat& b, Op op) {
  BigFloat out(PrecisionCtx(std::max(a.precision(), b.precision())));
  op(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  if (!mpfr_number_p(out.raw())) throw DomainError("non-finite arithmetic result");
  return out;
}

// Consumes the whole of `text` or throws.
void parse_into(mpfr_ptr dst, std::string_view text, int base, const char* what) {
  std::string s(text);
  if (s.empty()) throw DomainError(std::string("empty ") + what);
  char* end = nullptr;
  mpfr_strtofr(dst, s.c_str(), &end, base, MPFR_RNDN);
  if (end != s.c_str() + s.size() || !mpfr_number_p(dst)) {
    throw DomainError(std::string("malformed ") + what + ": '" + s + "'");
  }
}

}  // namespace

PrecisionCtx::PrecisionCtx(long bits) : bits_(bits) {
  if (bits < kMinBits) {
    throw PrecisionError("precision of " + std::to_string(bits) + " bits is below the " +
                         std::to_string(kMinBits) + "-bit minimum");
  }
}

BigFloat::BigFloat(mpfr_prec_t prec, int /*tag*/) { mpfr_init2(value_, prec); }

BigFloat::BigFloat(const PrecisionCtx& ctx) : BigFloat(to_prec(ctx), 0) { mpfr_set_zero(value_, 1); }

BigFloat::BigFloat(long value, const PrecisionCtx& ctx) : BigFloat(to_prec(ctx), 0) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, const PrecisionCtx& ctx) : BigFloat(to_prec(ctx), 0) {
  mpfr_set_q(value_, value.raw().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const mpz_class& value, const PrecisionCtx& ctx) : BigFloat(to_prec(ctx), 0) {
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
  check_finite("integer conversion");
}

BigFloat::BigFloat(const BigFloat& other, const PrecisionCtx& ctx) : BigFloat(to_prec(ctx), 0) {
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) : BigFloat(mpfr_get_prec(other.value_), 0) {
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept : BigFloat(MPFR_PREC_MIN, 0) { mpfr_swap(value_, other.value_); }

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::from_decimal(std::string_view text, const PrecisionCtx& ctx) {
  if (text.find('/') != std::string_view::npos) return rational_to_float(Rational::parse(text), ctx);
  BigFloat out(ctx);
  parse_into(out.value_, text, 10, "decimal");
  return out;
}

BigFloat BigFloat::from_hex(std::string_view text, const PrecisionCtx& ctx) {
  std::string_view body = text.substr(!text.empty() && text[0] == '-' ? 1 : 0);
  if (body.size() < 3 || body[0] != '0' || (body[1] != 'x' && body[1] != 'X')) {
    throw DomainError("hex float must start with 0x: '" + std::string(text) + "'");
  }
  BigFloat out(ctx);
  parse_into(out.value_, text, 0, "hex float");
  return out;
}

void BigFloat::check_finite(const char* what) const {
  if (!mpfr_number_p(value_)) throw DomainError(std::string("non-finite result in ") + what);
}

std::string BigFloat::to_hex() const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%Ra", value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string BigFloat::to_decimal(int digits) const {
  digits = std::max(digits, 1);
  if (is_zero()) return "0";
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(digits), value_, MPFR_RNDN);
  std::string mantissa(raw);
  mpfr_free_str(raw);

  std::string sign;
  if (mantissa[0] == '-') {
    sign = "-";
    mantissa.erase(0, 1);
  }
  // value = 0.MANTISSA * 10^exp10
  const long sci = static_cast<long>(exp10) - 1;
  const long n = static_cast<long>(mantissa.size());
  std::string body;
  if (sci >= -6 && sci <= 20) {
    if (exp10 <= 0) {
      body = "0." + std::string(static_cast<std::size_t>(-exp10), '0') + mantissa;
    } else if (exp10 >= n) {
      body = mantissa + std::string(static_cast<std::size_t>(exp10 - n), '0');
    } else {
      body = mantissa.substr(0, static_cast<std::size_t>(exp10)) + "." + mantissa.substr(static_cast<std::size_t>(exp10));
    }
  } else {
    body = mantissa.substr(0, 1);
    if (n > 1) body += "." + mantissa.substr(1);
    std::string e = std::to_string(sci < 0 ? -sci : sci);
    if (e.size() < 2) e = "0" + e;
    body += std::string("e") + (sci < 0 ? "-" : "+") + e;
  }
  return sign + body;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) { return *this = *this + rhs; }
BigFloat& BigFloat::operator-=(const BigFloat& rhs) { return *this = *this - rhs; }
BigFloat& BigFloat::operator*=(const BigFloat& rhs) { return *this = *this * rhs; }
BigFloat& BigFloat::operator/=(const BigFloat& rhs) { return *this = *this / rhs; }

BigFloat& BigFloat::operator+=(long rhs) {
  mpfr_add_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(long rhs) {
  mpfr_sub_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  check_finite("multiplication");
  return *this;
}

BigFloat& BigFloat::operator/=(long rhs) {
  if (rhs == 0) throw DomainError("division by zero");
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator+=(const Rational& rhs) {
  mpfr_add_q(value_, value_, rhs.raw().get_mpq_t(), MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const Rational& rhs) {
  mpfr_sub_q(value_, value_, rhs.raw().get_mpq_t(), MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const Rational& rhs) {
  mpfr_mul_q(value_, value_, rhs.raw().get_mpq_t(), MPFR_RNDN);
  check_finite("multiplication");
  return *this;
}

BigFloat& BigFloat::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  mpfr_div_q(value_, value_, rhs.raw().get_mpq_t(), MPFR_RNDN);
  check_finite("division");
  return *this;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_add); }
BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_sub); }
BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_mul); }

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  return binary(a, b, mpfr_div);
}

BigFloat operator-(long a, const BigFloat& b) {
  BigFloat out(b.ctx());
  mpfr_si_sub(out.raw(), a, b.raw(), MPFR_RNDN);
  return out;
}

BigFloat operator/(long a, const BigFloat& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  BigFloat out(b.ctx());
  mpfr_si_div(out.raw(), a, b.raw(), MPFR_RNDN);
  return out;
}

BigFloat operator-(const BigFloat& x) {
  BigFloat out(x);
  mpfr_neg(out.raw(), out.raw(), MPFR_RNDN);
  return out;
}

BigFloat elementary(Elementary fn, const BigFloat& x, const PrecisionCtx& ctx) {
  BigFloat out(ctx);
  switch (fn) {
    case Elementary::ln:
      if (x.sign() <= 0) throw DomainError("ln requires x > 0");
      mpfr_log(out.raw(), x.raw(), MPFR_RNDN);
      break;
    case Elementary::exp:
      mpfr_exp(out.raw(), x.raw(), MPFR_RNDN);
      break;
    case Elementary::sqrt:
      if (x.sign() < 0) throw DomainError("sqrt requires x >= 0");
      mpfr_sqrt(out.raw(), x.raw(), MPFR_RNDN);
      break;
    case Elementary::arctan:
      mpfr_atan(out.raw(), x.raw(), MPFR_RNDN);
      break;
  }
  if (!mpfr_number_p(out.raw())) throw DomainError("elementary function overflow");
  return out;
}

BigFloat pow(const BigFloat& x, const BigFloat& y, const PrecisionCtx& ctx) {
  if (x.sign() <= 0 && !mpfr_integer_p(y.raw())) throw DomainError("pow requires x > 0 for non-integral y");
  BigFloat out(ctx);
  mpfr_pow(out.raw(), x.raw(), y.raw(), MPFR_RNDN);
  if (!mpfr_number_p(out.raw())) throw DomainError("pow overflow");
  return out;
}

BigFloat pow(const BigFloat& x, long y, const PrecisionCtx& ctx) {
  if (x.is_zero() && y < 0) throw DomainError("pow of zero with negative exponent");
  BigFloat out(ctx);
  mpfr_pow_si(out.raw(), x.raw(), y, MPFR_RNDN);
  if (!mpfr_number_p(out.raw())) throw DomainError("pow overflow");
  return out;
}

BigFloat ln(const BigFloat& x, const PrecisionCtx& ctx) { return elementary(Elementary::ln, x, ctx); }
BigFloat exp(const BigFloat& x, const PrecisionCtx& ctx) { return elementary(Elementary::exp, x, ctx); }
BigFloat sqrt(const BigFloat& x, const PrecisionCtx& ctx) { return elementary(Elementary::sqrt, x, ctx); }
BigFloat atan(const BigFloat& x, const PrecisionCtx& ctx) { return elementary(Elementary::arctan, x, ctx); }

BigFloat log1p(const BigFloat& x, const PrecisionCtx& ctx) {
  if (x <= -1) throw DomainError("log1p requires x > -1");
  BigFloat out(ctx);
  mpfr_log1p(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigFloat expm1(const BigFloat& x, const PrecisionCtx& ctx) {
  BigFloat out(ctx);
  mpfr_expm1(out.raw(), x.raw(), MPFR_RNDN);
  if (!mpfr_number_p(out.raw())) throw DomainError("expm1 overflow");
  return out;
}

BigFloat log10(const BigFloat& x, const PrecisionCtx& ctx) {
  if (x.sign() <= 0) throw DomainError("log10 requires x > 0");
  BigFloat out(ctx);
  mpfr_log10(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigFloat abs(const BigFloat& x) {
  BigFloat out(x);
  mpfr_abs(out.raw(), out.raw(), MPFR_RNDN);
  return out;
}

BigFloat pi(const PrecisionCtx& ctx) {
  BigFloat out(ctx);
  mpfr_const_pi(out.raw(), MPFR_RNDN);
  return out;
}

BigFloat ln2(const PrecisionCtx& ctx) {
  BigFloat out(ctx);
  mpfr_const_log2(out.raw(), MPFR_RNDN);
  return out;
}

BigFloat half_ln_two_pi(const PrecisionCtx& ctx) {
  const PrecisionCtx wide = ctx.widened(16);
  BigFloat two_pi = pi(wide) * 2;
  return BigFloat(ln(two_pi, wide) / 2, ctx);
}

BigFloat rational_to_float(const Rational& q, const PrecisionCtx& ctx) { return BigFloat(q, ctx); }

BigFloat ulp(const BigFloat& x) {
  BigFloat out(x.ctx());
  if (x.is_zero()) return out;
  mpfr_set_ui_2exp(out.raw(), 1, mpfr_get_exp(x.raw()) - static_cast<mpfr_exp_t>(x.precision()), MPFR_RNDN);
  return out;
}

BigFloat power_of_two(long e, const PrecisionCtx& ctx) {
  BigFloat out(ctx);
  mpfr_set_ui_2exp(out.raw(), 1, e, MPFR_RNDN);
  return out;
}

std::string to_hex(const BigFloat& x) { return x.to_hex(); }

BigFloat from_hex(std::string_view text, const PrecisionCtx& ctx) { return BigFloat::from_hex(text, ctx); }

Estimate make_estimate(BigFloat value, const BigFloat& wide_value) {
  BigFloat diff = abs(wide_value - value);
  BigFloat error(value.ctx());
  mpfr_set(error.raw(), diff.raw(), MPFR_RNDU);
  BigFloat one_ulp = ulp(value);
  mpfr_add(error.raw(), error.raw(), one_ulp.raw(), MPFR_RNDU);

  long agreed = value.precision();
  if (value.is_zero()) {
    agreed = wide_value.is_zero() ? value.precision() : 0;
  } else if (!error.is_zero()) {
    agreed = static_cast<long>(mpfr_get_exp(value.raw()) - mpfr_get_exp(error.raw()));
    agreed = std::clamp(agreed, 0L, value.precision());
  }
  return Estimate{std::move(value), std::move(error), agreed};
}

}  // namespace stirling
