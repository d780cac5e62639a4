#include "stirling/oracle.hpp"

#include <cmath>
#include <string>

#include "stirling/errors.hpp"
#include "stirling/rational.hpp"

namespace stirling {

namespace {

constexpr long kGuardBits = 32;
constexpr int kMaxQuadratureLevel = 16;

// Euler's constant, 128 digits after the decimal point (truncated).
constexpr std::string_view kEulerGammaLiteral =
    "0.57721566490153286060651209008240243104215933593992359880576723488486772677766467"
    "093694706329174674951463144724980708248096050401";

void require_positive(const BigFloat& z, const char* what) {
  if (z.sign() <= 0) throw DomainError(std::string(what) + " requires z > 0");
}

// (z − ½) ln z − z + ½ ln(2π), written out here so the oracle shares nothing
// with series.cpp.
BigFloat binet_main_term(const BigFloat& z, const PrecisionCtx& wp) {
  BigFloat zw(z, wp);
  BigFloat two_pi = pi(wp) * 2;
  BigFloat half = BigFloat(Rational(1, 2), wp);
  return (zw - half) * ln(zw, wp) - zw + ln(two_pi, wp) * half;
}

// 2^{-bits} scaled by |x| (or by 1 when x is zero); a generic rounding envelope.
BigFloat relative_eps(const BigFloat& x, long bits, const PrecisionCtx& ctx) {
  BigFloat mag = x.is_zero() ? BigFloat(1, ctx) : abs(BigFloat(x, ctx));
  return mag * power_of_two(-bits, ctx);
}

// Closed-form bound on 2∫_T^∞ arctan(t/z)/(e^{2πt} − 1) dt.
BigFloat binet_tail_bound(const BigFloat& z, const BigFloat& t_end, const PrecisionCtx& wp) {
  BigFloat two_pi = pi(wp) * 2;
  BigFloat decay = exp(-(two_pi * t_end), wp);
  // arctan(x) <= x
  BigFloat linear = decay * (t_end / two_pi + 1L / (two_pi * two_pi)) / BigFloat(z, wp);
  // arctan(x) <= π/2
  BigFloat flat = decay / 4;
  BigFloat bound = linear < flat ? linear : flat;
  return bound * 2 / (1L - decay);
}

struct Quadrature {
  BigFloat value;
  BigFloat error;
};

// Tanh-sinh rule on [0, t_end] for f(t) = arctan(t/z)/expm1(2πt):
// t = t_end/(1 + e^{−2s}), s = (π/2) sinh u, dt/du = (t_end/2)(π/2) cosh u sech² s.
class BinetIntegrand {
 public:
  BinetIntegrand(const BigFloat& z, const BigFloat& t_end, const PrecisionCtx& wp)
      : z_(z, wp), t_end_(t_end, wp), half_pi_(pi(wp) / 2), two_pi_(pi(wp) * 2), wp_(wp) {}

  // Weighted integrand at node u.
  BigFloat at(const BigFloat& u) const {
    BigFloat s(wp_), c(wp_), sech(wp_);
    mpfr_sinh_cosh(s.raw(), c.raw(), u.raw(), MPFR_RNDN);
    s = s * half_pi_;
    mpfr_sech(sech.raw(), s.raw(), MPFR_RNDN);
    BigFloat t = t_end_ / (exp(-(s * 2), wp_) + 1);
    if (t.is_zero()) return BigFloat(wp_);
    BigFloat weight = t_end_ / 2 * half_pi_ * c * sech * sech;
    BigFloat f = atan(t / z_, wp_) / expm1(two_pi_ * t, wp_);
    return weight * f;
  }

  // Weight envelope at u times the integrand's supremum 1/(2πz).
  BigFloat envelope(const BigFloat& u) const {
    BigFloat s(wp_), c(wp_), sech(wp_);
    mpfr_sinh_cosh(s.raw(), c.raw(), u.raw(), MPFR_RNDN);
    s = s * half_pi_;
    mpfr_sech(sech.raw(), s.raw(), MPFR_RNDN);
    return t_end_ / 2 * half_pi_ * c * sech * sech / (two_pi_ * z_);
  }

 private:
  BigFloat z_;
  BigFloat t_end_;
  BigFloat half_pi_;
  BigFloat two_pi_;
  PrecisionCtx wp_;
};

Quadrature integrate_binet(const BigFloat& z, const BigFloat& t_end, const BigFloat& target,
                           const PrecisionCtx& wp) {
  BinetIntegrand f(z, t_end, wp);

  // Truncate the u-range where the weights have died out.
  BigFloat u_max(1, wp);
  const BigFloat cutoff = target / 64;
  while (f.envelope(u_max) >= cutoff) u_max += Rational(1, 4);

  long count = 0;
  BigFloat sum(wp);
  BigFloat previous(wp);
  for (int level = 0; level <= kMaxQuadratureLevel; ++level) {
    const long denom = 1L << level;
    BigFloat h = BigFloat(Rational(1, denom), wp);
    // Nodes j*h with j odd (all j at level 0).
    const long j_max = static_cast<long>(std::ceil(u_max.to_double() * static_cast<double>(denom)));
    for (long j = (level == 0 ? 0 : 1); j <= j_max; j += (level == 0 ? 1 : 2)) {
      BigFloat u = h * j;
      sum += f.at(u);
      ++count;
      if (j != 0) {
        sum += f.at(-u);
        ++count;
      }
    }
    BigFloat estimate = sum * h * 2;
    if (level >= 3) {
      BigFloat diff = abs(estimate - previous);
      if (diff <= target) {
        BigFloat roundoff = relative_eps(estimate, wp.bits(), wp) * count;
        return Quadrature{std::move(estimate), diff + roundoff};
      }
    }
    previous = std::move(estimate);
  }
  throw ConvergenceError("Binet quadrature did not converge at " + std::to_string(wp.bits()) + " bits");
}

BigFloat round_up_to(const BigFloat& x, const PrecisionCtx& ctx) {
  BigFloat out(ctx);
  mpfr_set(out.raw(), x.raw(), MPFR_RNDU);
  return out;
}

}  // namespace

std::string_view to_string(OracleMethod method) {
  switch (method) {
    case OracleMethod::exact_factorial: return "exact_factorial";
    case OracleMethod::binet2: return "binet2";
    case OracleMethod::euler_limit: return "euler_limit";
    case OracleMethod::weierstrass: return "weierstrass";
  }
  return "unknown";
}

const EulerGamma& euler_gamma() {
  static const EulerGamma gamma = [] {
    const PrecisionCtx ctx(128);
    constexpr unsigned long n = 1000000;
    BigFloat harmonic(ctx);
    BigFloat term(ctx);
    for (unsigned long k = n; k >= 1; --k) {  // smallest terms first
      mpfr_set_ui(term.raw(), 1, MPFR_RNDN);
      mpfr_div_ui(term.raw(), term.raw(), k, MPFR_RNDN);
      harmonic += term;
    }
    BigFloat estimate = harmonic - ln(BigFloat(static_cast<long>(n), ctx), ctx) -
                        BigFloat(Rational(1, 2 * static_cast<long>(n)), ctx);
    BigFloat residual = abs(estimate - BigFloat::from_decimal(kEulerGammaLiteral, ctx));
    if (residual >= BigFloat::from_decimal("1e-11", ctx)) {
      throw ConvergenceError("Euler's constant literal failed its harmonic-sum self-check");
    }
    return EulerGamma{kEulerGammaLiteral, std::move(residual)};
  }();
  return gamma;
}

BigFloat euler_gamma_value(const PrecisionCtx& ctx) {
  return BigFloat::from_decimal(euler_gamma().literal, ctx);
}

OracleValue ln_factorial_exact(long n, const PrecisionCtx& ctx) {
  if (n < 0) throw DomainError("factorial of a negative integer");
  if (n > kMaxExactFactorial) {
    throw ResourceError("exact factorial limited to n <= " + std::to_string(kMaxExactFactorial));
  }
  const PrecisionCtx wp = ctx.widened(kGuardBits);
  BigFloat value(ln(BigFloat(factorial(static_cast<unsigned long>(n)), wp), wp), ctx);
  BigFloat bound = ulp(value) * 2;
  return OracleValue{std::move(value), OracleMethod::exact_factorial, std::move(bound)};
}

std::vector<BigFloat> ln_factorial_table(long n_max, const PrecisionCtx& ctx) {
  if (n_max < 0) throw DomainError("factorial table size must be non-negative");
  if (n_max > kMaxExactFactorial) {
    throw ResourceError("exact factorial limited to n <= " + std::to_string(kMaxExactFactorial));
  }
  const PrecisionCtx wp = ctx.widened(kGuardBits);
  std::vector<BigFloat> out;
  out.reserve(static_cast<std::size_t>(n_max + 1));
  out.emplace_back(ctx);  // ln 0! = 0
  mpz_class fact = 1;
  for (long n = 1; n <= n_max; ++n) {
    fact *= static_cast<unsigned long>(n);
    out.emplace_back(ln(BigFloat(fact, wp), wp), ctx);
  }
  return out;
}

OracleValue binet2_correction(const BigFloat& z, const PrecisionCtx& ctx) {
  require_positive(z, "Binet's formula");
  const PrecisionCtx wp = ctx.widened(kGuardBits);
  BigFloat zw(z, wp);

  // Absolute target, scaled by 1/(12z + 1) to track the size of J(z).
  BigFloat target = power_of_two(-(ctx.bits() + 8), wp) / (zw * 12 + 1);

  BigFloat t_end(1, wp);
  while (binet_tail_bound(zw, t_end, wp) >= target / 4) t_end += 1;
  BigFloat tail = binet_tail_bound(zw, t_end, wp);

  Quadrature q = integrate_binet(zw, t_end, target, wp);
  BigFloat value(q.value, ctx);
  BigFloat bound = round_up_to(q.error + tail, ctx) + ulp(value);
  return OracleValue{std::move(value), OracleMethod::binet2, std::move(bound)};
}

OracleValue lngamma_binet2(const BigFloat& z, const PrecisionCtx& ctx) {
  require_positive(z, "Binet's formula");
  const PrecisionCtx wp = ctx.widened(kGuardBits);
  OracleValue correction = binet2_correction(z, wp);
  BigFloat main = binet_main_term(z, wp);
  BigFloat total = main + correction.value;

  // Rounding in the main term: a few ulps of its largest constituent.
  BigFloat zw(z, wp);
  BigFloat scale = abs(zw * ln(zw, wp)) + abs(zw) + 2;
  BigFloat main_error = scale * power_of_two(-(wp.bits() - 3), wp);

  BigFloat value(total, ctx);
  BigFloat bound = round_up_to(correction.error_bound + main_error, ctx) + ulp(value);
  return OracleValue{std::move(value), OracleMethod::binet2, std::move(bound)};
}

OracleValue lngamma_euler_limit(const BigFloat& z, long n, const PrecisionCtx& ctx) {
  require_positive(z, "Euler's limit");
  if (n < 2) throw DomainError("Euler's limit needs n >= 2");
  if (2 * n > kMaxExactFactorial) {
    throw ResourceError("Euler's limit limited to n <= " + std::to_string(kMaxExactFactorial / 2));
  }
  const long extra = static_cast<long>(std::ceil(std::log2(static_cast<double>(2 * n + 2))));
  const PrecisionCtx wp = ctx.widened(kGuardBits + extra);
  BigFloat zw(z, wp);

  // ln(m! m^z) − ln ∏_{k=0}^{m}(z+k), for m = n and m = 2n in one pass.
  auto partial = [&](long m, const BigFloat& log_product) {
    BigFloat log_fact = ln(BigFloat(factorial(static_cast<unsigned long>(m)), wp), wp);
    return log_fact + zw * ln(BigFloat(m, wp), wp) - log_product;
  };

  BigFloat product = zw;
  for (long k = 1; k <= n; ++k) product *= zw + k;
  BigFloat at_n = partial(n, ln(product, wp));
  for (long k = n + 1; k <= 2 * n; ++k) product *= zw + k;
  BigFloat at_2n = partial(2 * n, ln(product, wp));

  BigFloat rounding = BigFloat(2 * n + 2, wp) * power_of_two(-(wp.bits() - 2), wp) * (abs(at_n) + 1);
  BigFloat value(at_n, ctx);
  BigFloat bound = round_up_to(abs(at_2n - at_n) * 3 + rounding, ctx) + ulp(value);
  return OracleValue{std::move(value), OracleMethod::euler_limit, std::move(bound)};
}

OracleValue weierstrass_inv_gamma(const BigFloat& z, long factors, const PrecisionCtx& ctx) {
  require_positive(z, "Weierstrass product");
  if (factors < 1) throw DomainError("Weierstrass product needs at least one factor");
  const long extra = static_cast<long>(std::ceil(std::log2(static_cast<double>(factors + 2))));
  const PrecisionCtx wp = ctx.widened(kGuardBits + extra);
  BigFloat zw(z, wp);

  BigFloat log_sum = ln(zw, wp) + euler_gamma_value(wp) * zw;
  for (long k = 1; k <= factors; ++k) {
    BigFloat x = zw / k;
    log_sum += log1p(x, wp) - x;
  }
  BigFloat product = exp(log_sum, wp);

  // Omitted factors: ln ∏_{k>K} lies in (−z²/(2K), 0).
  BigFloat tail_rel = expm1(zw * zw / (2 * factors), wp);
  // The literal is truncated after 128 digits.
  BigFloat literal_rel = zw * BigFloat::from_decimal("1e-128", wp);
  BigFloat rounding_rel = BigFloat(factors + 4, wp) * power_of_two(-(wp.bits() - 2), wp);

  BigFloat value(product, ctx);
  BigFloat bound = round_up_to(product * (tail_rel + literal_rel + rounding_rel), ctx) + ulp(value);
  return OracleValue{std::move(value), OracleMethod::weierstrass, std::move(bound)};
}

IdentityResidual check_duplication(const BigFloat& z, const PrecisionCtx& ctx) {
  require_positive(z, "duplication check");
  const PrecisionCtx wp = ctx.widened(kGuardBits);
  BigFloat zw(z, wp);
  OracleValue lhs = lngamma_binet2(zw * 2, wp);
  OracleValue g1 = lngamma_binet2(zw, wp);
  OracleValue g2 = lngamma_binet2(zw + Rational(1, 2), wp);
  BigFloat rhs = (zw * 2 - 1) * ln2(wp) - ln(pi(wp), wp) / 2 + g1.value + g2.value;

  BigFloat residual(abs(lhs.value - rhs), ctx);
  BigFloat rounding = relative_eps(abs(lhs.value) + abs(rhs) + 1, wp.bits() - 4, wp);
  BigFloat bound = round_up_to(lhs.error_bound + g1.error_bound + g2.error_bound + rounding, ctx) + ulp(residual);
  return IdentityResidual{std::move(residual), std::move(bound)};
}

IdentityResidual check_multiplication(int m, const BigFloat& z, const PrecisionCtx& ctx) {
  require_positive(z, "multiplication check");
  if (m < 2 || m > 5) throw DomainError("multiplication check supports m in 2..5");
  const PrecisionCtx wp = ctx.widened(kGuardBits);
  BigFloat zw(z, wp);
  BigFloat mw(m, wp);

  OracleValue lhs = lngamma_binet2(zw * m, wp);
  BigFloat two_pi = pi(wp) * 2;
  BigFloat rhs = ln(two_pi, wp) * (1 - m) / 2 + (zw * m - Rational(1, 2)) * ln(mw, wp);
  BigFloat bound_sum = lhs.error_bound;
  for (int k = 0; k < m; ++k) {
    OracleValue g = lngamma_binet2(zw + Rational(k, m), wp);
    rhs += g.value;
    bound_sum += g.error_bound;
  }

  BigFloat residual(abs(lhs.value - rhs), ctx);
  BigFloat rounding = relative_eps(abs(lhs.value) + abs(rhs) + 1, wp.bits() - 4, wp);
  BigFloat bound = round_up_to(bound_sum + rounding, ctx) + ulp(residual);
  return IdentityResidual{std::move(residual), std::move(bound)};
}

BigFloat gamma_half_integer(long k, const PrecisionCtx& ctx) {
  if (k < 1) throw DomainError("Γ(k/2) requires k >= 1");
  if (k > 20000) throw ResourceError("Γ(k/2) limited to k <= 20000");
  const PrecisionCtx wp = ctx.widened(kGuardBits);
  if (k % 2 == 0) return BigFloat(factorial(static_cast<unsigned long>(k / 2 - 1)), ctx);
  mpz_class double_fact = 1;  // (k−2)!!
  for (long j = k - 2; j > 1; j -= 2) double_fact *= static_cast<unsigned long>(j);
  BigFloat value = BigFloat(double_fact, wp) * sqrt(pi(wp), wp) * power_of_two(-(k - 1) / 2, wp);
  return BigFloat(value, ctx);
}

}  // namespace stirling
