#include "stirling/series.hpp"

#include <string>

#include "stirling/bernoulli.hpp"
#include "stirling/errors.hpp"

namespace stirling {

namespace {

void require_positive(const BigFloat& z, const char* what) {
  if (z.sign() <= 0) throw DomainError(std::string(what) + " requires z > 0");
}

void require_order(int order) {
  if (order < 0) throw DomainError("truncation order must be non-negative");
  if (order > max_series_order()) {
    throw ResourceError("truncation order " + std::to_string(order) + " exceeds the Bernoulli table cap");
  }
}

Rational term_coefficient(int k) { return bernoulli(2 * k) / Rational(2L * k * (2L * k - 1)); }

}  // namespace

int max_series_order() { return default_bernoulli_cache().cap() / 2 - 1; }

BigFloat main_term(const BigFloat& z, const PrecisionCtx& ctx) {
  require_positive(z, "main term");
  const PrecisionCtx wide = ctx.widened(16);
  BigFloat zw(z, wide);
  BigFloat log_z = ln(zw, wide);
  BigFloat value = (zw - Rational(1, 2)) * log_z;
  value = value - zw + half_ln_two_pi(wide);
  return BigFloat(value, ctx);
}

BigFloat stirling_term(int k, const BigFloat& z, const PrecisionCtx& ctx) {
  require_positive(z, "Stirling term");
  if (k < 1) throw DomainError("Stirling term index starts at 1");
  if (2 * k > default_bernoulli_cache().cap()) {
    throw ResourceError("Stirling term " + std::to_string(k) + " needs a Bernoulli number beyond the table cap");
  }
  const PrecisionCtx wide = ctx.widened(16);
  BigFloat coeff(term_coefficient(k), wide);
  BigFloat power = pow(BigFloat(z, wide), 2L * k - 1, wide);
  return BigFloat(coeff / power, ctx);
}

BigFloat remainder(const BigFloat& z, int order, const PrecisionCtx& ctx) {
  require_positive(z, "remainder");
  require_order(order);
  const PrecisionCtx wide = ctx.widened(16);
  BigFloat sum(wide);
  for (int k = 1; k <= order; ++k) sum += stirling_term(k, z, wide);
  return BigFloat(sum, ctx);
}

Approximation lngamma_stirling(const BigFloat& z, int order, const PrecisionCtx& ctx) {
  require_positive(z, "ln gamma series");
  require_order(order);
  const PrecisionCtx wide = ctx.widened(16);
  BigFloat value = main_term(z, wide) + remainder(z, order, wide);
  BigFloat omitted = abs(stirling_term(order + 1, z, ctx));
  return Approximation{BigFloat(value, ctx), order, std::move(omitted), ctx.bits()};
}

BigFloat f_term(int k, const BigFloat& z, const PrecisionCtx& ctx) {
  require_positive(z, "f_k");
  if (k < 0) throw DomainError("f_k index must be non-negative");
  if (k == 0) {
    const PrecisionCtx wide = ctx.widened(16);
    BigFloat zw(z, wide);
    return BigFloat(zw * ln(zw, wide) - zw, ctx);
  }
  if (k == 1) return -(ln(z, ctx) / 2);
  if (k % 2 == 1) return BigFloat(ctx);
  return stirling_term(k / 2, z, ctx);
}

Approximation optimal_truncation(const BigFloat& z, const PrecisionCtx& ctx) {
  require_positive(z, "optimal truncation");
  const int cap = max_series_order();
  // |term N+1| for N = 0, 1, ...; stop at the first N whose successor is no smaller.
  int order = 0;
  BigFloat current = abs(stirling_term(1, z, ctx));
  while (order + 1 < cap) {
    BigFloat next = abs(stirling_term(order + 2, z, ctx));
    if (next >= current) break;
    current = std::move(next);
    ++order;
  }
  return lngamma_stirling(z, order, ctx);
}

BigFloat stirling_original_log10(const BigFloat& n, int terms, const PrecisionCtx& ctx) {
  if (terms < 1 || terms > 3) throw DomainError("Stirling's original series has 1, 2 or 3 displayed terms");
  if (n.sign() <= 0) throw DomainError("Stirling's original series requires n > 0");
  const PrecisionCtx wide = ctx.widened(16);
  BigFloat x = BigFloat(n, wide) + Rational(1, 2);
  BigFloat a = 1L / ln(BigFloat(10, wide), wide);

  BigFloat value = x * log10(x, wide) - a * x + log10(pi(wide) * 2, wide) / 2;
  if (terms >= 2) value -= a / (x * 24);
  if (terms >= 3) value += (a * 7) / (pow(x, 3L, wide) * 2880);
  return BigFloat(value, ctx);
}

Approximation ln_factorial_stirling(long n, int order, const PrecisionCtx& ctx) {
  if (n < 1) throw DomainError("ln((n-1)!) series requires n >= 1");
  return lngamma_stirling(BigFloat(n, ctx), order, ctx);
}

}  // namespace stirling
