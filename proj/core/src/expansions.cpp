#include "stirling/expansions.hpp"

#include <cmath>
#include <string>

#include "stirling/errors.hpp"

namespace stirling {

namespace {

// Power series with exact rational coefficients, truncated to a fixed length.
using Series = std::vector<mpq_class>;

Series multiply(const Series& a, const Series& b, std::size_t len) {
  Series out(len, 0);
  for (std::size_t i = 0; i < std::min(a.size(), len); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < std::min(b.size(), len - i); ++j) out[i + j] += a[i] * b[j];
  }
  for (auto& c : out) c.canonicalize();
  return out;
}

Series inverse(const Series& a, std::size_t len) {
  if (a.empty() || sgn(a[0]) == 0) throw DomainError("series inverse needs a non-zero constant term");
  Series out(len, 0);
  out[0] = 1 / a[0];
  for (std::size_t k = 1; k < len; ++k) {
    mpq_class acc = 0;
    for (std::size_t j = 1; j <= std::min(k, a.size() - 1); ++j) acc += a[j] * out[k - j];
    out[k] = -acc / a[0];
  }
  return out;
}

// ln(1 + w) for w(0) = 0, as ∫ w'/(1 + w).
Series log1p_series(const Series& w, std::size_t len) {
  Series derivative(len, 0);
  for (std::size_t k = 1; k < std::min(w.size(), len + 1); ++k) derivative[k - 1] = w[k] * static_cast<long>(k);
  Series one_plus = w;
  one_plus.resize(len, 0);
  one_plus[0] += 1;
  Series quotient = multiply(derivative, inverse(one_plus, len), len);
  Series out(len, 0);
  for (std::size_t k = 1; k < len; ++k) out[k] = quotient[k - 1] / static_cast<long>(k);
  return out;
}

// w − ln(1 + w) − z²/2
Series reversion_defect(const Series& w, std::size_t len) {
  Series log_part = log1p_series(w, len);
  Series out(len, 0);
  for (std::size_t k = 0; k < len; ++k) out[k] = (k < w.size() ? w[k] : mpq_class(0)) - log_part[k];
  if (len > 2) out[2] -= mpq_class(1, 2);
  return out;
}

bool all_zero(const Series& s) {
  for (const auto& c : s) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

// a_k and b_k from t ln t − t, at a precision with room for the cancellation.
FellerTerm feller_term_at(long k, const PrecisionCtx& wp) {
  BigFloat kw(k, wp);
  BigFloat log_k = ln(kw, wp);
  BigFloat below = kw - Rational(1, 2);
  BigFloat above = kw + Rational(1, 2);
  BigFloat half(Rational(1, 2), wp);
  BigFloat k_log_k = kw * log_k;
  BigFloat a = log_k / 2 - k_log_k + below * ln(below, wp) + half;
  BigFloat b = above * ln(above, wp) - k_log_k - log_k / 2 - half;
  return FellerTerm{k, std::move(a), std::move(b)};
}

// I(½) = ½ ln ½ − ½
BigFloat integral_log_half(const PrecisionCtx& wp) { return -(ln2(wp) / 2) - BigFloat(Rational(1, 2), wp); }

PrecisionCtx feller_precision(long n, const PrecisionCtx& ctx) {
  return ctx.widened(64 + static_cast<long>(std::ceil(std::log2(static_cast<double>(n) + 2))));
}

}  // namespace

FellerTerm feller_term(long k, const PrecisionCtx& ctx) {
  if (k < 1) throw DomainError("Feller terms start at k = 1");
  FellerTerm wide = feller_term_at(k, feller_precision(k, ctx));
  return FellerTerm{k, BigFloat(wide.a_k, ctx), BigFloat(wide.b_k, ctx)};
}

std::vector<BigFloat> feller_identity_residuals(long n_max, const PrecisionCtx& ctx) {
  if (n_max < 1) throw DomainError("Feller identity needs n >= 1");
  const PrecisionCtx wp = feller_precision(n_max, ctx);
  std::vector<BigFloat> ln_fact = ln_factorial_table(n_max, wp);
  const BigFloat i_half = integral_log_half(wp);

  std::vector<BigFloat> out;
  out.reserve(static_cast<std::size_t>(n_max));
  BigFloat partial(wp);  // Σ_{k<n} (a_k − b_k)
  for (long n = 1; n <= n_max; ++n) {
    FellerTerm term = feller_term_at(n, wp);
    BigFloat nw(n, wp);
    BigFloat log_n = ln(nw, wp);
    BigFloat lhs = ln_fact[static_cast<std::size_t>(n)] - log_n / 2;
    BigFloat rhs = nw * log_n - nw - i_half + partial + term.a_k;
    out.emplace_back(abs(lhs - rhs), ctx);
    partial += term.a_k - term.b_k;
  }
  return out;
}

BigFloat feller_identity_residual(long n, const PrecisionCtx& ctx) {
  return feller_identity_residuals(n, ctx).back();
}

BigFloat feller_constant(long terms, const PrecisionCtx& ctx) {
  if (terms < 1) throw DomainError("Feller constant needs at least one term");
  const PrecisionCtx wp = feller_precision(terms, ctx);
  BigFloat sum(wp);
  for (long k = 1; k <= terms; ++k) {
    FellerTerm term = feller_term_at(k, wp);
    sum += term.a_k - term.b_k;
  }
  return BigFloat(sum - integral_log_half(wp), ctx);
}

MarsagliaSeries marsaglia_coeffs(int max_order) {
  if (max_order < 0) throw DomainError("Marsaglia order must be non-negative");
  if (max_order > kMaxMarsagliaOrder) {
    throw ResourceError("Marsaglia coefficients limited to K <= " + std::to_string(kMaxMarsagliaOrder));
  }
  const std::size_t keep = static_cast<std::size_t>(max_order) + 1;  // z^0..z^K
  const std::size_t len = keep + 1;                                  // defect through z^{K+1}

  Series w(keep, 0);
  if (keep > 1) w[1] = 1;  // branch G'(0) = 1
  for (int iteration = 0; iteration < 64; ++iteration) {
    Series defect = reversion_defect(w, len);
    if (all_zero(defect)) break;
    // Newton step δ = defect·(1 + w)/w, dividing by w = z·u with u(0) = 1.
    Series one_plus = w;
    one_plus.resize(len, 0);
    one_plus[0] += 1;
    Series numerator = multiply(defect, one_plus, len);
    Series shifted(numerator.begin() + 1, numerator.end());
    Series u(w.begin() + 1, w.end());
    Series delta = multiply(shifted, inverse(u, keep), keep);
    for (std::size_t k = 0; k < keep; ++k) w[k] -= delta[k];
    if (iteration == 63) throw ConvergenceError("Marsaglia reversion did not converge");
  }

  MarsagliaSeries out;
  out.coeffs.reserve(keep);
  for (std::size_t k = 0; k < keep; ++k) out.coeffs.emplace_back(k == 0 ? mpq_class(1) : w[k]);
  return out;
}

std::vector<Rational> marsaglia_reversion_residual(const MarsagliaSeries& series) {
  if (series.coeffs.empty()) throw DomainError("empty Marsaglia series");
  Series w;
  w.reserve(series.coeffs.size());
  for (std::size_t k = 0; k < series.coeffs.size(); ++k) w.push_back(k == 0 ? mpq_class(0) : series.coeffs[k].raw());
  Series defect = reversion_defect(w, series.coeffs.size() + 1);
  std::vector<Rational> out;
  out.reserve(defect.size());
  for (auto& c : defect) out.emplace_back(c);
  return out;
}

BigFloat marsaglia_factorial(long n, int max_order, const PrecisionCtx& ctx) {
  if (n < 2) throw DomainError("Marsaglia expansion needs n >= 2");
  if (max_order < 1) throw DomainError("Marsaglia expansion needs K >= 1");
  MarsagliaSeries series = marsaglia_coeffs(max_order);
  const PrecisionCtx wp = ctx.widened(32);
  BigFloat nw(n, wp);
  BigFloat two_over_n = BigFloat(2, wp) / nw;
  BigFloat sum(wp);
  for (int k = 1; k <= max_order; k += 2) {
    BigFloat moment = pow(two_over_n, BigFloat(Rational(k, 2), wp), wp) * gamma_half_integer(k, wp);
    sum += moment * series.coeffs[static_cast<std::size_t>(k)] * k;
  }
  BigFloat prefactor = exp((nw + 1) * ln(nw, wp) - nw, wp);
  return BigFloat(prefactor * sum, ctx);
}

IdentityResidual namias_residual(const BigFloat& n, const PrecisionCtx& ctx) {
  if (n <= BigFloat(Rational(1, 2), n.ctx())) throw DomainError("Namias' functional equation needs n > 1/2");
  const PrecisionCtx wp = ctx.widened(32);
  BigFloat nw(n, wp);
  OracleValue at_2n = binet2_correction(nw * 2, wp);
  OracleValue at_n = binet2_correction(nw, wp);
  OracleValue at_shift = binet2_correction(nw - Rational(1, 2), wp);

  BigFloat ratio = exp(at_2n.value - at_n.value - at_shift.value, wp);
  BigFloat half(Rational(1, 2), wp);
  BigFloat rhs = exp(half, wp) * exp(nw * log1p(-(half / nw), wp), wp);

  // d(e^x) = e^x dx; doubled for slack over the linearization.
  BigFloat log_error = at_2n.error_bound + at_n.error_bound + at_shift.error_bound;
  BigFloat rounding = (ratio + abs(rhs)) * power_of_two(-(wp.bits() - 4), wp);
  BigFloat bound = ratio * log_error * 2 + rounding;
  BigFloat residual(abs(ratio - rhs), ctx);
  BigFloat total = BigFloat(bound, ctx) + ulp(residual);
  return IdentityResidual{std::move(residual), std::move(total)};
}

BigFloat mermin_log_partial_product(long n, long last, const PrecisionCtx& ctx) {
  if (n < 1) throw DomainError("Mermin product starts at n >= 1");
  if (last < n) throw DomainError("Mermin product needs K >= n");
  const PrecisionCtx wp = ctx.widened(32 + static_cast<long>(std::ceil(std::log2(static_cast<double>(last) + 2))));
  BigFloat sum(wp);
  for (long k = n; k <= last; ++k) {
    BigFloat kw(k, wp);
    sum += (kw + Rational(1, 2)) * log1p(1L / kw, wp) - 1;
  }
  return BigFloat(sum, ctx);
}

}  // namespace stirling
