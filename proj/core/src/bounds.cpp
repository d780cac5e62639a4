#include "stirling/bounds.hpp"

#include <algorithm>
#include <string>

#include "stirling/errors.hpp"
#include "stirling/oracle.hpp"
#include "stirling/series.hpp"

namespace stirling {

namespace {

// The sandwich gaps shrink like the first omitted term, far below one ulp of
// ln Γ at large x, so both sides and Binet's integral carry a few guard bits.
constexpr long kSandwichGuardBits = 32;

struct Sides {
  std::optional<BigFloat> lhs;
  BigFloat mid;
  std::optional<BigFloat> rhs;
};

BigFloat r_from_ln_factorial(long n, const BigFloat& ln_fact, const PrecisionCtx& ctx) {
  BigFloat nw(n, ctx);
  BigFloat log_n = ln(nw, ctx);
  return BigFloat(ln_fact, ctx) + n - half_ln_two_pi(ctx) - log_n / 2 - nw * log_n;
}

Sides family_sides(BoundFamily family, long n, const BigFloat& ln_fact, const PrecisionCtx& ctx) {
  BigFloat r = r_from_ln_factorial(n, ln_fact, ctx);
  switch (family) {
    case BoundFamily::robbins:
      return {BigFloat(Rational(1, 12 * n + 1), ctx), r, BigFloat(Rational(1, 12 * n), ctx)};
    case BoundFamily::maria: {
      Rational denom = Rational(12 * n) + Rational(3, 2 * (2 * n + 1));
      return {BigFloat(Rational(1) / denom, ctx), r, std::nullopt};
    }
    case BoundFamily::hummel:
      return {BigFloat(Rational(11, 12), ctx), r + half_ln_two_pi(ctx), BigFloat(1, ctx)};
    case BoundFamily::nanjundiah: {
      BigFloat nw(n, ctx);
      return {remainder(nw, 2, ctx), r, remainder(nw, 1, ctx)};
    }
    case BoundFamily::michel: {
      mpz_class n2 = mpz_class(n) * n;
      Rational expansion = Rational(1) + Rational(mpz_class(1), mpz_class(12 * n)) + Rational(mpz_class(1), 288 * n2);
      BigFloat mid = abs(expm1(r, ctx) + 1 - expansion);
      Rational bound = Rational(mpz_class(1), 360 * n2 * n) + Rational(mpz_class(1), 108 * n2 * n2);
      return {std::nullopt, mid, BigFloat(bound, ctx)};
    }
    case BoundFamily::impens:
      break;
  }
  throw DomainError("the impens family is evaluated by impens_sandwich");
}

BigFloat max_abs_diff(const BigFloat& a, const BigFloat& b) { return abs(b - a); }

BoundReport assemble(BoundFamily family, long n, std::string label, Sides sides, BigFloat error) {
  const PrecisionCtx ctx = sides.mid.ctx();
  error += ulp(sides.mid);
  std::optional<BigFloat> margin;
  bool holds = true;
  bool inconclusive = false;
  auto consider = [&](const BigFloat& gap) {
    if (gap.sign() <= 0) holds = false;
    if (abs(gap) <= error) inconclusive = true;
    if (!margin || gap < *margin) margin = gap;
  };
  if (sides.lhs) consider(sides.mid - *sides.lhs);
  if (sides.rhs) consider(*sides.rhs - sides.mid);

  Verdict verdict = inconclusive ? Verdict::inconclusive : (holds ? Verdict::holds : Verdict::fails);
  return BoundReport{family,
                     n,
                     std::move(label),
                     std::move(sides.lhs),
                     std::move(sides.mid),
                     std::move(sides.rhs),
                     holds && !inconclusive,
                     margin ? std::move(*margin) : BigFloat(ctx),
                     std::move(error),
                     verdict};
}

// Evaluates at ctx and ctx + 64 bits; the component-wise disagreement is the error.
BoundReport evaluate_family(BoundFamily family, long n, const BigFloat& ln_fact, const BigFloat& ln_fact_wide,
                            const PrecisionCtx& ctx) {
  Sides narrow = family_sides(family, n, ln_fact, ctx);
  Sides wide = family_sides(family, n, ln_fact_wide, ctx.widened(64));
  BigFloat error = max_abs_diff(narrow.mid, wide.mid);
  if (narrow.lhs) error = std::max(error, max_abs_diff(*narrow.lhs, *wide.lhs) + ulp(*narrow.lhs));
  if (narrow.rhs) error = std::max(error, max_abs_diff(*narrow.rhs, *wide.rhs) + ulp(*narrow.rhs));
  return assemble(family, n, "n=" + std::to_string(n), std::move(narrow), BigFloat(error, ctx) * 2);
}

void require_valid(BoundFamily family, long n) {
  if (family == BoundFamily::impens) throw DomainError("the impens family is evaluated by impens_sandwich");
  if (n < min_valid_n(family)) {
    throw ValidityError(std::string(to_string(family)) + " inequality is stated for n >= " +
                        std::to_string(min_valid_n(family)) + ", got n = " + std::to_string(n));
  }
  if (n > kMaxExactFactorial) throw ResourceError("bound checks limited to n <= " + std::to_string(kMaxExactFactorial));
}

void throw_if_inconclusive(const BoundReport& report) {
  if (report.verdict == Verdict::inconclusive) {
    throw InconclusiveError(std::string(to_string(report.family)) + " at " + report.label + ": margin " +
                            report.margin.to_decimal(6) + " is within the error bound " +
                            report.error_bound.to_decimal(6));
  }
}

BoundReport sandwich_with(const BigFloat& x, const std::string& x_label, int n, int m, const OracleValue& correction,
                          const PrecisionCtx& ctx) {
  if (n < 0 || m < 0) throw DomainError("sandwich orders must be non-negative");
  Estimate lower = cross_checked([&](const PrecisionCtx& c) { return remainder(x, 2 * n, c); }, ctx);
  Estimate upper = cross_checked([&](const PrecisionCtx& c) { return remainder(x, 2 * m + 1, c); }, ctx);
  BigFloat error = correction.error_bound + std::max(lower.error, upper.error);
  Sides sides{std::move(lower.value), BigFloat(correction.value, ctx), std::move(upper.value)};
  std::string label = "x=" + x_label + ";n=" + std::to_string(n) + ";m=" + std::to_string(m);
  return assemble(BoundFamily::impens, n, std::move(label), std::move(sides), std::move(error));
}

}  // namespace

std::string_view to_string(BoundFamily family) {
  switch (family) {
    case BoundFamily::robbins: return "robbins";
    case BoundFamily::maria: return "maria";
    case BoundFamily::hummel: return "hummel";
    case BoundFamily::nanjundiah: return "nanjundiah";
    case BoundFamily::michel: return "michel";
    case BoundFamily::impens: return "impens";
  }
  return "unknown";
}

std::optional<BoundFamily> parse_bound_family(std::string_view name) {
  for (BoundFamily f : {BoundFamily::robbins, BoundFamily::maria, BoundFamily::hummel, BoundFamily::nanjundiah,
                        BoundFamily::michel, BoundFamily::impens}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

long min_valid_n(BoundFamily family) {
  switch (family) {
    case BoundFamily::hummel: return 2;
    case BoundFamily::michel: return 3;
    default: return 1;
  }
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::holds: return "pass";
    case Verdict::fails: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

SequencePoint sequence_point(long n, const PrecisionCtx& ctx) {
  if (n < 1) throw DomainError("sequence point needs n >= 1");
  const PrecisionCtx wp = ctx.widened(32);
  BigFloat ln_fact = ln_factorial_exact(n, wp).value;
  BigFloat nw(n, wp);
  BigFloat log_n = ln(nw, wp);
  BigFloat r = r_from_ln_factorial(n, ln_fact, wp);
  BigFloat c = (nw + Rational(1, 2)) * log_n - nw + 1 - ln_fact;
  BigFloat v = exp(nw * log_n - nw - ln_fact, wp);
  return SequencePoint{n, BigFloat(r, ctx), BigFloat(c, ctx), BigFloat(v, ctx)};
}

BoundReport check_bound(BoundFamily family, long n, const PrecisionCtx& ctx) {
  require_valid(family, n);
  BigFloat ln_fact = ln_factorial_exact(n, ctx).value;
  BigFloat ln_fact_wide = ln_factorial_exact(n, ctx.widened(64)).value;
  BoundReport report = evaluate_family(family, n, ln_fact, ln_fact_wide, ctx);
  throw_if_inconclusive(report);
  return report;
}

std::vector<BoundReport> survey_bound(BoundFamily family, long n_from, long n_to, const PrecisionCtx& ctx) {
  require_valid(family, n_from);
  require_valid(family, std::max(n_from, n_to));
  std::vector<BoundReport> out;
  if (n_to < n_from) return out;
  std::vector<BigFloat> ladder = ln_factorial_table(n_to, ctx);
  std::vector<BigFloat> ladder_wide = ln_factorial_table(n_to, ctx.widened(64));
  out.reserve(static_cast<std::size_t>(n_to - n_from + 1));
  for (long n = n_from; n <= n_to; ++n) {
    const auto i = static_cast<std::size_t>(n);
    out.push_back(evaluate_family(family, n, ladder[i], ladder_wide[i], ctx));
  }
  return out;
}

std::vector<BoundReport> check_bound_range(BoundFamily family, long n_from, long n_to, const PrecisionCtx& ctx) {
  std::vector<BoundReport> out = survey_bound(family, n_from, n_to, ctx);
  for (const auto& report : out) throw_if_inconclusive(report);
  return out;
}

BoundReport impens_sandwich(const BigFloat& x, int n, int m, const PrecisionCtx& ctx) {
  if (x.sign() <= 0) throw DomainError("sandwich requires x > 0");
  const PrecisionCtx wp = ctx.widened(kSandwichGuardBits);
  BigFloat xw(x, wp);
  OracleValue correction = binet2_correction(xw, wp);
  BoundReport report = sandwich_with(xw, x.to_decimal(6), n, m, correction, wp);
  throw_if_inconclusive(report);
  return report;
}

std::vector<BoundReport> survey_impens(const std::vector<std::string>& xs, int orders, const PrecisionCtx& ctx) {
  const PrecisionCtx wp = ctx.widened(kSandwichGuardBits);
  std::vector<BoundReport> out;
  for (const auto& text : xs) {
    BigFloat x = BigFloat::from_decimal(text, wp);
    if (x.sign() <= 0) throw DomainError("sandwich requires x > 0");
    OracleValue correction = binet2_correction(x, wp);
    for (int n = 0; n <= orders; ++n) {
      for (int m = 0; m <= orders; ++m) out.push_back(sandwich_with(x, text, n, m, correction, wp));
    }
  }
  return out;
}

const std::vector<std::string>& impens_grid_points() {
  static const std::vector<std::string> points{"0.3", "0.5", "1", "2", "5", "10", "50"};
  return points;
}

BigFloat aissen_ratio(long n, const PrecisionCtx& ctx) {
  if (n < 1) throw DomainError("Aissen ratio needs n >= 1");
  const PrecisionCtx wp = ctx.widened(64);
  // ln y_k = ½ ln k + k ln k − k − ln k!
  auto log_y = [&](long k) {
    BigFloat kw(k, wp);
    BigFloat log_k = ln(kw, wp);
    return log_k / 2 + kw * log_k - kw - ln_factorial_exact(k, wp).value;
  };
  BigFloat step = log_y(n + 1) - log_y(n);
  return BigFloat(expm1(step, wp) * n, ctx);
}

}  // namespace stirling
