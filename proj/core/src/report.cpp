#include "stirling/report.hpp"

#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <optional>
#include <string>

#include "stirling/bernoulli.hpp"
#include "stirling/bounds.hpp"
#include "stirling/constants.hpp"
#include "stirling/errors.hpp"
#include "stirling/expansions.hpp"
#include "stirling/oracle.hpp"
#include "stirling/series.hpp"

namespace stirling {

namespace {

class Rows {
 public:
  Rows(const PrecisionCtx& ctx, int digits) : ctx_(ctx), digits_(digits) {}

  [[nodiscard]] const PrecisionCtx& ctx() const { return ctx_; }
  [[nodiscard]] std::string fmt(const BigFloat& x) const { return x.to_decimal(digits_); }
  BigFloat num(std::string_view text) const { return BigFloat::from_decimal(text, ctx_); }

  void add(std::string check, std::string params, CheckStatus status, std::string value, std::string threshold,
           std::string detail = {}) {
    rows_.push_back(ReportRow{std::move(check), std::move(params), status, std::move(value), std::move(threshold),
                              std::move(detail)});
  }

  void upper(std::string check, std::string params, const BigFloat& value, const BigFloat& error,
             const BigFloat& threshold) {
    add(std::move(check), std::move(params), judge_upper(value, error, threshold), fmt(value), fmt(threshold),
        "error_bound=" + fmt(error));
  }

  void boolean(std::string check, std::string params, bool ok, std::string value, std::string threshold,
               std::string detail = {}) {
    add(std::move(check), std::move(params), ok ? CheckStatus::pass : CheckStatus::fail, std::move(value),
        std::move(threshold), std::move(detail));
  }

  // Errors raised inside a check become a row instead of aborting the run.
  void guarded(const std::string& check, const std::string& params, const std::function<void()>& body) {
    try {
      body();
    } catch (const InconclusiveError& e) {
      add(check, params, CheckStatus::inconclusive, "", "", e.what());
    } catch (const Error& e) {
      add(check, params, CheckStatus::fail, "", "", e.what());
    }
  }

  std::vector<ReportRow> take() { return std::move(rows_); }

 private:
  PrecisionCtx ctx_;
  int digits_;
  std::vector<ReportRow> rows_;
};

using Group = std::vector<ReportRow> (*)(long n_max, const PrecisionCtx& ctx, int digits);

std::vector<ReportRow> constant_rows(long, const PrecisionCtx& ctx, int digits) {
  Rows out(ctx, digits);
  out.guarded("constants.min_gap", "N<=10", [&] {
    ConstantSequence seq = c_sequence(10, ctx);
    BigFloat best = abs(seq.entries.front().decimal - seq.reference);
    for (const auto& e : seq.entries) best = std::min(best, abs(e.decimal - seq.reference));
    out.upper("constants.min_gap", "N<=10", best, power_of_two(-(ctx.bits() - 8), ctx), out.num("6e-4"));

    ConstantEstimate est = best_constant_estimate(seq);
    BigFloat gap = abs(est.estimate - out.num("0.91894"));
    out.upper("constants.best_estimate", "N=" + std::to_string(est.n_best), gap,
              power_of_two(-(ctx.bits() - 8), ctx), out.num("2e-3"));
  });
  return out.take();
}

std::vector<ReportRow> bernoulli_rows(long, const PrecisionCtx& ctx, int digits) {
  Rows out(ctx, digits);
  constexpr int kMax = 128;
  out.guarded("bernoulli.factorial_identity", "k<=128", [&] {
    BernoulliTable table = bernoulli_table(kMax);
    long mismatches = 0;
    long nonzero_residuals = 0;
    for (int k = 0; k <= kMax; ++k) {
      if (table.a[k] * Rational(factorial(static_cast<unsigned long>(k))) != table.b[k]) ++mismatches;
      if (k == 0) continue;
      Rational residual(0);
      mpz_class binom;
      for (int j = 0; j <= k; ++j) {
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k + 1), static_cast<unsigned long>(j));
        residual += Rational(binom) * table.b[j];
      }
      if (!residual.is_zero()) ++nonzero_residuals;
    }
    out.boolean("bernoulli.factorial_identity", "k<=128", mismatches == 0, std::to_string(mismatches), "0");
    out.boolean("bernoulli.recurrence", "k<=128", nonzero_residuals == 0, std::to_string(nonzero_residuals), "0");
  });
  return out.take();
}

std::vector<ReportRow> bound_rows(long n_max, const PrecisionCtx& ctx, int digits) {
  Rows out(ctx, digits);
  for (BoundFamily family : {BoundFamily::robbins, BoundFamily::maria, BoundFamily::hummel, BoundFamily::nanjundiah,
                             BoundFamily::michel}) {
    const std::string check = "bounds." + std::string(to_string(family));
    out.guarded(check, "n<=" + std::to_string(n_max), [&] {
      for (const auto& r : survey_bound(family, min_valid_n(family), n_max, ctx)) {
        CheckStatus status = r.verdict == Verdict::holds   ? CheckStatus::pass
                             : r.verdict == Verdict::fails ? CheckStatus::fail
                                                           : CheckStatus::inconclusive;
        out.add(check, r.label, status, out.fmt(r.margin), "0", "error_bound=" + out.fmt(r.error_bound));
      }
    });
  }
  return out.take();
}

std::vector<ReportRow> impens_rows(long, const PrecisionCtx& ctx, int digits) {
  Rows out(ctx, digits);
  out.guarded("bounds.impens", "grid", [&] {
    for (const auto& r : survey_impens(impens_grid_points(), 6, ctx)) {
      CheckStatus status = r.verdict == Verdict::holds   ? CheckStatus::pass
                           : r.verdict == Verdict::fails ? CheckStatus::fail
                                                         : CheckStatus::inconclusive;
      out.add("bounds.impens", r.label, status, out.fmt(r.margin), "0", "error_bound=" + out.fmt(r.error_bound));
    }
  });
  return out.take();
}

const std::vector<std::string>& identity_grid() {
  static const std::vector<std::string> grid{"0.3", "0.5", "1", "2.5", "7", "20"};
  return grid;
}

std::vector<ReportRow> oracle_rows(long n_max, const PrecisionCtx& ctx, int digits) {
  Rows out(ctx, digits);
  const BigFloat tight = out.num("1e-30");
  for (long n = 2; n <= std::min(50L, n_max); ++n) {
    const std::string params = "n=" + std::to_string(n);
    out.guarded("oracle.binet2_vs_exact", params, [&] {
      OracleValue binet = lngamma_binet2(BigFloat(n, ctx), ctx);
      OracleValue exact = ln_factorial_exact(n - 1, ctx);
      out.upper("oracle.binet2_vs_exact", params, abs(binet.value - exact.value),
                binet.error_bound + exact.error_bound, tight);
    });
  }

  const BigFloat identity_tol = out.num("1e-25");
  for (const auto& z : identity_grid()) {
    out.guarded("oracle.duplication", "z=" + z, [&] {
      IdentityResidual r = check_duplication(out.num(z), ctx);
      out.upper("oracle.duplication", "z=" + z, r.residual, r.error_bound, identity_tol);
    });
    out.guarded("oracle.multiplication", "m=3;z=" + z, [&] {
      IdentityResidual r = check_multiplication(3, out.num(z), ctx);
      out.upper("oracle.multiplication", "m=3;z=" + z, r.residual, r.error_bound, identity_tol);
    });
  }

  // Slow oracles only have to agree with Binet's integral within their combined bounds.
  for (const std::string z : {"0.5", "1", "2.5"}) {
    out.guarded("oracle.euler_limit", "z=" + z, [&] {
      BigFloat zw = out.num(z);
      OracleValue reference = lngamma_binet2(zw, ctx);
      OracleValue euler = lngamma_euler_limit(zw, 10000, ctx);
      BigFloat diff = abs(euler.value - reference.value);
      BigFloat allowed = euler.error_bound + reference.error_bound;
      out.boolean("oracle.euler_limit", "z=" + z + ";n=10000", diff <= allowed, out.fmt(diff), out.fmt(allowed));
    });
    out.guarded("oracle.weierstrass", "z=" + z, [&] {
      BigFloat zw = out.num(z);
      OracleValue reference = lngamma_binet2(zw, ctx);
      OracleValue inv = weierstrass_inv_gamma(zw, 10000, ctx);
      // |1/Γ − e^{−lnΓ}| against the propagated bound of the reference.
      BigFloat expected = exp(-reference.value, ctx);
      BigFloat diff = abs(inv.value - expected);
      BigFloat allowed = inv.error_bound + expected * reference.error_bound * 2;
      out.boolean("oracle.weierstrass", "z=" + z + ";K=10000", diff <= allowed, out.fmt(diff), out.fmt(allowed));
    });
  }
  return out.take();
}

std::vector<ReportRow> series_rows(long, const PrecisionCtx& ctx, int digits) {
  Rows out(ctx, digits);
  for (const std::string z : {"0.5", "1", "2", "5", "10", "50"}) {
    out.guarded("series.optimal_truncation", "z=" + z, [&] {
      // The smallest term can sit far below one ulp of ln Γ(z); resolve it
      // with enough working bits before comparing.
      Approximation probe = optimal_truncation(out.num(z), ctx);
      const long needed = static_cast<long>(std::ceil(-std::log2(probe.omitted_term.to_double()) +
                                                      std::log2(std::abs(probe.value.to_double()) + 1))) +
                          64;
      const PrecisionCtx wp(std::max(ctx.bits(), needed));
      BigFloat zw = BigFloat::from_decimal(z, wp);
      Approximation approx = optimal_truncation(zw, wp);
      OracleValue reference = lngamma_binet2(zw, wp);
      BigFloat error = abs(approx.value - reference.value);
      out.upper("series.optimal_truncation", "z=" + z + ";N=" + std::to_string(approx.order_used), error,
                reference.error_bound, approx.omitted_term);
      if (z == "10") {
        out.upper("series.optimal_truncation_z10", "z=10", error, reference.error_bound, out.num("1e-19"));
      }
    });
  }

  for (long n : {10L, 100L}) {
    const std::string params = "n=" + std::to_string(n);
    out.guarded("series.stirling_original", params, [&] {
      const PrecisionCtx wp = ctx.widened(32);
      BigFloat exact = ln_factorial_exact(n, wp).value / ln(BigFloat(10, wp), wp);
      std::vector<BigFloat> errors;
      for (int terms = 1; terms <= 3; ++terms) {
        errors.push_back(abs(stirling_original_log10(BigFloat(n, wp), terms, wp) - exact));
      }
      bool decreasing = errors[1] < errors[0] && errors[2] < errors[1];
      out.boolean("series.stirling_original", params, decreasing, out.fmt(errors[2]), "decreasing",
                  "errors=" + out.fmt(errors[0]) + ";" + out.fmt(errors[1]) + ";" + out.fmt(errors[2]));
      if (n == 100) {
        out.upper("series.stirling_original_n100", params, BigFloat(errors[2], ctx), ulp(exact), out.num("1e-9"));
      }
    });
  }
  return out.take();
}

std::vector<ReportRow> expansion_rows(long n_max, const PrecisionCtx& ctx, int digits) {
  Rows out(ctx, digits);
  const std::string range = "n<=" + std::to_string(n_max);
  out.guarded("expansions.feller_identity", range, [&] {
    std::vector<BigFloat> residuals = feller_identity_residuals(n_max, ctx);
    BigFloat worst(ctx);
    for (const auto& r : residuals) worst = std::max(worst, r);
    out.upper("expansions.feller_identity", range, worst, ulp(worst), out.num("1e-28"));
  });

  out.guarded("expansions.feller_constant", "K=10000", [&] {
    BigFloat reference = half_ln_two_pi(ctx);
    BigFloat gap_k = abs(feller_constant(10000, ctx) - reference);
    BigFloat gap_2k = abs(feller_constant(20000, ctx) - reference);
    out.upper("expansions.feller_constant", "K=10000", gap_k, ulp(reference) * 64, out.num("1e-4"));
    BigFloat ratio = gap_2k / gap_k;
    bool halves = ratio >= out.num("0.4") && ratio <= out.num("0.6");
    out.boolean("expansions.feller_halving", "K=10000", halves, out.fmt(ratio), "[0.4,0.6]");
  });

  out.guarded("expansions.marsaglia_reversion", "K=50", [&] {
    MarsagliaSeries series = marsaglia_coeffs(50);
    long nonzero = 0;
    for (const auto& c : marsaglia_reversion_residual(series)) nonzero += c.is_zero() ? 0 : 1;
    bool leading = series.coeffs[0] == Rational(1) && series.coeffs[1] == Rational(1) &&
                   series.coeffs[2] == Rational(1, 3);
    out.boolean("expansions.marsaglia_reversion", "K=50", nonzero == 0 && leading, std::to_string(nonzero), "0",
                "b_2=" + series.coeffs[2].to_string());
  });

  out.guarded("expansions.marsaglia_factorial", "n=20", [&] {
    const PrecisionCtx wp = ctx.widened(32);
    BigFloat exact = exp(ln_factorial_exact(20, wp).value, wp);
    std::vector<BigFloat> errors;
    for (int k = 1; k <= 6; ++k) errors.push_back(abs(marsaglia_factorial(20, k, wp) / exact - 1));
    bool monotone = true;
    for (std::size_t i = 1; i < errors.size(); ++i) monotone = monotone && errors[i] <= errors[i - 1];
    monotone = monotone && errors[5] < errors[1];
    out.boolean("expansions.marsaglia_factorial", "n=20;K=1..6", monotone, out.fmt(BigFloat(errors[5], ctx)),
                "non-increasing");
  });

  for (const std::string n : {"0.75", "1", "2", "5", "10", "100"}) {
    out.guarded("expansions.namias", "n=" + n, [&] {
      IdentityResidual r = namias_residual(out.num(n), ctx);
      BigFloat allowed = r.error_bound * 10;
      out.boolean("expansions.namias", "n=" + n, r.residual <= allowed, out.fmt(r.residual), out.fmt(allowed));
    });
  }

  constexpr long kLast = 100000;
  // The long tail k = 10..K is shared by every starting point.
  const PrecisionCtx wide = ctx.widened(16);
  std::optional<BigFloat> tail;
  try {
    tail = mermin_log_partial_product(10, kLast, wide);
  } catch (const Error&) {
  }
  for (long n : {1L, 2L, 10L}) {
    const std::string params = "n=" + std::to_string(n) + ";K=100000";
    out.guarded("expansions.mermin", params, [&] {
      if (!tail) throw ConvergenceError("Mermin tail sum unavailable");
      BigFloat log_product = n < 10 ? BigFloat(*tail + mermin_log_partial_product(n, 9, wide), ctx) : BigFloat(*tail, ctx);
      BigFloat gap = abs(log_product - sequence_point(n, ctx).r_n);
      out.upper("expansions.mermin", params, gap, ulp(log_product) * 64, BigFloat(Rational(1, 12 * kLast), ctx));
    });
  }

  out.guarded("expansions.mermin_envelope", "5<=n<=100", [&] {
    BigFloat worst(ctx);
    for (long n = 5; n <= 100; ++n) {
      BigFloat scaled = abs(sequence_point(n, ctx).r_n - remainder(BigFloat(n, ctx), 3, ctx)) * pow(BigFloat(n, ctx), 7, ctx);
      worst = std::max(worst, scaled);
    }
    out.upper("expansions.mermin_envelope", "5<=n<=100", worst, ulp(worst), out.num("1e-3"));
  });
  return out.take();
}

}  // namespace

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::inconclusive: return "inconclusive";
  }
  return "unknown";
}

CheckStatus judge_upper(const BigFloat& value, const BigFloat& error, const BigFloat& threshold) {
  if (value + error <= threshold) return CheckStatus::pass;
  if (value - error > threshold) return CheckStatus::fail;
  return CheckStatus::inconclusive;
}

Report report_all(long n_max, const PrecisionCtx& ctx, int digits) {
  if (n_max < 10) throw DomainError("report needs n_max >= 10");
  if (n_max > kMaxExactFactorial) throw ResourceError("report limited to n_max <= " + std::to_string(kMaxExactFactorial));

  static constexpr Group kGroups[] = {constant_rows, bernoulli_rows, bound_rows,    impens_rows,
                                      oracle_rows,   series_rows,    expansion_rows};
  std::vector<std::future<std::vector<ReportRow>>> pending;
  for (Group group : kGroups) pending.push_back(std::async(std::launch::async, group, n_max, ctx, digits));

  Report report{n_max, ctx.bits(), {}};
  for (auto& f : pending) {
    for (auto& row : f.get()) {
      switch (row.status) {
        case CheckStatus::pass: ++report.passed; break;
        case CheckStatus::fail: ++report.failed; break;
        case CheckStatus::inconclusive: ++report.inconclusive; break;
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace stirling
