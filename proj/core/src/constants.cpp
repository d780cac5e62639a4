#include "stirling/constants.hpp"

#include <string>

#include "stirling/bernoulli.hpp"
#include "stirling/errors.hpp"
#include "stirling/series.hpp"

namespace stirling {

ConstantSequence c_sequence(int n_max, const PrecisionCtx& ctx) {
  if (n_max < 1) throw DomainError("C_N sequence needs n_max >= 1");
  if (n_max > max_series_order()) {
    throw ResourceError("C_N beyond N = " + std::to_string(max_series_order()) + " needs more Bernoulli numbers");
  }
  ConstantSequence out{{}, half_ln_two_pi(ctx)};
  out.entries.reserve(static_cast<std::size_t>(n_max));
  Rational c(1);
  for (int n = 1; n <= n_max; ++n) {
    c -= bernoulli(2 * n) / Rational(2L * n * (2L * n - 1));
    out.entries.push_back(ConstantEntry{n, c, BigFloat(c, ctx)});
  }
  return out;
}

BigFloat duplication_constant(const BigFloat& z, const PrecisionCtx& ctx) {
  if (z <= BigFloat(Rational(1, 2), z.ctx())) throw DomainError("duplication constant requires z > 1/2");
  const PrecisionCtx wide = ctx.widened(32);
  BigFloat zw(z, wide);
  BigFloat gap = BigFloat(Rational(1, 2), wide) - zw * log1p(1L / (zw * 2), wide);
  return BigFloat(half_ln_two_pi(wide) + gap, ctx);
}

ConstantEstimate best_constant_estimate(const ConstantSequence& sequence) {
  const auto& e = sequence.entries;
  if (e.size() < 2) throw DomainError("best constant estimate needs at least two entries");
  std::size_t best = 1;
  Rational best_step = abs(e[1].exact - e[0].exact);
  for (std::size_t i = 2; i < e.size(); ++i) {
    Rational step = abs(e[i].exact - e[i - 1].exact);
    if (step < best_step) {
      best_step = step;
      best = i;
    }
  }
  return ConstantEstimate{e[best].n, e[best].decimal};
}

std::string five_digit(const BigFloat& x) { return x.to_decimal(5); }

}  // namespace stirling
