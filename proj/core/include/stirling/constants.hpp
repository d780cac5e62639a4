#pragma once

#include <vector>

#include "stirling/bigfloat.hpp"
#include "stirling/rational.hpp"

namespace stirling {

// Two ways of pinning the additive constant ½ln(2π) of the series.
//
// 1. Impose Γ(1) = 1 on every term of the formal series. This gives
//      C_N = 1 − Σ_{k=1}^{N} B_{2k} / (2k(2k−1)),
//    which drifts toward ½ln(2π) ≈ 0.91894 for small N and then diverges.
// 2. Substitute the two-term asymptotic form into Legendre's duplication
//    formula Γ(2z) = 2^{2z−1} π^{−½} Γ(z) Γ(z+½), which forces
//      e^{C−½} (1 + 1/(2z))^z = √(2π)
//    and hence C → ½ln(2π) as z → ∞.

struct ConstantEntry {
  int n;
  Rational exact;
  BigFloat decimal;
};

struct ConstantSequence {
  std::vector<ConstantEntry> entries;
  /// ½ln(2π) at the working precision.
  BigFloat reference;
};

/// C_1..C_{n_max}, exact, plus renderings at `ctx`.
ConstantSequence c_sequence(int n_max, const PrecisionCtx& ctx = PrecisionCtx());

/// C such that e^{C−½}(1 + 1/(2z))^z = √(2π), i.e. ½ln(2π) + ½ − z ln(1 + 1/(2z)). Needs z > ½.
BigFloat duplication_constant(const BigFloat& z, const PrecisionCtx& ctx);

struct ConstantEstimate {
  int n_best;
  BigFloat estimate;
};

/// Picks the entry reached by the smallest increment |C_N − C_{N−1}|, i.e. the
/// last value before the partial sums start moving apart. Ties go to the
/// earliest index.
ConstantEstimate best_constant_estimate(const ConstantSequence& sequence);

/// Five-significant-digit rendering used for the C_N table.
std::string five_digit(const BigFloat& x);

}  // namespace stirling
