#pragma once

#include <vector>

#include "stirling/bigfloat.hpp"
#include "stirling/oracle.hpp"
#include "stirling/rational.hpp"

namespace stirling {

// ---------------------------------------------------------------------------
// Feller's telescoping identity
//
//   ln(n!) − ½ ln n = I(n) − I(½) + Σ_{k=1}^{n−1} (a_k − b_k) + a_n
//
// with I(x) = ∫_0^x ln t dt = x ln x − x and
//   a_k = ∫_{k−½}^{k} ln(k/t) dt,   b_k = ∫_{k}^{k+½} ln(t/k) dt.
// Both integrals are evaluated from the antiderivative t ln t − t.
// ---------------------------------------------------------------------------

struct FellerTerm {
  long k;
  BigFloat a_k;
  BigFloat b_k;
};

FellerTerm feller_term(long k, const PrecisionCtx& ctx);

/// |left side − right side| of the identity, with ln(n!) from the exact factorial.
BigFloat feller_identity_residual(long n, const PrecisionCtx& ctx);

/// Residuals for n = 1..n_max, sharing the running sums.
std::vector<BigFloat> feller_identity_residuals(long n_max, const PrecisionCtx& ctx);

/// Σ_{k=1}^{K} (a_k − b_k) − I(½), which tends to ½ln(2π) with an O(1/K) tail.
BigFloat feller_constant(long terms, const PrecisionCtx& ctx);

// ---------------------------------------------------------------------------
// Marsaglia–Marsaglia expansion
//
// G(z) = Σ b_k z^k solves G e^{1−G} = e^{−z²/2} on the branch G'(0) = 1.
// Writing G = 1 + w turns this into w − ln(1 + w) = z²/2, which is reverted
// exactly by Newton iteration in rational power-series arithmetic.
// ---------------------------------------------------------------------------

struct MarsagliaSeries {
  std::vector<Rational> coeffs;
};

inline constexpr int kMaxMarsagliaOrder = 200;

/// b_0..b_K exactly.
MarsagliaSeries marsaglia_coeffs(int max_order);

/// Coefficients of w − ln(1 + w) − z²/2 through z^{K+1} for w = G − 1 truncated
/// after z^K. All zero for a correct reversion.
std::vector<Rational> marsaglia_reversion_residual(const MarsagliaSeries& series);

/// n^{n+1} e^{−n} Σ_{k=1}^{K} k b_k M_k(n), where M_k(n) = ∫_ℝ z^{k−1} e^{−nz²/2} dz.
/// M_k = (2/n)^{k/2} Γ(k/2) for odd k and vanishes for even k, so only odd
/// k contribute.
BigFloat marsaglia_factorial(long n, int max_order, const PrecisionCtx& ctx);

// ---------------------------------------------------------------------------
// Namias: F(x) = Γ(x)/exp(𝒫(x)) satisfies
//   F(2n) / (F(n) F(n−½)) = √e (1 − 1/(2n))^n.
// ---------------------------------------------------------------------------

/// |F(2n)/(F(n)F(n−½)) − √e(1 − 1/(2n))^n| with F from Binet's integral; n > ½.
IdentityResidual namias_residual(const BigFloat& n, const PrecisionCtx& ctx);

// ---------------------------------------------------------------------------
// Mermin: e^{r_n} = ∏_{k=n}^{∞} e^{−1} (1 + 1/k)^{k+½}
// ---------------------------------------------------------------------------

/// Σ_{k=n}^{K} [(k+½) ln(1 + 1/k) − 1], the log of the partial product.
BigFloat mermin_log_partial_product(long n, long last, const PrecisionCtx& ctx);

}  // namespace stirling
