#pragma once

#include "stirling/bigfloat.hpp"

namespace stirling {

/// A truncated Stirling-series value for ln Γ(z).
struct Approximation {
  BigFloat value;
  /// Number N of Bernoulli correction terms included.
  int order_used;
  /// |B_{2N+2}| / ((2N+2)(2N+1) z^{2N+1}), the first term left out.
  BigFloat omitted_term;
  long ctx_bits;
};

/// Largest truncation order whose omitted term is still inside the Bernoulli table.
int max_series_order();

/// 𝒫(z) = z ln z − z − ½ ln z + ½ ln(2π), for z > 0.
BigFloat main_term(const BigFloat& z, const PrecisionCtx& ctx);

/// The k-th correction B_{2k} / (2k(2k−1) z^{2k−1}), k >= 1.
BigFloat stirling_term(int k, const BigFloat& z, const PrecisionCtx& ctx);

/// R_N(z) = Σ_{k=1}^{N} B_{2k} / (2k(2k−1) z^{2k−1}); R_0 = 0.
BigFloat remainder(const BigFloat& z, int order, const PrecisionCtx& ctx);

/// 𝒫(z) + R_N(z) together with the first omitted term.
Approximation lngamma_stirling(const BigFloat& z, int order, const PrecisionCtx& ctx);

/// Individual terms of the formal solution of Γ(z+1) = zΓ(z):
/// f_0 = z ln z − z, f_1 = −½ ln z, f_{2k} = stirling_term(k), odd k >= 3 give 0.
/// Σ_{k=0}^{2N} f_k = 𝒫(z) + R_N(z) − ½ ln(2π); the constant enters through 𝒫 only.
///
/// The denominator is 2k(2k−1), matching R_N and the classical C_N values;
/// the 2k(2k+1) that appears in some printed forms is a misprint.
BigFloat f_term(int k, const BigFloat& z, const PrecisionCtx& ctx);

/// Stops the divergent series just before its smallest term: N* is the first
/// local minimum of |term N+1| over N, scanning from N = 0. The omitted term
/// bounds the error for real z > 0 because successive truncations bracket
/// ln Γ(z).
Approximation optimal_truncation(const BigFloat& z, const PrecisionCtx& ctx);

/// Stirling's 1730 base-10 series for log10(n!) around n + ½, using only its
/// three displayed term groups (terms = 1, 2 or 3):
///   (n+½)log(n+½) − a(n+½) + ½log(2π),  − a/(24(n+½)),  + 7a/(2880(n+½)³)
/// with a = 1/ln 10.
BigFloat stirling_original_log10(const BigFloat& n, int terms, const PrecisionCtx& ctx);

/// De Moivre's form: the series for ln((n−1)!) = ln Γ(n), n >= 1.
Approximation ln_factorial_stirling(long n, int order, const PrecisionCtx& ctx);

}  // namespace stirling
