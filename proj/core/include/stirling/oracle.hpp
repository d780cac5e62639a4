#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stirling/bigfloat.hpp"

namespace stirling {

// Reference values for ln Γ and n! that share no code with the Stirling-series
// routines in series.hpp. Every value carries an explicit error bound.

enum class OracleMethod { exact_factorial, binet2, euler_limit, weierstrass };

std::string_view to_string(OracleMethod method);

struct OracleValue {
  BigFloat value;
  OracleMethod method;
  BigFloat error_bound;
};

/// Euler's constant as a 128-digit literal, verified once per process against
/// H_n − ln n − 1/(2n) at n = 10^6 (the residual there is about 1/(12n²)).
struct EulerGamma {
  std::string_view literal;
  BigFloat self_check_residual;
};

/// Throws ConvergenceError if the self-check residual is not below 1e−11.
const EulerGamma& euler_gamma();
BigFloat euler_gamma_value(const PrecisionCtx& ctx);

inline constexpr long kMaxExactFactorial = 100000;

/// ln(n!) from the exact integer n! followed by a single rounded logarithm.
OracleValue ln_factorial_exact(long n, const PrecisionCtx& ctx);

/// ln(0!), ln(1!), ..., ln(n_max!), each from the exact factorial.
std::vector<BigFloat> ln_factorial_table(long n_max, const PrecisionCtx& ctx);

/// The Binet integral J(z) = 2∫_0^∞ arctan(t/z)/(e^{2πt} − 1) dt, which equals
/// ln Γ(z) − 𝒫(z) for z > 0.
///
/// [0, T] is integrated with tanh-sinh nodes, halving the step until two
/// successive estimates agree; T is chosen so the closed-form tail bound
/// ∫_T^∞ min(t/z, π/2) e^{−2πt}/(1 − e^{−2πT}) dt is below the target.
OracleValue binet2_correction(const BigFloat& z, const PrecisionCtx& ctx);

/// ln Γ(z) by Binet's second formula.
OracleValue lngamma_binet2(const BigFloat& z, const PrecisionCtx& ctx);

/// ln(n! n^z / (z(z+1)···(z+n))). The error bound is three times the
/// observed change from n to 2n (the sequence converges like z(z+1)/(2n)).
OracleValue lngamma_euler_limit(const BigFloat& z, long n, const PrecisionCtx& ctx);

/// 1/Γ(z) from z e^{γz} ∏_{k=1}^{K} (1 + z/k) e^{−z/k}. The omitted factors
/// lie in (e^{−z²/(2K)}, 1), which gives the error bound.
OracleValue weierstrass_inv_gamma(const BigFloat& z, long factors, const PrecisionCtx& ctx);

/// Absolute residual of an identity between ln Γ values and the bound on it
/// implied by the oracle error bounds.
struct IdentityResidual {
  BigFloat residual;
  BigFloat error_bound;
};

/// |ln Γ(2z) − [(2z−1) ln 2 − ½ ln π + ln Γ(z) + ln Γ(z+½)]| with Binet values.
IdentityResidual check_duplication(const BigFloat& z, const PrecisionCtx& ctx);

/// |ln Γ(mz) − [(1−m) ln√(2π) + (mz−½) ln m + Σ_{k<m} ln Γ(z + k/m)]|, m in 2..5.
IdentityResidual check_multiplication(int m, const BigFloat& z, const PrecisionCtx& ctx);

/// Γ(k/2) in closed form: (k/2 − 1)! for even k, (k−2)!!/2^{(k−1)/2} √π for odd k.
BigFloat gamma_half_integer(long k, const PrecisionCtx& ctx);

}  // namespace stirling
