#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stirling/bigfloat.hpp"

namespace stirling {

// Classical inequalities on
//
//   r_n = ln(n! e^n / (√(2πn) n^n))
//
// and on ln Γ(x) − 𝒫(x), evaluated from exact integer factorials (never from
// the Stirling series itself) and reported with margins.
//
//   robbins     1/(12n+1) < r_n < 1/(12n)                                n >= 1
//   maria       [12n + 3/(2(2n+1))]^{-1} < r_n                           n >= 1
//   hummel      11/12 < r_n + ½ln(2π) < 1                                n >= 2
//   nanjundiah  R_2(n) < r_n < R_1(n)                                    n >= 1
//   michel      |e^{r_n} − 1 − 1/(12n) − 1/(288n²)| <= 1/(360n³) + 1/(108n⁴)   n >= 3
//   impens      R_{2n}(x) < ln Γ(x) − 𝒫(x) < R_{2m+1}(x)                 x > 0
//
// A verdict is only reported when every margin exceeds the arithmetic error
// envelope, which is estimated by recomputing at 64 extra bits.

enum class BoundFamily { robbins, maria, hummel, nanjundiah, michel, impens };

std::string_view to_string(BoundFamily family);
std::optional<BoundFamily> parse_bound_family(std::string_view name);
/// Smallest n for which the family's inequality is claimed.
long min_valid_n(BoundFamily family);

struct SequencePoint {
  long n;
  BigFloat r_n;
  /// (n+½) ln n − n + 1 − ln(n!)
  BigFloat c_n;
  /// n^n e^{−n} / n!
  BigFloat v_n;
};

SequencePoint sequence_point(long n, const PrecisionCtx& ctx);

enum class Verdict { holds, fails, inconclusive };

std::string_view to_string(Verdict verdict);

struct BoundReport {
  BoundFamily family;
  long n;
  /// "n=12", or "x=0.5;n=1;m=2" for the sandwich.
  std::string label;
  std::optional<BigFloat> lhs;
  BigFloat mid;
  std::optional<BigFloat> rhs;
  bool holds;
  /// Smallest distance from mid to a bound; negative when violated.
  BigFloat margin;
  BigFloat error_bound;
  Verdict verdict;
};

/// Throws ValidityError below the family's stated range and InconclusiveError
/// when a margin is inside the error envelope.
BoundReport check_bound(BoundFamily family, long n, const PrecisionCtx& ctx);

/// Like check_bound for every n in [n_from, n_to], sharing one factorial ladder.
/// Inconclusive rows are returned with Verdict::inconclusive instead of throwing.
std::vector<BoundReport> survey_bound(BoundFamily family, long n_from, long n_to, const PrecisionCtx& ctx);

/// survey_bound, throwing InconclusiveError at the first undecidable row.
std::vector<BoundReport> check_bound_range(BoundFamily family, long n_from, long n_to, const PrecisionCtx& ctx);

/// Impens' sandwich with ln Γ(x) − 𝒫(x) from Binet's integral.
/// Throws InconclusiveError when a margin is within the oracle error bound.
BoundReport impens_sandwich(const BigFloat& x, int n, int m, const PrecisionCtx& ctx);

/// All (n, m) in [0, orders]² at the given points, one oracle evaluation per x.
std::vector<BoundReport> survey_impens(const std::vector<std::string>& xs, int orders, const PrecisionCtx& ctx);

/// Sample points used for the sandwich grid.
const std::vector<std::string>& impens_grid_points();

/// n·(y_{n+1}/y_n − 1) for y_n = √n V_n. Tends to 0, so y_n ~ C n^0 and V_n ~ C n^{−½}.
BigFloat aissen_ratio(long n, const PrecisionCtx& ctx);

}  // namespace stirling
