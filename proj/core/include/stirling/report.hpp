#pragma once

#include <string>
#include <vector>

#include "stirling/bigfloat.hpp"

namespace stirling {

// Aggregated verification run. Every row is a single judged check; values are
// already rendered as decimal strings so the output is a pure function of the
// inputs.

enum class CheckStatus { pass, fail, inconclusive };

std::string_view to_string(CheckStatus status);

struct ReportRow {
  std::string check;
  std::string params;
  CheckStatus status;
  std::string value;
  std::string threshold;
  std::string detail;
};

struct Report {
  long n_max;
  long precision_bits;
  std::vector<ReportRow> rows;
  long passed = 0;
  long failed = 0;
  long inconclusive = 0;
};

/// value ± error against an upper threshold: pass when value + error <= threshold,
/// fail when value − error > threshold, inconclusive otherwise.
CheckStatus judge_upper(const BigFloat& value, const BigFloat& error, const BigFloat& threshold);

/// Runs every check group, concurrently, and concatenates the rows in a fixed order.
/// Needs n_max >= 10.
Report report_all(long n_max, const PrecisionCtx& ctx, int digits = 20);

}  // namespace stirling
