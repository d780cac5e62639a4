#include <gtest/gtest.h>

#include <map>
#include <set>

#include "stirling/errors.hpp"
#include "stirling/report.hpp"

using namespace stirling;

namespace {

const Report& report_at(long n_max, long bits) {
  static std::map<std::pair<long, long>, Report> cache;
  auto key = std::make_pair(n_max, bits);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, report_all(n_max, PrecisionCtx(bits), 12)).first;
  return it->second;
}

std::set<std::string> check_names(const Report& r) {
  std::set<std::string> out;
  for (const auto& row : r.rows) out.insert(row.check);
  return out;
}

}  // namespace

TEST(Report, EverythingPassesAt128Bits) {
  const Report& r = report_at(100, 128);
  for (const auto& row : r.rows) {
    EXPECT_EQ(row.status, CheckStatus::pass) << row.check << " " << row.params << " " << row.detail;
  }
  EXPECT_EQ(r.failed, 0);
  EXPECT_EQ(r.inconclusive, 0);
  EXPECT_EQ(r.passed, static_cast<long>(r.rows.size()));
}

TEST(Report, SmallerRangeHasFewerRowsSameChecks) {
  const Report& small = report_at(10, 128);
  const Report& large = report_at(100, 128);
  EXPECT_LT(small.rows.size(), large.rows.size());
  EXPECT_EQ(check_names(small), check_names(large));
}

TEST(Report, LowPrecisionIsInconclusiveNotFailing) {
  const Report& r = report_at(10, 64);
  EXPECT_GT(r.inconclusive, 0);
  EXPECT_EQ(r.failed, 0);
}

TEST(Report, JudgeUpper) {
  PrecisionCtx ctx(64);
  BigFloat one(1, ctx);
  BigFloat two(2, ctx);
  BigFloat tenth = BigFloat(Rational(1, 10), ctx);
  EXPECT_EQ(judge_upper(one, tenth, two), CheckStatus::pass);
  EXPECT_EQ(judge_upper(two + 1, tenth, two), CheckStatus::fail);
  EXPECT_EQ(judge_upper(two, tenth, two), CheckStatus::inconclusive);
}

TEST(Report, RejectsTinyRange) { EXPECT_THROW(report_all(9, PrecisionCtx(128)), DomainError); }
