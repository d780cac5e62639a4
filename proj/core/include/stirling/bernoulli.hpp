#pragma once

#include <mutex>
#include <shared_mutex>
#include <vector>

#include "stirling/rational.hpp"

namespace stirling {

/// Snapshot of exact B_0..B_K and a_0..a_K.
struct BernoulliTable {
  int max_index = 0;
  std::vector<Rational> b;
  std::vector<Rational> a;
};

/// Memoized exact Bernoulli numbers B_k and Stirling-series coefficients
/// a_k, each produced by its own recurrence:
///
///   B_0 = 1,  sum_{j=0}^{k} C(k+1, j) B_j = 0          (k >= 1)
///   a_0 = 1,  sum_{j=0}^{k} a_j / (k+1-j)! = 0          (k >= 1)
///
/// so that k! a_k == B_k is a genuine cross-check. Entries are computed once;
/// growth is geometric and serialized behind a lock, readers never see a
/// partially written row. Indices above `cap` raise ResourceError.
class BernoulliCache {
 public:
  static constexpr int kDefaultCap = 512;

  explicit BernoulliCache(int cap = kDefaultCap);

  BernoulliCache(const BernoulliCache&) = delete;
  BernoulliCache& operator=(const BernoulliCache&) = delete;

  [[nodiscard]] int cap() const { return cap_; }

  Rational bernoulli(int k);
  Rational series_coeff_a(int k);
  BernoulliTable table(int max_index);

 private:
  void ensure(int k);
  void extend_to(int size);

  int cap_;
  std::shared_mutex mutex_;
  std::vector<Rational> b_;
  std::vector<Rational> a_;
};

/// Process-wide cache with the default cap.
BernoulliCache& default_bernoulli_cache();

Rational bernoulli(int k);
Rational series_coeff_a(int k);
BernoulliTable bernoulli_table(int max_index);

}  // namespace stirling
