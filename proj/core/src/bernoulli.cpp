#include "stirling/bernoulli.hpp"

#include <algorithm>
#include <string>

#include "stirling/errors.hpp"

namespace stirling {

BernoulliCache::BernoulliCache(int cap) : cap_(cap) {
  if (cap < 0) throw ResourceError("negative Bernoulli cap");
}

void BernoulliCache::ensure(int k) {
  if (k < 0) throw DomainError("Bernoulli index must be non-negative");
  if (k > cap_) {
    throw ResourceError("Bernoulli index " + std::to_string(k) + " exceeds table cap " + std::to_string(cap_));
  }
  {
    std::shared_lock lock(mutex_);
    if (static_cast<int>(b_.size()) > k) return;
  }
  std::unique_lock lock(mutex_);
  const int current = static_cast<int>(b_.size());
  if (current > k) return;
  extend_to(std::min(cap_ + 1, std::max({k + 1, 2 * current, 16})));
}

// Caller holds the unique lock.
void BernoulliCache::extend_to(int size) {
  std::vector<Rational> b = b_;
  std::vector<Rational> a = a_;
  b.reserve(static_cast<std::size_t>(size));
  a.reserve(static_cast<std::size_t>(size));

  mpz_class binom;
  for (int k = static_cast<int>(b.size()); k < size; ++k) {
    if (k == 0) {
      b.emplace_back(1);
      a.emplace_back(1);
      continue;
    }
    // (k+1) B_k = -sum_{j<k} C(k+1, j) B_j
    mpq_class sum = 0;
    for (int j = 0; j < k; ++j) {
      if (b[static_cast<std::size_t>(j)].is_zero()) continue;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k + 1), static_cast<unsigned long>(j));
      sum += binom * b[static_cast<std::size_t>(j)].raw();
    }
    b.emplace_back(mpq_class(-sum / (k + 1)));

    // a_k = -sum_{j<k} a_j / (k+1-j)!
    mpq_class acc = 0;
    mpz_class fact = 1;  // (k+1-j)! built up as j decreases from k-1
    for (int j = k - 1; j >= 0; --j) {
      fact *= (k + 1 - j);
      acc += a[static_cast<std::size_t>(j)].raw() / fact;
    }
    a.emplace_back(mpq_class(-acc));
  }
  b_ = std::move(b);
  a_ = std::move(a);
}

Rational BernoulliCache::bernoulli(int k) {
  ensure(k);
  std::shared_lock lock(mutex_);
  return b_[static_cast<std::size_t>(k)];
}

Rational BernoulliCache::series_coeff_a(int k) {
  ensure(k);
  std::shared_lock lock(mutex_);
  return a_[static_cast<std::size_t>(k)];
}

BernoulliTable BernoulliCache::table(int max_index) {
  ensure(max_index);
  std::shared_lock lock(mutex_);
  BernoulliTable out;
  out.max_index = max_index;
  out.b.assign(b_.begin(), b_.begin() + max_index + 1);
  out.a.assign(a_.begin(), a_.begin() + max_index + 1);
  return out;
}

BernoulliCache& default_bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

Rational bernoulli(int k) { return default_bernoulli_cache().bernoulli(k); }
Rational series_coeff_a(int k) { return default_bernoulli_cache().series_coeff_a(k); }
BernoulliTable bernoulli_table(int max_index) { return default_bernoulli_cache().table(max_index); }

}  // namespace stirling
