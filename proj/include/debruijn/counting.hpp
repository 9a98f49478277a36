#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "debruijn/params.hpp"

namespace debruijn {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Exact counts A(n, k, j) of n-letter words over {0..k-1} with weight j,
// for all j in [0, n(k-1)]. Computed by dynamic programming over prefix
// length x weight with a sliding window sum; equivalently the coefficients
// of (1 + z + ... + z^(k-1))^n.
class CountTable {
 public:
  CountTable(std::int64_t n, std::int64_t k);

  std::int64_t word_length() const { return n_; }
  std::int64_t alphabet_size() const { return k_; }
  std::int64_t max_weight() const { return n_ * (k_ - 1); }

  // A(n, k, j); throws on j outside [0, n(k-1)].
  const BigInt& count(std::int64_t j) const;

  // Sum of A(n, k, j) over s <= j <= t (bounds clamped to the valid range).
  BigInt range_sum(std::int64_t s, std::int64_t t) const;

  // Row sum k^n, complement symmetry A(j) = A(n(k-1)-j), and unit extremes.
  bool self_check() const;

 private:
  std::int64_t n_;
  std::int64_t k_;
  std::vector<BigInt> counts_;
};

// A(n, k, j) for a single j.
BigInt count_words(std::int64_t n, std::int64_t k, std::int64_t j);

// |W| = sum_{j=s}^{t} A(n, k, j): the length any weight-range cycle must have.
BigInt cycle_length(const WeightRangeParams& p);

// With s = t - (k-1), the cycle of all words of weight in [s, t] lists every
// weight-t word exactly once plus lighter filler; this is the exact ratio
// (cycle length) / A(n, k, t) >= 1.
BigRational redundancy_ratio(std::int64_t n, std::int64_t k, std::int64_t t);

}  // namespace debruijn
