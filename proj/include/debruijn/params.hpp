#pragma once

#include <algorithm>
#include <cstdint>

#include "debruijn/word.hpp"

namespace debruijn {

// Parameters for cycles of n-letter words over {0..k-1} whose weight lies in
// [s, t]. The constructor enforces 0 <= s, s + k - 1 <= t and t <= n(k-1);
// with that window width every vertex of the overlap digraph has equal in-
// and outdegree and the digraph is connected, so an Eulerian circuit exists.
struct WeightRangeParams {
  std::int64_t n;  // word length, >= 2
  std::int64_t k;  // alphabet size, >= 2
  std::int64_t s;  // lower weight bound
  std::int64_t t;  // upper weight bound

  WeightRangeParams(std::int64_t n, std::int64_t k, std::int64_t s, std::int64_t t);

  // Vertices are (n-1)-letter words with weight in [vertex_weight_min, t].
  std::int64_t vertex_weight_min() const { return std::max<std::int64_t>(0, s - (k - 1)); }
  std::int64_t vertex_weight_max() const { return t; }
  std::int64_t vertex_length() const { return n - 1; }

  bool operator==(const WeightRangeParams&) const = default;
};

}  // namespace debruijn
