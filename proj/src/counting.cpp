#include "debruijn/counting.hpp"

#include <stdexcept>
#include <string>

namespace debruijn {

CountTable::CountTable(std::int64_t n, std::int64_t k) : n_(n), k_(k) {
  if (n < 1) throw std::invalid_argument("word length must satisfy n >= 1");
  if (k < 2) throw std::invalid_argument("alphabet size must satisfy k >= 2");

  // row[j] = number of length-i prefixes of weight j; extend one letter at a
  // time keeping a sliding sum of the k previous entries.
  std::vector<BigInt> row(1, BigInt(1));
  for (std::int64_t i = 1; i <= n; ++i) {
    std::vector<BigInt> next(static_cast<std::size_t>(i * (k - 1)) + 1);
    BigInt window = 0;
    for (std::int64_t j = 0; j < static_cast<std::int64_t>(next.size()); ++j) {
      if (j < static_cast<std::int64_t>(row.size())) window += row[static_cast<std::size_t>(j)];
      if (j - k >= 0 && j - k < static_cast<std::int64_t>(row.size())) {
        window -= row[static_cast<std::size_t>(j - k)];
      }
      next[static_cast<std::size_t>(j)] = window;
    }
    row = std::move(next);
  }
  counts_ = std::move(row);
}

const BigInt& CountTable::count(std::int64_t j) const {
  if (j < 0 || j > max_weight()) {
    throw std::invalid_argument("weight " + std::to_string(j) +
                                " outside [0, " + std::to_string(max_weight()) + "]");
  }
  return counts_[static_cast<std::size_t>(j)];
}

BigInt CountTable::range_sum(std::int64_t s, std::int64_t t) const {
  BigInt total = 0;
  for (std::int64_t j = std::max<std::int64_t>(s, 0); j <= std::min(t, max_weight()); ++j) {
    total += counts_[static_cast<std::size_t>(j)];
  }
  return total;
}

bool CountTable::self_check() const {
  BigInt total = 0;
  for (const BigInt& c : counts_) total += c;
  BigInt expected = boost::multiprecision::pow(BigInt(k_), static_cast<unsigned>(n_));
  if (total != expected) return false;
  std::size_t last = counts_.size() - 1;
  for (std::size_t j = 0; j < counts_.size(); ++j) {
    if (counts_[j] != counts_[last - j]) return false;
  }
  return counts_.front() == 1 && counts_.back() == 1;
}

BigInt count_words(std::int64_t n, std::int64_t k, std::int64_t j) {
  CountTable table(n, k);
  return table.count(j);
}

BigInt cycle_length(const WeightRangeParams& p) {
  CountTable table(p.n, p.k);
  return table.range_sum(p.s, p.t);
}

BigRational redundancy_ratio(std::int64_t n, std::int64_t k, std::int64_t t) {
  if (n < 1 || k < 2) throw std::invalid_argument("requires n >= 1 and k >= 2");
  if (t < k - 1) throw std::invalid_argument("requires t >= k-1");
  if (t > n * (k - 1)) throw std::invalid_argument("requires t <= n(k-1)");
  CountTable table(n, k);
  BigInt exact = table.count(t);
  BigInt padded = table.range_sum(t - (k - 1), t);
  return BigRational(padded, exact);
}

}  // namespace debruijn
