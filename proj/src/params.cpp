#include "debruijn/params.hpp"

#include <stdexcept>
#include <string>

namespace debruijn {

namespace {

std::string show(const char* name, std::int64_t v) {
  return std::string(name) + "=" + std::to_string(v);
}

}  // namespace

WeightRangeParams::WeightRangeParams(std::int64_t n_, std::int64_t k_,
                                     std::int64_t s_, std::int64_t t_)
    : n(n_), k(k_), s(s_), t(t_) {
  const std::string where =
      " (" + show("n", n) + ", " + show("k", k) + ", " + show("s", s) + ", " +
      show("t", t) + ")";
  if (n < 2) throw std::invalid_argument("requires n >= 2" + where);
  if (k < 2) throw std::invalid_argument("requires k >= 2" + where);
  if (k > static_cast<std::int64_t>(kMaxAlphabetSize)) {
    throw std::invalid_argument("requires k <= 65536" + where);
  }
  if (s < 0) throw std::invalid_argument("requires 0 <= s" + where);
  if (s + k - 1 > t) throw std::invalid_argument("requires s+k-1 <= t" + where);
  if (t > n * (k - 1)) throw std::invalid_argument("requires t <= n(k-1)" + where);
}

}  // namespace debruijn
