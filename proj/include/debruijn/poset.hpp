#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "debruijn/counting.hpp"
#include "debruijn/weight_range.hpp"
#include "debruijn/word.hpp"

namespace debruijn {

inline constexpr std::size_t kDefaultAntichainCap = std::size_t{1} << 20;

// A finite poset given by its cover (Hasse) relation. The constructor
// computes the reflexive-transitive closure and rejects inputs whose cover
// list is cyclic or is not a transitive reduction.
class Poset {
 public:
  Poset(std::vector<std::string> elements,
        std::vector<std::pair<std::string, std::string>> covers);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& name_of(std::size_t i) const { return elements_[i]; }
  std::size_t index_of(const std::string& name) const;

  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const {
    return covers_;
  }

  // The full order relation: reflexive, antisymmetric, transitive.
  bool less_equal(std::size_t a, std::size_t b) const {
    return closure_[a * elements_.size() + b];
  }
  bool comparable(std::size_t a, std::size_t b) const {
    return less_equal(a, b) || less_equal(b, a);
  }

 private:
  std::vector<std::string> elements_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<bool> closure_;  // row-major |P| x |P|
};

// Line-oriented text format:
//   elements: A B C D E
//   cover: A B
// with '#' comments and blank lines ignored.
Poset parse_poset(std::istream& in);
Poset parse_poset_file(const std::string& path);

// An antichain as a sorted list of element indices; {} is the empty one.
using Antichain = std::vector<std::size_t>;

// A {0,1}-coloring of the poset elements.
using Coloring = std::vector<std::uint8_t>;

// All antichains of P in canonical order: by size, then lexicographically by
// element indices. The alphabet of any cycle over P is this list.
std::vector<Antichain> antichains(const Poset& p,
                                  std::size_t cap = kDefaultAntichainCap);

// c(E) = 1 iff some member of the antichain lies at or below E. The result
// is up-closed: a 1 forces 1 on everything above.
Coloring coloring_from_antichain(const Poset& p, const Antichain& a);

bool is_up_closed(const Poset& p, const Coloring& c);

// The minimal 1-colored elements. Inverse of coloring_from_antichain;
// throws if the coloring is not up-closed.
Antichain antichain_from_coloring(const Poset& p, const Coloring& c);

// Which ground elements of {1..n} each poset element received.
struct Assignment {
  std::vector<std::vector<std::size_t>> member_sets;  // per poset element
};

// True iff member_sets(A) is a subset of member_sets(B) whenever A <= B.
bool assignment_respects_order(const Poset& p, const Assignment& a);

// A cycle over one letter per antichain in which every assignment of {1..n}
// to the poset elements appears as exactly one window.
Cycle poset_cycle(const Poset& p, std::int64_t n, const ResourceLimits& limits = {},
                  std::size_t antichain_cap = kDefaultAntichainCap);

// Reads the n letters starting at `start` and translates each back into the
// membership sets of one ground element.
Assignment decode_assignment(const Poset& p, const Cycle& c, std::size_t start,
                             std::size_t antichain_cap = kDefaultAntichainCap);

// alpha^n, where alpha is the number of antichains of P.
BigInt count_assignments(const Poset& p, std::int64_t n,
                         std::size_t antichain_cap = kDefaultAntichainCap);

// Renders an antichain as "{A,C}" using element names.
std::string format_antichain(const Poset& p, const Antichain& a);

}  // namespace debruijn
