#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "debruijn/counting.hpp"
#include "debruijn/params.hpp"
#include "debruijn/poset.hpp"
#include "debruijn/weight_range.hpp"
#include "debruijn/word.hpp"

namespace debruijn {

// Exhaustive, generator-independent checks. Failures are verdicts with a
// counterexample, not exceptions; exceptions are reserved for malformed
// input (alphabet mismatches, caps).

struct CycleReport {
  bool pass = false;
  std::string reason;  // empty on pass
  std::uint64_t length = 0;
  BigInt expected_length;
  std::uint64_t distinct_windows = 0;
  std::optional<std::size_t> first_bad_index;
  std::optional<Word> first_bad_window;
};

// Checks length, per-window weight legality, and pairwise window
// distinctness; together these force every legal word to appear exactly once.
CycleReport verify_universal_cycle(const Cycle& c, const WeightRangeParams& p);

struct WalkReport {
  bool pass = false;
  std::string reason;
  std::optional<std::size_t> failing_step;
  std::vector<std::int64_t> vertex_weights;  // one per visited vertex
  std::vector<std::int64_t> edge_weights;    // one per step
};

// Checks that the start vertex and every intermediate vertex are legal and
// that each step traverses a legal edge. Weight sequences are reported for
// comparison against reference traces.
WalkReport verify_walk(const Walk& w, const WeightRangeParams& p);

// The ground-truth object set: every n-letter word with weight in [s, t],
// in lexicographic order.
std::vector<Word> enumerate_objects(const WeightRangeParams& p,
                                    std::uint64_t cap = 10'000'000);

struct PosetCycleReport {
  bool pass = false;
  std::string reason;
  std::uint64_t length = 0;
  BigInt expected_length;
  std::uint64_t distinct_windows = 0;
  std::optional<std::size_t> first_bad_index;
};

// Checks length alpha^n, window distinctness, and that every decoded window
// is an order-respecting assignment.
PosetCycleReport verify_poset_cycle(const Cycle& c, const Poset& p, std::int64_t n,
                                    std::size_t antichain_cap = kDefaultAntichainCap);

}  // namespace debruijn
