#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "debruijn/params.hpp"
#include "debruijn/word.hpp"

namespace debruijn {

// Resource guards for operations that enumerate vertices or materialize
// cycles. Instances beyond the limits are rejected up front.
struct ResourceLimits {
  std::uint64_t max_vertices = 10'000'000;
  std::uint64_t max_cycle_length = 10'000'000;
};

// The canonical weight-s vertex: count_base copies of `base` followed by
// count_next copies of `base + 1`. Every connectivity path ends here.
struct SinkSpec {
  Letter base;               // x
  std::int64_t count_base;   // a >= 1
  std::int64_t count_next;   // b = n-1-a >= 0
};

SinkSpec sink_spec(const WeightRangeParams& p);
Word sink_vertex(const WeightRangeParams& p);

// A vertex is an (n-1)-letter word over {0..k-1} with weight in
// [max(0, s-(k-1)), t].
bool is_legal_vertex(const Word& v, const WeightRangeParams& p);

// True iff appending letter l to vertex v traverses a legal edge: the
// n-letter edge word has weight in [s, t] and the successor vertex is legal.
bool is_legal_edge(const Word& v, Letter l, const WeightRangeParams& p);

// The vertex reached from v by dropping its first letter and appending l.
Word edge_successor(const Word& v, Letter l);

// (indegree, outdegree) of a legal vertex. Both count the letters that keep
// the edge weight inside [s, t], so they are always equal.
std::pair<std::int64_t, std::int64_t> degrees(const Word& v, const WeightRangeParams& p);

// A walk in the overlap digraph: a start vertex plus the letter appended by
// each traversed edge. The vertex sequence is implied.
struct Walk {
  Word start;
  std::vector<Letter> steps;

  // Final vertex after applying every step.
  Word end() const;
};

// Per-step trace of a walk, in the shape used by the path-demo printer:
// the vertex before the step, its weight, the edge weight, whether the step
// was a plain rotation, and whether the vertex sits in the outer danger band
// while being rotated past.
struct WalkTraceRow {
  Word vertex;
  std::int64_t vertex_weight;
  std::int64_t edge_weight;  // -1 on the final row
  bool rotation;
  bool danger;
};

std::vector<WalkTraceRow> walk_trace(const Walk& walk, const WeightRangeParams& p);

// Constructive connectivity paths. Each returns a Walk whose every edge is
// legal; step caps turn any termination gap into a loud InternalError.
Walk path_reduce_weight(const Word& v, const WeightRangeParams& p);   // weight in [s+1, t] -> s
Walk path_increase_weight(const Word& v, const WeightRangeParams& p); // weight in [lo, s-1] -> s
Walk path_normalize_letters(const Word& v, const WeightRangeParams& p); // weight s -> letters {x, x+1}
Walk path_sort_to_sink(const Word& v, const WeightRangeParams& p);    // {x,x+1} multiset -> SV
Walk path_to_sink(const Word& v, const WeightRangeParams& p);         // any vertex -> SV

// Connectivity oracle, independent of the path routines: explicitly
// enumerates the vertex set and searches the underlying undirected graph.
bool weakly_connected(const WeightRangeParams& p, const ResourceLimits& limits = {});

// All legal vertices in lexicographic order.
std::vector<Word> legal_vertices(const WeightRangeParams& p,
                                 const ResourceLimits& limits = {});

// The de Bruijn cycle of all n-letter words with weight in [s, t]: an
// Eulerian circuit of the overlap digraph, found by Hierholzer's algorithm
// starting at the sink vertex, trying letters in increasing order. Output is
// deterministic; its cyclic length-n windows are exactly the legal words.
Cycle eulerian_cycle(const WeightRangeParams& p, const ResourceLimits& limits = {});

// Classic de Bruijn sequence of all k-ary n-letter words (full weight range).
Cycle generate_full(std::int64_t k, std::int64_t n, const ResourceLimits& limits = {});

}  // namespace debruijn
