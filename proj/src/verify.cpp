#include "debruijn/verify.hpp"

#include <stdexcept>
#include <unordered_set>

#include "debruijn/errors.hpp"

namespace debruijn {

namespace {

std::string window_key(const Word& w) {
  return std::string(reinterpret_cast<const char*>(w.letters().data()),
                     w.letters().size() * sizeof(Letter));
}

}  // namespace

CycleReport verify_universal_cycle(const Cycle& c, const WeightRangeParams& p) {
  if (c.alphabet_size() != static_cast<std::uint32_t>(p.k)) {
    throw std::invalid_argument("cycle alphabet size " + std::to_string(c.alphabet_size()) +
                                " does not match k=" + std::to_string(p.k));
  }
  if (static_cast<std::int64_t>(c.window_length()) != p.n) {
    throw std::invalid_argument("cycle window length " + std::to_string(c.window_length()) +
                                " does not match n=" + std::to_string(p.n));
  }

  CycleReport report;
  report.length = c.length();
  report.expected_length = cycle_length(p);

  if (BigInt(c.length()) != report.expected_length) {
    report.reason = "cycle length " + std::to_string(c.length()) +
                    " differs from required length " + report.expected_length.str();
    return report;
  }

  std::unordered_set<std::string> seen;
  seen.reserve(c.length() * 2);
  for (std::size_t i = 0; i < c.length(); ++i) {
    const Word w = c.window(i);
    const std::int64_t h = w.weight();
    if (h < p.s || h > p.t) {
      report.reason = "window at position " + std::to_string(i) + " has weight " +
                      std::to_string(h) + " outside [" + std::to_string(p.s) + ", " +
                      std::to_string(p.t) + "]";
      report.first_bad_index = i;
      report.first_bad_window = w;
      return report;
    }
    if (!seen.insert(window_key(w)).second) {
      report.reason = "window at position " + std::to_string(i) + " repeats an earlier window";
      report.first_bad_index = i;
      report.first_bad_window = w;
      return report;
    }
  }
  report.distinct_windows = seen.size();
  // length == |W| and all windows are distinct legal words, so every word
  // with weight in [s, t] appears exactly once.
  report.pass = true;
  return report;
}

WalkReport verify_walk(const Walk& w, const WeightRangeParams& p) {
  WalkReport report;
  if (!is_legal_vertex(w.start, p)) {
    report.reason = "start is not a legal vertex";
    return report;
  }
  Word cur = w.start;
  report.vertex_weights.push_back(cur.weight());
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    const Letter l = w.steps[i];
    report.edge_weights.push_back(cur.weight() + l);
    if (!is_legal_edge(cur, l, p)) {
      report.reason = "step " + std::to_string(i) + " appends letter " +
                      std::to_string(l) + " giving edge weight " +
                      std::to_string(cur.weight() + l) + " outside [" +
                      std::to_string(p.s) + ", " + std::to_string(p.t) + "]";
      report.failing_step = i;
      return report;
    }
    cur = edge_successor(cur, l);
    report.vertex_weights.push_back(cur.weight());
    if (!is_legal_vertex(cur, p)) {
      report.reason = "step " + std::to_string(i) + " reaches an illegal vertex";
      report.failing_step = i;
      return report;
    }
  }
  report.pass = true;
  return report;
}

std::vector<Word> enumerate_objects(const WeightRangeParams& p, std::uint64_t cap) {
  const BigInt expected = cycle_length(p);
  if (expected > cap) {
    throw CapExceededError("object count " + expected.str() + " exceeds limit " +
                           std::to_string(cap));
  }
  std::vector<Word> out;
  out.reserve(expected.convert_to<std::size_t>());
  std::vector<Letter> prefix;
  // Depth-first over letters in increasing order, pruning by weight bounds.
  auto rec = [&](auto&& self, std::int64_t weight) -> void {
    const auto depth = static_cast<std::int64_t>(prefix.size());
    if (depth == p.n) {
      if (weight >= p.s && weight <= p.t) out.emplace_back(prefix, static_cast<std::uint32_t>(p.k));
      return;
    }
    const std::int64_t remaining = p.n - depth - 1;
    for (std::int64_t l = 0; l < p.k; ++l) {
      if (weight + l > p.t) break;
      if (weight + l + remaining * (p.k - 1) < p.s) continue;
      prefix.push_back(static_cast<Letter>(l));
      self(self, weight + l);
      prefix.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

PosetCycleReport verify_poset_cycle(const Cycle& c, const Poset& p, std::int64_t n,
                                    std::size_t antichain_cap) {
  const std::vector<Antichain> alphabet = antichains(p, antichain_cap);
  if (c.alphabet_size() != alphabet.size()) {
    throw std::invalid_argument("cycle alphabet size " + std::to_string(c.alphabet_size()) +
                                " does not match antichain count " +
                                std::to_string(alphabet.size()));
  }
  if (n < 1 || static_cast<std::int64_t>(c.window_length()) != n) {
    throw std::invalid_argument("cycle window length " + std::to_string(c.window_length()) +
                                " does not match n=" + std::to_string(n));
  }

  PosetCycleReport report;
  report.length = c.length();
  report.expected_length =
      boost::multiprecision::pow(BigInt(alphabet.size()), static_cast<unsigned>(n));

  if (BigInt(c.length()) != report.expected_length) {
    report.reason = "cycle length " + std::to_string(c.length()) +
                    " differs from required length " + report.expected_length.str();
    return report;
  }

  std::unordered_set<std::string> seen;
  seen.reserve(c.length() * 2);
  for (std::size_t i = 0; i < c.length(); ++i) {
    const Word w = c.window(i);
    if (!seen.insert(window_key(w)).second) {
      report.reason = "window at position " + std::to_string(i) + " repeats an earlier window";
      report.first_bad_index = i;
      return report;
    }
    const Assignment a = decode_assignment(p, c, i, antichain_cap);
    if (!assignment_respects_order(p, a)) {
      report.reason = "window at position " + std::to_string(i) +
                      " decodes to an assignment that violates set inclusion";
      report.first_bad_index = i;
      return report;
    }
  }
  report.distinct_windows = seen.size();
  report.pass = true;
  return report;
}

}  // namespace debruijn
