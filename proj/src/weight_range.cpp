#include "debruijn/weight_range.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "debruijn/counting.hpp"
#include "debruijn/errors.hpp"

namespace debruijn {

namespace {

// Worst-case budget for the constructive path routines. The first term covers
// the weight-adjustment phases; the quadratic term covers letter
// normalization and sorting, which may touch each position once per pass.
std::int64_t step_cap(const WeightRangeParams& p) {
  __int128 cap = static_cast<__int128>(4) * p.n * p.k * (p.t - p.s + p.k);
  cap += static_cast<__int128>(8) * p.n * p.n;
  const __int128 int64_max = std::numeric_limits<std::int64_t>::max();
  return static_cast<std::int64_t>(std::min(cap, int64_max));
}

void require_legal_vertex(const Word& v, const WeightRangeParams& p,
                          const char* who) {
  if (!is_legal_vertex(v, p)) {
    throw std::invalid_argument(std::string(who) + ": not a legal vertex for (n=" +
                                std::to_string(p.n) + ", k=" + std::to_string(p.k) +
                                ", s=" + std::to_string(p.s) + ", t=" +
                                std::to_string(p.t) + ")");
  }
}

// Mutable cursor over a vertex while a walk is being built. Every append is
// re-checked against edge legality, so the routines' guards are strategy
// only, never the safety mechanism.
class PathCursor {
 public:
  PathCursor(const Word& start, const WeightRangeParams& p)
      : p_(p),
        walk_{start, {}},
        cur_(start.letters().begin(), start.letters().end()),
        weight_(start.weight()),
        cap_(step_cap(p)) {}

  Letter front() const { return cur_.front(); }
  Letter at(std::size_t i) const { return cur_[i]; }
  std::int64_t weight() const { return weight_; }
  std::size_t size() const { return cur_.size(); }

  bool edge_ok(Letter d) const {
    return p_.s <= weight_ + d && weight_ + d <= p_.t;
  }

  void append(Letter d) {
    if (!edge_ok(d)) {
      throw InternalError("illegal edge produced: vertex weight " +
                          std::to_string(weight_) + " + letter " + std::to_string(d) +
                          " leaves [" + std::to_string(p_.s) + ", " +
                          std::to_string(p_.t) + "]");
    }
    if (++steps_ > cap_) {
      throw InternalError("path routine exceeded its step cap of " +
                          std::to_string(cap_));
    }
    Letter c = cur_.front();
    cur_.pop_front();
    cur_.push_back(d);
    weight_ += static_cast<std::int64_t>(d) - static_cast<std::int64_t>(c);
    walk_.steps.push_back(d);
  }

  void rotate() { append(front()); }

  Word word() const {
    return Word(std::vector<Letter>(cur_.begin(), cur_.end()),
                static_cast<std::uint32_t>(p_.k));
  }

  Walk take() { return std::move(walk_); }

 private:
  const WeightRangeParams& p_;
  Walk walk_;
  std::deque<Letter> cur_;
  std::int64_t weight_;
  std::int64_t cap_;
  std::int64_t steps_ = 0;
};

}  // namespace

SinkSpec sink_spec(const WeightRangeParams& p) {
  const std::int64_t m = p.n - 1;
  const std::int64_t x = p.s / m;
  const std::int64_t b = p.s % m;
  // s <= (n-1)(k-1) follows from s+k-1 <= t <= n(k-1), so x <= k-1 and
  // x+1 <= k-1 whenever b > 0.
  return SinkSpec{static_cast<Letter>(x), m - b, b};
}

Word sink_vertex(const WeightRangeParams& p) {
  SinkSpec spec = sink_spec(p);
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(p.n - 1));
  letters.insert(letters.end(), static_cast<std::size_t>(spec.count_base), spec.base);
  letters.insert(letters.end(), static_cast<std::size_t>(spec.count_next),
                 static_cast<Letter>(spec.base + 1));
  return Word(std::move(letters), static_cast<std::uint32_t>(p.k));
}

bool is_legal_vertex(const Word& v, const WeightRangeParams& p) {
  if (static_cast<std::int64_t>(v.size()) != p.n - 1) return false;
  if (v.alphabet_size() != static_cast<std::uint32_t>(p.k)) return false;
  const std::int64_t h = v.weight();
  return p.vertex_weight_min() <= h && h <= p.vertex_weight_max();
}

bool is_legal_edge(const Word& v, Letter l, const WeightRangeParams& p) {
  if (l >= p.k) return false;
  const std::int64_t edge = v.weight() + l;
  if (edge < p.s || edge > p.t) return false;
  const std::int64_t succ = edge - v[0];
  return succ >= p.vertex_weight_min() && succ <= p.vertex_weight_max();
}

Word edge_successor(const Word& v, Letter l) {
  std::vector<Letter> out(v.letters().begin() + 1, v.letters().end());
  out.push_back(l);
  return Word(std::move(out), v.alphabet_size());
}

std::pair<std::int64_t, std::int64_t> degrees(const Word& v,
                                              const WeightRangeParams& p) {
  require_legal_vertex(v, p, "degrees");
  const std::int64_t h = v.weight();
  std::int64_t out = 0;
  for (std::int64_t l = 0; l < p.k; ++l) {
    if (is_legal_edge(v, static_cast<Letter>(l), p)) ++out;
  }
  std::int64_t in = 0;
  for (std::int64_t f = 0; f < p.k; ++f) {
    if (f + h < p.s || f + h > p.t) continue;
    const std::int64_t pred = h - v[v.size() - 1] + f;
    if (pred >= p.vertex_weight_min() && pred <= p.vertex_weight_max()) ++in;
  }
  return {in, out};
}

Word Walk::end() const {
  std::deque<Letter> cur(start.letters().begin(), start.letters().end());
  for (Letter d : steps) {
    cur.pop_front();
    cur.push_back(d);
  }
  return Word(std::vector<Letter>(cur.begin(), cur.end()), start.alphabet_size());
}

std::vector<WalkTraceRow> walk_trace(const Walk& walk, const WeightRangeParams& p) {
  std::vector<WalkTraceRow> rows;
  rows.reserve(walk.steps.size() + 1);
  const SinkSpec spec = sink_spec(p);
  const std::int64_t lo = p.vertex_weight_min();
  std::deque<Letter> cur(walk.start.letters().begin(), walk.start.letters().end());
  std::int64_t h = walk.start.weight();
  for (std::size_t i = 0; i <= walk.steps.size(); ++i) {
    WalkTraceRow row{Word(std::vector<Letter>(cur.begin(), cur.end()),
                          walk.start.alphabet_size()),
                     h, -1, false, false};
    if (i < walk.steps.size()) {
      const Letter d = walk.steps[i];
      row.edge_weight = h + d;
      row.rotation = (d == cur.front());
      row.danger = row.rotation && (h - lo <= spec.base || p.t - h <= spec.base);
      h += static_cast<std::int64_t>(d) - static_cast<std::int64_t>(cur.front());
      cur.pop_front();
      cur.push_back(d);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Walk path_reduce_weight(const Word& v, const WeightRangeParams& p) {
  require_legal_vertex(v, p, "path_reduce_weight");
  if (v.weight() < p.s + 1) {
    throw std::invalid_argument("path_reduce_weight: requires weight in [s+1, t]");
  }
  PathCursor cur(v, p);
  while (cur.weight() != p.s) {
    // Zeros rotate to the back without changing vertex or edge weight.
    while (cur.front() == 0) cur.rotate();
    const Letter f = cur.front();
    if (cur.weight() == p.t) {
      cur.append(0);
    } else {
      const std::int64_t r = p.t - cur.weight();
      cur.append(static_cast<Letter>(std::min<std::int64_t>(f - 1, r)));
    }
  }
  return cur.take();
}

Walk path_increase_weight(const Word& v, const WeightRangeParams& p) {
  require_legal_vertex(v, p, "path_increase_weight");
  if (v.weight() > p.s - 1) {
    throw std::invalid_argument(
        "path_increase_weight: requires weight in [max(0, s-(k-1)), s-1]");
  }
  const Letter top = static_cast<Letter>(p.k - 1);
  PathCursor cur(v, p);
  while (cur.weight() != p.s) {
    if (cur.weight() == p.s - (p.k - 1)) {
      // Edge weight lands exactly on s; vertex weight rises unless the
      // dropped letter was already k-1.
      cur.append(top);
    } else {
      while (cur.front() == top) cur.rotate();
      const Letter f = cur.front();
      const std::int64_t r = p.s - cur.weight();
      cur.append(static_cast<Letter>(std::max<std::int64_t>(r, f + 1)));
    }
  }
  return cur.take();
}

namespace {

struct NormalizeState {
  std::vector<std::int64_t> cnt;     // letter counts, one extra slot
  std::vector<std::int64_t> target;  // a at x, b at x+1
  std::int64_t phi = 0;              // total surplus over target

  NormalizeState(const PathCursor& cur, std::int64_t k, const SinkSpec& spec) {
    cnt.assign(static_cast<std::size_t>(k) + 1, 0);
    target.assign(static_cast<std::size_t>(k) + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) ++cnt[cur.at(i)];
    target[spec.base] = spec.count_base;
    target[spec.base + 1] = spec.count_next;
    for (std::size_t c = 0; c < cnt.size(); ++c) {
      phi += std::max<std::int64_t>(0, cnt[c] - target[c]);
    }
  }

  void replace(Letter c, Letter d) {
    if (cnt[c] > target[c]) --phi;
    --cnt[c];
    if (cnt[d] >= target[d]) ++phi;
    ++cnt[d];
  }
};

}  // namespace

Walk path_normalize_letters(const Word& v, const WeightRangeParams& p) {
  require_legal_vertex(v, p, "path_normalize_letters");
  if (v.weight() != p.s) {
    throw std::invalid_argument("path_normalize_letters: requires weight exactly s");
  }
  const SinkSpec spec = sink_spec(p);
  const Letter x = spec.base;
  const std::int64_t lo = p.vertex_weight_min();
  const std::int64_t m = p.n - 1;

  PathCursor cur(v, p);
  NormalizeState st(cur, p.k, spec);

  // Replacements are deferred (rotate instead) while the landing weight is
  // within x of either extreme; stagnation over full periods relaxes the
  // guard so a productive, edge-legal move is never postponed forever.
  std::int64_t best_phi = st.phi;
  std::int64_t stagnation = 0;

  auto land = [&](Letter c, Letter d) {
    return cur.weight() - static_cast<std::int64_t>(c) + static_cast<std::int64_t>(d);
  };
  auto band_ok = [&](Letter c, Letter d) {
    const std::int64_t h2 = land(c, d);
    if (d > c) return p.t - h2 >= x;
    if (d < c) return h2 - lo >= x;
    return true;
  };
  auto pick = [&](Letter c, const std::vector<Letter>& pool) {
    // Prefer the landing weight nearest the middle of the legal band.
    const std::int64_t mid2 = lo + p.t;
    Letter best = pool.front();
    std::int64_t best_dist = std::abs(2 * land(c, best) - mid2);
    for (Letter d : pool) {
      const std::int64_t dist = std::abs(2 * land(c, d) - mid2);
      if (dist < best_dist || (dist == best_dist && d < best)) {
        best = d;
        best_dist = dist;
      }
    }
    return best;
  };

  while (st.cnt[x] != spec.count_base || st.cnt[x + 1] != spec.count_next) {
    const Letter c = cur.front();
    const std::int64_t h = cur.weight();
    const Letter dmin = static_cast<Letter>(std::max<std::int64_t>(0, p.s - h));
    const Letter dmax = static_cast<Letter>(std::min<std::int64_t>(p.k - 1, p.t - h));

    const bool surplus = st.cnt[c] > st.target[c];
    std::vector<Letter> desired;
    if (surplus) {
      if (c == x) {
        desired.push_back(static_cast<Letter>(x + 1));
      } else if (c == x + 1) {
        desired.push_back(x);
      } else {
        if (st.cnt[x] < spec.count_base) desired.push_back(x);
        if (st.cnt[x + 1] < spec.count_next) desired.push_back(static_cast<Letter>(x + 1));
      }
    }

    std::optional<Letter> chosen;
    if (surplus) {
      std::vector<Letter> banded;
      std::vector<Letter> legal;
      for (Letter d : desired) {
        if (!cur.edge_ok(d)) continue;
        legal.push_back(d);
        if (band_ok(c, d)) banded.push_back(d);
      }
      const bool relax = stagnation >= m;
      const bool force = stagnation >= 2 * m;
      if (!banded.empty()) {
        chosen = pick(c, banded);
      } else if (relax && !legal.empty()) {
        chosen = pick(c, legal);
      } else if (cur.edge_ok(c) && !force) {
        cur.rotate();
        ++stagnation;
        continue;
      } else if (!legal.empty()) {
        chosen = pick(c, legal);
      } else {
        // No desired letter is edge-legal; fall back to the nearest legal
        // letter, clamping each target into the legal range.
        std::vector<Letter> pool;
        for (Letter d : desired) pool.push_back(std::clamp(d, dmin, dmax));
        chosen = pick(c, pool);
      }
    } else {
      if (cur.edge_ok(c)) {
        cur.rotate();
        ++stagnation;
        continue;
      }
      // A correct letter whose rotation is edge-illegal: substitute the
      // nearest legal letter of the same type (at most x, or at least x+1).
      Letter d;
      if (c <= x) {
        d = (dmin <= std::min<Letter>(dmax, x)) ? std::clamp(c, dmin, std::min<Letter>(dmax, x))
                                                : std::clamp(c, dmin, dmax);
      } else {
        const Letter bmin = std::max<Letter>(dmin, static_cast<Letter>(x + 1));
        d = (bmin <= dmax) ? std::clamp(c, bmin, dmax) : std::clamp(c, dmin, dmax);
      }
      chosen = d;
    }

    st.replace(c, *chosen);
    cur.append(*chosen);
    if (st.phi < best_phi) {
      best_phi = st.phi;
      stagnation = 0;
    } else {
      ++stagnation;
    }
  }
  return cur.take();
}

Walk path_sort_to_sink(const Word& v, const WeightRangeParams& p) {
  require_legal_vertex(v, p, "path_sort_to_sink");
  if (v.weight() != p.s) {
    throw std::invalid_argument("path_sort_to_sink: requires weight exactly s");
  }
  const SinkSpec spec = sink_spec(p);
  const Letter x = spec.base;
  const Letter y = static_cast<Letter>(x + 1);
  const std::int64_t m = p.n - 1;
  {
    std::int64_t nx = 0, ny = 0;
    for (Letter c : v.letters()) {
      if (c == x) ++nx;
      else if (c == y) ++ny;
    }
    if (nx != spec.count_base || ny + nx != m) {
      throw std::invalid_argument(
          "path_sort_to_sink: requires exactly the sink vertex letter multiset");
    }
  }

  const Word sv = sink_vertex(p);
  PathCursor cur(v, p);

  auto snapshot = [&] {
    std::vector<Letter> w(cur.size());
    for (std::size_t i = 0; i < cur.size(); ++i) w[i] = cur.at(i);
    return w;
  };

  while (true) {
    const std::vector<Letter> w = snapshot();
    if (Word(w, v.alphabet_size()) == sv) break;

    // Runs of x+1 in the cyclic word; one run means cyclically sorted.
    std::int64_t runs = 0;
    for (std::int64_t i = 0; i < m; ++i) {
      if (w[static_cast<std::size_t>(i)] == y &&
          w[static_cast<std::size_t>((i + 1) % m)] == x) {
        ++runs;
      }
    }
    if (runs <= 1) {
      // Rotate until the x-block leads. All rotations here keep weight s and
      // edge weight s+x or s+x+1, both legal.
      std::int64_t head = -1;
      for (std::int64_t i = 0; i < m; ++i) {
        if (w[static_cast<std::size_t>(i)] == y &&
            w[static_cast<std::size_t>((i - 1 + m) % m)] == x) {
          head = i;
          break;
        }
      }
      const std::int64_t shift = (head + spec.count_next) % m;
      for (std::int64_t i = 0; i < shift; ++i) cur.rotate();
      break;
    }

    // Designate the first run after the front and walk it rightwards one
    // position per pass until it merges with the next run: drop its leading
    // x+1, carry the remaining run, then promote the x just past it. Every
    // edge weighs s+x.
    std::int64_t head = 0;
    while (!(w[static_cast<std::size_t>(head)] == y &&
             w[static_cast<std::size_t>((head - 1 + m) % m)] == x)) {
      ++head;
    }
    std::int64_t run = 0;
    while (w[static_cast<std::size_t>((head + run) % m)] == y) ++run;
    std::int64_t gap = 0;
    while (w[static_cast<std::size_t>((head + run + gap) % m)] == x) ++gap;

    for (std::int64_t d = 0; d < gap; ++d) {
      for (std::int64_t i = 0; i < head; ++i) cur.rotate();
      cur.append(x);  // demote the run head; weight drops to s-1
      for (std::int64_t i = 0; i < run - 1; ++i) cur.rotate();
      cur.append(y);  // promote the first x past the run; weight back to s
      head = m - run;
    }
  }

  Walk walk = cur.take();
  if (walk.end() != sv) {
    throw InternalError("path_sort_to_sink did not reach the sink vertex");
  }
  return walk;
}

Walk path_to_sink(const Word& v, const WeightRangeParams& p) {
  require_legal_vertex(v, p, "path_to_sink");
  Walk total{v, {}};
  Word cur = v;
  auto extend = [&](const Walk& part) {
    total.steps.insert(total.steps.end(), part.steps.begin(), part.steps.end());
    cur = part.end();
  };
  if (cur.weight() > p.s) {
    extend(path_reduce_weight(cur, p));
  } else if (cur.weight() < p.s) {
    extend(path_increase_weight(cur, p));
  }
  extend(path_normalize_letters(cur, p));
  extend(path_sort_to_sink(cur, p));
  return total;
}

namespace {

void enumerate_rec(const WeightRangeParams& p, std::int64_t length,
                   std::int64_t lo, std::int64_t hi, std::vector<Letter>& prefix,
                   std::int64_t weight, std::vector<Word>& out) {
  const std::int64_t depth = static_cast<std::int64_t>(prefix.size());
  if (depth == length) {
    if (weight >= lo && weight <= hi) {
      out.emplace_back(prefix, static_cast<std::uint32_t>(p.k));
    }
    return;
  }
  const std::int64_t remaining = length - depth - 1;
  for (std::int64_t l = 0; l < p.k; ++l) {
    const std::int64_t w = weight + l;
    if (w > hi) break;
    if (w + remaining * (p.k - 1) < lo) continue;
    prefix.push_back(static_cast<Letter>(l));
    enumerate_rec(p, length, lo, hi, prefix, w, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Word> legal_vertices(const WeightRangeParams& p,
                                 const ResourceLimits& limits) {
  const BigInt total = CountTable(p.n - 1, p.k).range_sum(p.vertex_weight_min(), p.t);
  if (total > limits.max_vertices) {
    throw CapExceededError("vertex count " + total.str() + " exceeds limit " +
                           std::to_string(limits.max_vertices));
  }
  std::vector<Word> out;
  out.reserve(total.convert_to<std::size_t>());
  std::vector<Letter> prefix;
  enumerate_rec(p, p.n - 1, p.vertex_weight_min(), p.t, prefix, 0, out);
  return out;
}

bool weakly_connected(const WeightRangeParams& p, const ResourceLimits& limits) {
  const std::vector<Word> verts = legal_vertices(p, limits);
  if (verts.empty()) return true;

  auto key_of = [](const Word& w) {
    return std::string(reinterpret_cast<const char*>(w.letters().data()),
                       w.letters().size() * sizeof(Letter));
  };
  std::unordered_map<std::string, std::size_t> index;
  index.reserve(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) index.emplace(key_of(verts[i]), i);

  std::vector<bool> seen(verts.size(), false);
  std::vector<std::size_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t id = queue.back();
    queue.pop_back();
    const Word& v = verts[id];
    const std::int64_t h = v.weight();
    auto visit = [&](const Word& w) {
      auto it = index.find(key_of(w));
      if (it == index.end() || seen[it->second]) return;
      seen[it->second] = true;
      ++reached;
      queue.push_back(it->second);
    };
    for (std::int64_t l = 0; l < p.k; ++l) {
      if (is_legal_edge(v, static_cast<Letter>(l), p)) {
        visit(edge_successor(v, static_cast<Letter>(l)));
      }
    }
    for (std::int64_t f = 0; f < p.k; ++f) {
      if (f + h < p.s || f + h > p.t) continue;
      std::vector<Letter> pred;
      pred.reserve(v.size());
      pred.push_back(static_cast<Letter>(f));
      pred.insert(pred.end(), v.letters().begin(), v.letters().end() - 1);
      visit(Word(std::move(pred), v.alphabet_size()));
    }
  }
  return reached == verts.size();
}

namespace {

// Hierholzer over the implicit digraph. The per-vertex "next letter to try"
// map is the only state proportional to the vertex count.
template <typename Key, typename KeyFn>
std::vector<Letter> hierholzer(const WeightRangeParams& p, std::uint64_t edge_count,
                               KeyFn&& key_fn) {
  std::deque<Letter> cur;
  const Word sv = sink_vertex(p);
  cur.assign(sv.letters().begin(), sv.letters().end());
  std::int64_t h = p.s;

  std::unordered_map<Key, std::uint32_t> next_try;
  std::vector<std::pair<Letter, Letter>> frames;  // (dropped, appended)
  frames.reserve(edge_count);
  std::vector<Letter> out;
  out.reserve(edge_count);

  while (true) {
    const std::int64_t lmin = std::max<std::int64_t>(0, p.s - h);
    const std::int64_t lmax = std::min<std::int64_t>(p.k - 1, p.t - h);
    std::uint32_t& nt = next_try[key_fn(cur)];
    const std::int64_t candidate = std::max<std::int64_t>(nt, lmin);
    if (candidate <= lmax) {
      nt = static_cast<std::uint32_t>(candidate + 1);
      const Letter l = static_cast<Letter>(candidate);
      frames.emplace_back(cur.front(), l);
      h += static_cast<std::int64_t>(l) - static_cast<std::int64_t>(cur.front());
      cur.pop_front();
      cur.push_back(l);
    } else if (frames.empty()) {
      break;
    } else {
      const auto [dropped, appended] = frames.back();
      frames.pop_back();
      out.push_back(appended);
      h += static_cast<std::int64_t>(dropped) - static_cast<std::int64_t>(appended);
      cur.pop_back();
      cur.push_front(dropped);
    }
  }
  std::reverse(out.begin(), out.end());
  if (out.size() != edge_count) {
    throw InternalError("Eulerian traversal covered " + std::to_string(out.size()) +
                        " edges, expected " + std::to_string(edge_count) +
                        " (degree or connectivity violation)");
  }
  return out;
}

}  // namespace

Cycle eulerian_cycle(const WeightRangeParams& p, const ResourceLimits& limits) {
  const BigInt vertex_count =
      CountTable(p.n - 1, p.k).range_sum(p.vertex_weight_min(), p.t);
  if (vertex_count > limits.max_vertices) {
    throw CapExceededError("vertex count " + vertex_count.str() + " exceeds limit " +
                           std::to_string(limits.max_vertices));
  }
  const BigInt length = cycle_length(p);
  if (length > limits.max_cycle_length) {
    throw CapExceededError("cycle length " + length.str() + " exceeds limit " +
                           std::to_string(limits.max_cycle_length));
  }
  const auto edge_count = length.convert_to<std::uint64_t>();

  // Pack vertices into one machine word when the letter space allows it.
  bool packable = true;
  std::uint64_t radix_span = 1;
  for (std::int64_t i = 0; i < p.n - 1 && packable; ++i) {
    if (radix_span > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(p.k)) {
      packable = false;
    } else {
      radix_span *= static_cast<std::uint64_t>(p.k);
    }
  }

  std::vector<Letter> letters;
  if (packable) {
    auto key = [k = static_cast<std::uint64_t>(p.k)](const std::deque<Letter>& w) {
      std::uint64_t packed = 0;
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        packed = packed * k + *it;
      }
      return packed;
    };
    letters = hierholzer<std::uint64_t>(p, edge_count, key);
  } else {
    auto key = [](const std::deque<Letter>& w) {
      std::string s;
      s.reserve(w.size() * sizeof(Letter));
      for (Letter l : w) {
        s.append(reinterpret_cast<const char*>(&l), sizeof(Letter));
      }
      return s;
    };
    letters = hierholzer<std::string>(p, edge_count, key);
  }
  return Cycle(std::move(letters), static_cast<std::uint32_t>(p.k),
               static_cast<std::size_t>(p.n));
}

Cycle generate_full(std::int64_t k, std::int64_t n, const ResourceLimits& limits) {
  if (n < 1) throw std::invalid_argument("requires n >= 1");
  if (k < 2) throw std::invalid_argument("requires k >= 2");
  if (k > static_cast<std::int64_t>(kMaxAlphabetSize)) {
    throw std::invalid_argument("requires k <= 65536");
  }
  if (n == 1) {
    if (static_cast<std::uint64_t>(k) > limits.max_cycle_length) {
      throw CapExceededError("cycle length " + std::to_string(k) + " exceeds limit " +
                             std::to_string(limits.max_cycle_length));
    }
    std::vector<Letter> letters(static_cast<std::size_t>(k));
    for (std::int64_t i = 0; i < k; ++i) letters[static_cast<std::size_t>(i)] = static_cast<Letter>(i);
    return Cycle(std::move(letters), static_cast<std::uint32_t>(k), 1);
  }
  return eulerian_cycle(WeightRangeParams(n, k, 0, n * (k - 1)), limits);
}

}  // namespace debruijn
