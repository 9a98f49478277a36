#include "debruijn/poset.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "debruijn/errors.hpp"

namespace debruijn {

Poset::Poset(std::vector<std::string> elements,
             std::vector<std::pair<std::string, std::string>> covers)
    : elements_(std::move(elements)) {
  const std::size_t n = elements_.size();
  {
    std::set<std::string> names(elements_.begin(), elements_.end());
    if (names.size() != n) {
      throw std::invalid_argument("poset elements must be distinct");
    }
  }

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [lo_name, hi_name] : covers) {
    const std::size_t lo = index_of(lo_name);
    const std::size_t hi = index_of(hi_name);
    if (lo == hi) {
      throw std::invalid_argument("cover " + lo_name + " -> " + hi_name +
                                  " relates an element to itself");
    }
    if (!seen.insert({lo, hi}).second) {
      throw std::invalid_argument("duplicate cover " + lo_name + " -> " + hi_name);
    }
    covers_.emplace_back(lo, hi);
  }

  // Reflexive-transitive closure of the cover relation.
  closure_.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i) closure_[i * n + i] = true;
  for (const auto& [lo, hi] : covers_) closure_[lo * n + hi] = true;
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t u = 0; u < n; ++u) {
      if (!closure_[u * n + w]) continue;
      for (std::size_t v = 0; v < n; ++v) {
        if (closure_[w * n + v]) closure_[u * n + v] = true;
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (closure_[i * n + j] && closure_[j * n + i]) {
        throw std::invalid_argument("cover relation contains a cycle through " +
                                    elements_[i] + " and " + elements_[j]);
      }
    }
  }

  // The covers must form a transitive reduction: no cover may also be
  // implied by a longer chain.
  for (const auto& [lo, hi] : covers_) {
    for (std::size_t w = 0; w < n; ++w) {
      if (w == lo || w == hi) continue;
      if (closure_[lo * n + w] && closure_[w * n + hi]) {
        throw std::invalid_argument("cover " + elements_[lo] + " -> " + elements_[hi] +
                                    " is redundant: a chain through " + elements_[w] +
                                    " already implies it");
      }
    }
  }
}

std::size_t Poset::index_of(const std::string& name) const {
  auto it = std::find(elements_.begin(), elements_.end(), name);
  if (it == elements_.end()) {
    throw std::invalid_argument("unknown poset element '" + name + "'");
  }
  return static_cast<std::size_t>(it - elements_.begin());
}

Poset parse_poset(std::istream& in) {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  bool saw_elements = false;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    std::string key;
    if (!(ss >> key)) continue;
    if (key == "elements:") {
      if (saw_elements) {
        throw std::invalid_argument("poset file has more than one 'elements:' line");
      }
      saw_elements = true;
      std::string name;
      while (ss >> name) elements.push_back(name);
    } else if (key == "cover:") {
      std::string lo, hi, extra;
      if (!(ss >> lo >> hi) || (ss >> extra)) {
        throw std::invalid_argument("cover line must name exactly two elements");
      }
      covers.emplace_back(lo, hi);
    } else {
      throw std::invalid_argument("unrecognized poset line: " + line);
    }
  }
  if (!saw_elements) {
    throw std::invalid_argument("poset file is missing an 'elements:' line");
  }
  return Poset(std::move(elements), std::move(covers));
}

Poset parse_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open poset file '" + path + "'");
  }
  return parse_poset(in);
}

namespace {

void extend_antichain(const Poset& p, std::size_t next, Antichain& current,
                      std::vector<Antichain>& out, std::size_t cap) {
  if (out.size() >= cap) {
    throw CapExceededError("antichain count exceeds limit " + std::to_string(cap));
  }
  out.push_back(current);
  for (std::size_t i = next; i < p.size(); ++i) {
    bool ok = true;
    for (std::size_t e : current) {
      if (p.comparable(e, i)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    current.push_back(i);
    extend_antichain(p, i + 1, current, out, cap);
    current.pop_back();
  }
}

}  // namespace

std::vector<Antichain> antichains(const Poset& p, std::size_t cap) {
  std::vector<Antichain> out;
  Antichain current;
  extend_antichain(p, 0, current, out, cap);
  std::sort(out.begin(), out.end(), [](const Antichain& a, const Antichain& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

Coloring coloring_from_antichain(const Poset& p, const Antichain& a) {
  Coloring c(p.size(), 0);
  for (std::size_t e = 0; e < p.size(); ++e) {
    for (std::size_t member : a) {
      if (p.less_equal(member, e)) {
        c[e] = 1;
        break;
      }
    }
  }
  return c;
}

bool is_up_closed(const Poset& p, const Coloring& c) {
  if (c.size() != p.size()) return false;
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (!c[a]) continue;
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (p.less_equal(a, b) && !c[b]) return false;
    }
  }
  return true;
}

Antichain antichain_from_coloring(const Poset& p, const Coloring& c) {
  if (c.size() != p.size()) {
    throw std::invalid_argument("coloring size does not match poset size");
  }
  if (!is_up_closed(p, c)) {
    throw std::invalid_argument("coloring is not up-closed");
  }
  Antichain out;
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (!c[a]) continue;
    bool minimal = true;
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (b != a && c[b] && p.less_equal(b, a)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

bool assignment_respects_order(const Poset& p, const Assignment& a) {
  if (a.member_sets.size() != p.size()) return false;
  for (std::size_t lo = 0; lo < p.size(); ++lo) {
    for (std::size_t hi = 0; hi < p.size(); ++hi) {
      if (lo == hi || !p.less_equal(lo, hi)) continue;
      if (!std::includes(a.member_sets[hi].begin(), a.member_sets[hi].end(),
                         a.member_sets[lo].begin(), a.member_sets[lo].end())) {
        return false;
      }
    }
  }
  return true;
}

Cycle poset_cycle(const Poset& p, std::int64_t n, const ResourceLimits& limits,
                  std::size_t antichain_cap) {
  if (n < 1) throw std::invalid_argument("requires n >= 1");
  const auto alpha = static_cast<std::int64_t>(antichains(p, antichain_cap).size());
  if (alpha < 2) {
    throw std::invalid_argument("poset has fewer than two antichains; no cycle alphabet");
  }
  return generate_full(alpha, n, limits);
}

Assignment decode_assignment(const Poset& p, const Cycle& c, std::size_t start,
                             std::size_t antichain_cap) {
  if (start >= c.length()) {
    throw std::invalid_argument("window start out of range");
  }
  const std::vector<Antichain> alphabet = antichains(p, antichain_cap);
  if (c.alphabet_size() != alphabet.size()) {
    throw std::invalid_argument("cycle alphabet size " + std::to_string(c.alphabet_size()) +
                                " does not match antichain count " +
                                std::to_string(alphabet.size()));
  }
  Assignment out;
  out.member_sets.assign(p.size(), {});
  for (std::size_t j = 0; j < c.window_length(); ++j) {
    const Letter letter = c.letters()[(start + j) % c.length()];
    if (letter >= alphabet.size()) {
      throw std::invalid_argument("letter " + std::to_string(letter) +
                                  " out of alphabet range");
    }
    const Coloring coloring = coloring_from_antichain(p, alphabet[letter]);
    for (std::size_t e = 0; e < p.size(); ++e) {
      if (coloring[e]) out.member_sets[e].push_back(j + 1);
    }
  }
  return out;
}

BigInt count_assignments(const Poset& p, std::int64_t n, std::size_t antichain_cap) {
  if (n < 0) throw std::invalid_argument("requires n >= 0");
  const BigInt alpha(antichains(p, antichain_cap).size());
  return boost::multiprecision::pow(alpha, static_cast<unsigned>(n));
}

std::string format_antichain(const Poset& p, const Antichain& a) {
  std::string out = "{";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i > 0) out += ",";
    out += p.name_of(a[i]);
  }
  out += "}";
  return out;
}

}  // namespace debruijn
