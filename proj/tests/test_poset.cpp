#include <set>
#include <sstream>

#include "doctest.h"

#include "debruijn/errors.hpp"
#include "debruijn/poset.hpp"
#include "debruijn/verify.hpp"

using namespace debruijn;

namespace {

Poset two_chain() { return Poset({"A", "B"}, {{"A", "B"}}); }

Poset four_chain() {
  return Poset({"A", "B", "C", "D"}, {{"A", "B"}, {"B", "C"}, {"C", "D"}});
}

// Minimal elements a, c, e; maximal b, d; shaped like the letter W.
Poset w_poset() {
  return Poset({"a", "b", "c", "d", "e"},
               {{"a", "b"}, {"c", "b"}, {"c", "d"}, {"e", "d"}});
}

Poset diamond() {
  return Poset({"bot", "l", "r", "top"},
               {{"bot", "l"}, {"bot", "r"}, {"l", "top"}, {"r", "top"}});
}

Poset antichain3() { return Poset({"x", "y", "z"}, {}); }

std::vector<Poset> corpus() {
  return {two_chain(), four_chain(), w_poset(), diamond(), antichain3(),
          Poset({"only"}, {}), Poset({}, {})};
}

std::uint64_t brute_force_up_closed_count(const Poset& p) {
  std::uint64_t total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p.size()); ++mask) {
    Coloring c(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) c[i] = (mask >> i) & 1;
    if (is_up_closed(p, c)) ++total;
  }
  return total;
}

}  // namespace

TEST_CASE("closure is exactly the reflexive cover order") {
  const Poset w = w_poset();
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w.less_equal(i, j)) ++pairs;
    }
  }
  CHECK(pairs == 5 + 4);  // reflexive pairs plus the four covers

  const Poset chain = two_chain();
  CHECK(chain.less_equal(0, 0));
  CHECK(chain.less_equal(0, 1));
  CHECK(chain.less_equal(1, 1));
  CHECK_FALSE(chain.less_equal(1, 0));

  const Poset four = four_chain();
  CHECK(four.less_equal(0, 3));
}

TEST_CASE("poset construction rejects malformed cover lists") {
  CHECK_THROWS_AS(Poset({"A", "B"}, {{"A", "B"}, {"B", "A"}}), std::invalid_argument);
  CHECK_THROWS_AS(Poset({"A", "B", "C"}, {{"A", "C"}, {"A", "B"}, {"B", "C"}}),
                  std::invalid_argument);  // A->C implied by A->B->C
  CHECK_THROWS_AS(Poset({"A"}, {{"A", "A"}}), std::invalid_argument);
  CHECK_THROWS_AS(Poset({"A", "A"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Poset({"A"}, {{"A", "Z"}}), std::invalid_argument);
  CHECK_THROWS_AS(Poset({"A", "B"}, {{"A", "B"}, {"A", "B"}}), std::invalid_argument);
}

TEST_CASE("poset files parse and validate") {
  std::istringstream good(
      "# shaped like a W\n"
      "elements: a b c d e\n"
      "cover: a b\n"
      "cover: c b\n"
      "cover: c d\n"
      "cover: e d\n");
  const Poset p = parse_poset(good);
  CHECK(p.size() == 5);
  CHECK(p.covers().size() == 4);

  std::istringstream no_elements("cover: a b\n");
  CHECK_THROWS_AS(parse_poset(no_elements), std::invalid_argument);
  std::istringstream bad_line("elements: a b\nedge: a b\n");
  CHECK_THROWS_AS(parse_poset(bad_line), std::invalid_argument);
  std::istringstream bad_cover("elements: a b\ncover: a\n");
  CHECK_THROWS_AS(parse_poset(bad_cover), std::invalid_argument);
}

TEST_CASE("antichain counts match the classic examples") {
  CHECK(antichains(two_chain()).size() == 3);
  CHECK(antichains(w_poset()).size() == 13);
  CHECK(antichains(four_chain()).size() == 5);
  CHECK(antichains(diamond()).size() == 6);
  CHECK(antichains(antichain3()).size() == 8);
  CHECK(antichains(Poset({}, {})).size() == 1);  // just the empty antichain

  const auto two = antichains(two_chain());
  CHECK(two == std::vector<Antichain>{{}, {0}, {1}});
}

TEST_CASE("antichain enumeration honors its cap") {
  CHECK_THROWS_AS(antichains(w_poset(), 12), CapExceededError);
  CHECK_NOTHROW(antichains(w_poset(), 13));
}

TEST_CASE("coloring_from_antichain paints everything above the antichain") {
  const Poset chain = two_chain();
  CHECK(coloring_from_antichain(chain, {0}) == Coloring{1, 1});
  CHECK(coloring_from_antichain(chain, {1}) == Coloring{0, 1});
  CHECK(coloring_from_antichain(chain, {}) == Coloring{0, 0});
}

TEST_CASE("antichain_from_coloring picks the minimal colored elements") {
  const Poset chain = two_chain();
  CHECK(antichain_from_coloring(chain, {0, 0}).empty());
  CHECK(antichain_from_coloring(chain, {1, 1}) == Antichain{0});
  CHECK_THROWS_AS(antichain_from_coloring(chain, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(antichain_from_coloring(chain, {1}), std::invalid_argument);
}

TEST_CASE("colorings and antichains are in bijection on the whole corpus") {
  for (const Poset& p : corpus()) {
    const auto chains = antichains(p);
    CHECK(chains.size() == brute_force_up_closed_count(p));

    std::set<Coloring> seen;
    for (const Antichain& a : chains) {
      const Coloring c = coloring_from_antichain(p, a);
      CHECK(is_up_closed(p, c));
      CHECK(antichain_from_coloring(p, c) == a);
      CHECK(seen.insert(c).second);
    }

    // Reverse direction over every up-closed coloring.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p.size()); ++mask) {
      Coloring c(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) c[i] = (mask >> i) & 1;
      if (!is_up_closed(p, c)) continue;
      CHECK(coloring_from_antichain(p, antichain_from_coloring(p, c)) == c);
    }
  }
}

TEST_CASE("count_assignments is alpha^n") {
  CHECK(count_assignments(two_chain(), 2) == 9);
  CHECK(count_assignments(w_poset(), 1) == 13);
  CHECK(count_assignments(w_poset(), 0) == 1);
  CHECK(count_assignments(four_chain(), 10) == BigInt(9765625));
}

TEST_CASE("poset cycles cover every assignment exactly once") {
  {
    const Cycle c = poset_cycle(two_chain(), 2);
    CHECK(c.length() == 9);
    CHECK(c.alphabet_size() == 3);
    CHECK(verify_poset_cycle(c, two_chain(), 2).pass);
  }
  {
    // A single ground element gives the classic binary cycle.
    const Poset single({"only"}, {});
    const Cycle c = poset_cycle(single, 4);
    CHECK(c.length() == 16);
    CHECK(c.alphabet_size() == 2);
    CHECK(verify_poset_cycle(c, single, 4).pass);
  }
  {
    const Cycle c = poset_cycle(w_poset(), 2);
    CHECK(c.length() == 169);
    CHECK(verify_poset_cycle(c, w_poset(), 2).pass);
  }
  CHECK_THROWS_AS(poset_cycle(Poset({}, {}), 2), std::invalid_argument);
}

TEST_CASE("decoded assignments respect the order") {
  const Poset w = w_poset();
  const Cycle c = poset_cycle(w, 2);
  for (std::size_t i = 0; i < c.length(); ++i) {
    CHECK(assignment_respects_order(w, decode_assignment(w, c, i)));
  }
}

TEST_CASE("decoding the reference two-chain cycle reproduces its assignments") {
  // The cycle over letters 0 = {}, 1 = {A}, 2 = {B} whose windows run through
  // all nine assignments of {1,2} to the chain A < B.
  const Poset chain = two_chain();
  const Cycle c(parse_letters("110022120", 3), 3, 2);
  REQUIRE(verify_poset_cycle(c, chain, 2).pass);

  const Assignment w0 = decode_assignment(chain, c, 0);
  CHECK(w0.member_sets[0] == std::vector<std::size_t>{1, 2});  // A
  CHECK(w0.member_sets[1] == std::vector<std::size_t>{1, 2});  // B

  const Assignment w3 = decode_assignment(chain, c, 3);
  CHECK(w3.member_sets[0].empty());
  CHECK(w3.member_sets[1] == std::vector<std::size_t>{2});

  const Assignment w8 = decode_assignment(chain, c, 8);
  CHECK(w8.member_sets[0] == std::vector<std::size_t>{2});
  CHECK(w8.member_sets[1] == std::vector<std::size_t>{2});
}

TEST_CASE("a mutated poset cycle fails with a duplicate window") {
  // Changing the final letter of the reference cycle duplicates a window.
  const Poset chain = two_chain();
  const Cycle c(parse_letters("110022122", 3), 3, 2);
  const auto report = verify_poset_cycle(c, chain, 2);
  CHECK_FALSE(report.pass);
  CHECK(report.first_bad_index.has_value());
  CHECK(report.reason.find("repeats") != std::string::npos);
}

TEST_CASE("poset cycle verification rejects an alphabet mismatch") {
  const Poset single({"only"}, {});  // two antichains
  const Cycle c(parse_letters("0102", 3), 3, 2);
  CHECK_THROWS_AS(verify_poset_cycle(c, single, 2), std::invalid_argument);
}

TEST_CASE("format_antichain renders element names") {
  const Poset w = w_poset();
  CHECK(format_antichain(w, {}) == "{}");
  CHECK(format_antichain(w, {0, 2, 4}) == "{a,c,e}");
}
