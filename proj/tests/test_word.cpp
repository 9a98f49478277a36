#include <random>
#include <set>

#include "doctest.h"

#include "debruijn/word.hpp"

using namespace debruijn;

namespace {

Word make(std::initializer_list<Letter> letters, std::uint32_t k) {
  return Word(std::vector<Letter>(letters), k);
}

}  // namespace

TEST_CASE("weight sums the letters") {
  CHECK(make({0, 0, 0, 2, 2, 5, 5, 5, 3, 3}, 6).weight() == 25);
  CHECK(make({0, 0, 0}, 2).weight() == 0);
  CHECK(make({1, 1, 1, 0}, 2).weight() == 3);
}

TEST_CASE("word construction validates letters and alphabet") {
  CHECK_THROWS_AS(Word({}, 2), std::invalid_argument);
  CHECK_THROWS_AS(make({2}, 2), std::invalid_argument);
  CHECK_THROWS_AS(make({0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(make({0}, 70000), std::invalid_argument);
  CHECK_NOTHROW(make({0, 1}, 65536));
}

TEST_CASE("cycle windows read cyclically") {
  Cycle c(parse_letters("11101000", 2), 2, 3);
  CHECK(c.window(6) == make({0, 0, 1}, 2));
  CHECK(c.window(0) == make({1, 1, 1}, 2));

  Cycle single({3}, 5, 1);
  CHECK(single.window(0) == make({3}, 5));
}

TEST_CASE("word_to_multiset uses multiplicities") {
  CHECK(word_to_multiset(make({1, 0, 1}, 2)) == std::vector<std::size_t>{1, 3});
  CHECK(word_to_multiset(make({0, 0, 0, 0}, 2)).empty());
  CHECK(word_to_multiset(make({2, 0, 1}, 3)) == std::vector<std::size_t>{1, 1, 3});
}

TEST_CASE("rotate shifts the first letter to the back") {
  CHECK(make({0, 1, 1}, 2).rotated() == make({1, 1, 0}, 2));
  CHECK(make({3, 3, 3, 0, 0, 2, 2, 2, 2, 5}, 6).rotated() ==
        make({3, 3, 0, 0, 2, 2, 2, 2, 5, 3}, 6));
  CHECK(make({5}, 6).rotated() == make({5}, 6));
}

TEST_CASE("rotation preserves weight") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t k = 2 + rng() % 8;
    const std::size_t len = 1 + rng() % 12;
    std::vector<Letter> letters(len);
    for (auto& l : letters) l = static_cast<Letter>(rng() % k);
    Word w(letters, k);
    CHECK(w.rotated().weight() == w.weight());
    CHECK(static_cast<std::int64_t>(word_to_multiset(w).size()) == w.weight());
  }
}

TEST_CASE("a cycle of length L has L windows, counted with multiplicity") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint32_t k = 2 + rng() % 4;
    const std::size_t len = 2 + rng() % 10;
    const std::size_t n = 1 + rng() % 5;
    std::vector<Letter> letters(len);
    for (auto& l : letters) l = static_cast<Letter>(rng() % k);
    Cycle c(letters, k, n);
    std::multiset<std::vector<Letter>> windows;
    for (std::size_t i = 0; i < c.length(); ++i) windows.insert(c.window(i).letters());
    CHECK(windows.size() == c.length());
  }
}

TEST_CASE("text renderings round-trip") {
  const std::vector<Letter> letters{0, 0, 0, 2, 2, 5, 5, 5, 3, 3};
  CHECK(to_digit_string(letters, 6) == "0002255533");
  CHECK(to_csv_string(letters) == "0,0,0,2,2,5,5,5,3,3");
  CHECK(parse_letters("0002255533", 6) == letters);
  CHECK(parse_letters("0,0,0,2,2,5,5,5,3,3", 6) == letters);

  CHECK_THROWS_AS(to_digit_string({0, 11}, 12), std::invalid_argument);
  CHECK_THROWS_AS(parse_letters("012", 11), std::invalid_argument);
  CHECK(parse_letters("0,11,3", 12) == std::vector<Letter>{0, 11, 3});
  CHECK_THROWS_AS(parse_letters("7", 6), std::invalid_argument);
  CHECK_THROWS_AS(parse_letters("1,x,2", 6), std::invalid_argument);
  CHECK_THROWS_AS(parse_letters("", 6), std::invalid_argument);
}
