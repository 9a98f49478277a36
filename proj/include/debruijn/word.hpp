#pragma once

#include <cstdint>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace debruijn {

using Letter = std::uint16_t;

// Alphabets up to 2^16 letters are supported so that cycles over derived
// alphabets (e.g. one letter per antichain of a poset) reuse the same types.
inline constexpr std::uint32_t kMaxAlphabetSize = 1u << 16;

// A finite word over the alphabet {0, ..., k-1}. Equality is positional;
// rotations of a word are distinct words.
class Word {
 public:
  Word(std::vector<Letter> letters, std::uint32_t alphabet_size);

  std::size_t size() const { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::uint32_t alphabet_size() const { return alphabet_size_; }

  // Sum of the letters.
  std::int64_t weight() const;

  // (w1, w2, ..., wm) -> (w2, ..., wm, w1). Preserves weight.
  Word rotated() const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
  std::uint32_t alphabet_size_;
};

// Multiset over {1..n} encoded by w: element i appears with multiplicity w_i.
// Returned sorted, with repeats, e.g. (2,0,1) -> {1,1,3}.
std::vector<std::size_t> word_to_multiset(const Word& w);

// A cyclic sequence of letters read through a sliding window of fixed length.
// Indexing is modular: positions i and i + length() coincide.
class Cycle {
 public:
  Cycle(std::vector<Letter> letters, std::uint32_t alphabet_size,
        std::size_t window_length);

  std::size_t length() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }
  std::uint32_t alphabet_size() const { return alphabet_size_; }
  std::size_t window_length() const { return window_length_; }

  // The window_length() letters read cyclically from position start.
  Word window(std::size_t start) const;

  bool operator==(const Cycle&) const = default;

 private:
  std::vector<Letter> letters_;
  std::uint32_t alphabet_size_;
  std::size_t window_length_;
};

// Text renderings. Digit-string form ("0002255533") requires alphabet <= 10;
// the comma-separated form works for any alphabet.
std::string to_digit_string(const std::vector<Letter>& letters,
                            std::uint32_t alphabet_size);
std::string to_csv_string(const std::vector<Letter>& letters);

// Accepts either rendering: a string containing ',' is parsed as
// comma-separated integers, anything else as a digit string.
std::vector<Letter> parse_letters(const std::string& text,
                                  std::uint32_t alphabet_size);

std::ostream& operator<<(std::ostream& os, const Word& w);

}  // namespace debruijn
