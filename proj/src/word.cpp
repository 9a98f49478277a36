#include "debruijn/word.hpp"

#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace debruijn {

namespace {

void check_alphabet(std::uint32_t k) {
  if (k < 2 || k > kMaxAlphabetSize) {
    throw std::invalid_argument("alphabet size must satisfy 2 <= k <= 65536, got " +
                                std::to_string(k));
  }
}

void check_letters(const std::vector<Letter>& letters, std::uint32_t k) {
  if (letters.empty()) {
    throw std::invalid_argument("a word must contain at least one letter");
  }
  for (Letter l : letters) {
    if (l >= k) {
      throw std::invalid_argument("letter " + std::to_string(l) +
                                  " out of range for alphabet size " + std::to_string(k));
    }
  }
}

}  // namespace

Word::Word(std::vector<Letter> letters, std::uint32_t alphabet_size)
    : letters_(std::move(letters)), alphabet_size_(alphabet_size) {
  check_alphabet(alphabet_size_);
  check_letters(letters_, alphabet_size_);
}

std::int64_t Word::weight() const {
  return std::accumulate(letters_.begin(), letters_.end(), std::int64_t{0});
}

Word Word::rotated() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  out.insert(out.end(), letters_.begin() + 1, letters_.end());
  out.push_back(letters_.front());
  return Word(std::move(out), alphabet_size_);
}

std::vector<std::size_t> word_to_multiset(const Word& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (Letter c = 0; c < w[i]; ++c) out.push_back(i + 1);
  }
  return out;
}

Cycle::Cycle(std::vector<Letter> letters, std::uint32_t alphabet_size,
             std::size_t window_length)
    : letters_(std::move(letters)),
      alphabet_size_(alphabet_size),
      window_length_(window_length) {
  check_alphabet(alphabet_size_);
  check_letters(letters_, alphabet_size_);
  if (window_length_ == 0) {
    throw std::invalid_argument("window length must be at least 1");
  }
}

Word Cycle::window(std::size_t start) const {
  if (start >= letters_.size()) {
    throw std::out_of_range("window start " + std::to_string(start) +
                            " out of range for cycle of length " +
                            std::to_string(letters_.size()));
  }
  std::vector<Letter> out;
  out.reserve(window_length_);
  for (std::size_t j = 0; j < window_length_; ++j) {
    out.push_back(letters_[(start + j) % letters_.size()]);
  }
  return Word(std::move(out), alphabet_size_);
}

std::string to_digit_string(const std::vector<Letter>& letters,
                            std::uint32_t alphabet_size) {
  if (alphabet_size > 10) {
    throw std::invalid_argument(
        "digit-string rendering requires alphabet size <= 10; use the "
        "comma-separated form");
  }
  std::string out;
  out.reserve(letters.size());
  for (Letter l : letters) out.push_back(static_cast<char>('0' + l));
  return out;
}

std::string to_csv_string(const std::vector<Letter>& letters) {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(letters[i]);
  }
  return out;
}

std::vector<Letter> parse_letters(const std::string& text,
                                  std::uint32_t alphabet_size) {
  check_alphabet(alphabet_size);
  std::vector<Letter> out;
  if (text.empty()) {
    throw std::invalid_argument("empty letter sequence");
  }
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      unsigned long value = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
      if (ec != std::errc{} || ptr != item.data() + item.size()) {
        throw std::invalid_argument("bad letter '" + item + "' in comma-separated list");
      }
      if (value >= alphabet_size) {
        throw std::invalid_argument("letter " + item + " out of range for alphabet size " +
                                    std::to_string(alphabet_size));
      }
      out.push_back(static_cast<Letter>(value));
    }
  } else {
    if (alphabet_size > 10) {
      throw std::invalid_argument(
          "alphabet size exceeds 10; letters must be comma-separated");
    }
    for (char ch : text) {
      if (ch < '0' || ch > '9') {
        throw std::invalid_argument(std::string("bad digit '") + ch + "' in letter string");
      }
      auto value = static_cast<std::uint32_t>(ch - '0');
      if (value >= alphabet_size) {
        throw std::invalid_argument(std::string("letter ") + ch +
                                    " out of range for alphabet size " +
                                    std::to_string(alphabet_size));
      }
      out.push_back(static_cast<Letter>(value));
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  os << '(' << to_csv_string(w.letters()) << ')';
  return os;
}

}  // namespace debruijn
