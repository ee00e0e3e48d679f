#ifndef ORDLAB_WORD_HPP_
#define ORDLAB_WORD_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ordlab {

// A group word in syllable form: a sequence of (generator index, nonzero
// exponent) pairs in which adjacent pairs have distinct generator indices.
// The empty word is the identity.
struct Word {
  std::vector<std::pair<int, long long>> syls;

  Word() = default;
  explicit Word(std::vector<std::pair<int, long long>> s) : syls(std::move(s)) {}

  bool empty() const noexcept { return syls.empty(); }
  bool operator==(const Word& other) const noexcept { return syls == other.syls; }
  bool operator!=(const Word& other) const noexcept { return syls != other.syls; }

  // Number of letters, i.e. the sum of |exponent| over syllables.
  long long letter_length() const noexcept;

  // Appends one syllable, merging with the last syllable if the generator
  // matches and dropping it if the exponents cancel.
  void push_syllable(int gen, long long exp);
};

// Freely reduced concatenation.
Word concat(const Word& a, const Word& b);

// Freely reduced inverse.
Word inverse(const Word& w);

// w^n by repeated squaring is pointless at our scales; plain iteration.
Word power(const Word& w, long long n);

// Expands a word into single letters (gen, +1/-1), left to right.
std::vector<std::pair<int, int>> letters(const Word& w);

// Total order on words used everywhere a deterministic tie-break is needed:
// shorter letter length first, then syllable-wise (generator index ascending,
// then positive exponent before negative, then smaller |exponent|).
int word_cmp(const Word& a, const Word& b) noexcept;

struct WordLess {
  bool operator()(const Word& a, const Word& b) const noexcept {
    return word_cmp(a, b) < 0;
  }
};

// Renders a word in the presentation-file syntax, e.g. "x^2 y^-1"; the
// identity renders as "1".
std::string format_word(const Word& w, const std::vector<std::string>& gen_names);

// Stable key for hashing/maps, independent of generator names.
std::string word_key(const Word& w);

}  // namespace ordlab

#endif  // ORDLAB_WORD_HPP_
