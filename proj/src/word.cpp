#include "ordlab/word.hpp"

#include <cmath>
#include <cstdlib>

namespace ordlab {

long long Word::letter_length() const noexcept {
  long long n = 0;
  for (auto& [g, e] : syls) {
    n += std::llabs(e);
  }
  return n;
}

void Word::push_syllable(int gen, long long exp) {
  if (exp == 0) {
    return;
  }
  if (!syls.empty() && syls.back().first == gen) {
    syls.back().second += exp;
    if (syls.back().second == 0) {
      syls.pop_back();
    }
  } else {
    syls.emplace_back(gen, exp);
  }
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  for (auto& [g, e] : b.syls) {
    out.push_syllable(g, e);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.syls.reserve(w.syls.size());
  for (auto it = w.syls.rbegin(); it != w.syls.rend(); ++it) {
    out.syls.emplace_back(it->first, -it->second);
  }
  return out;
}

Word power(const Word& w, long long n) {
  Word out;
  const Word base = n >= 0 ? w : inverse(w);
  const long long reps = n >= 0 ? n : -n;
  for (long long i = 0; i < reps; ++i) {
    out = concat(out, base);
  }
  return out;
}

std::vector<std::pair<int, int>> letters(const Word& w) {
  std::vector<std::pair<int, int>> out;
  for (auto& [g, e] : w.syls) {
    const int step = e > 0 ? 1 : -1;
    for (long long i = 0; i < std::llabs(e); ++i) {
      out.emplace_back(g, step);
    }
  }
  return out;
}

int word_cmp(const Word& a, const Word& b) noexcept {
  const long long la = a.letter_length(), lb = b.letter_length();
  if (la != lb) {
    return la < lb ? -1 : 1;
  }
  const size_t n = std::min(a.syls.size(), b.syls.size());
  for (size_t i = 0; i < n; ++i) {
    auto [ga, ea] = a.syls[i];
    auto [gb, eb] = b.syls[i];
    if (ga != gb) {
      return ga < gb ? -1 : 1;
    }
    const int sa = ea > 0 ? 0 : 1, sb = eb > 0 ? 0 : 1;
    if (sa != sb) {
      return sa < sb ? -1 : 1;
    }
    if (std::llabs(ea) != std::llabs(eb)) {
      return std::llabs(ea) < std::llabs(eb) ? -1 : 1;
    }
  }
  if (a.syls.size() != b.syls.size()) {
    return a.syls.size() < b.syls.size() ? -1 : 1;
  }
  return 0;
}

std::string format_word(const Word& w, const std::vector<std::string>& gen_names) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (auto& [g, e] : w.syls) {
    if (!out.empty()) {
      out += ' ';
    }
    if (g < 0 || static_cast<size_t>(g) >= gen_names.size()) {
      throw std::out_of_range("format_word: generator index out of range");
    }
    out += gen_names[static_cast<size_t>(g)];
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

std::string word_key(const Word& w) {
  std::string key;
  for (auto& [g, e] : w.syls) {
    key += std::to_string(g);
    key += '^';
    key += std::to_string(e);
    key += '.';
  }
  return key;
}

}  // namespace ordlab
