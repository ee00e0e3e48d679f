// Test-only independent oracles.  These deliberately avoid the library's
// normal-form machinery so that word-problem tests check two genuinely
// different routes.
#ifndef ORDLAB_TESTS_ORACLES_HPP_
#define ORDLAB_TESTS_ORACLES_HPP_

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ordlab/backend.hpp"
#include "ordlab/word.hpp"

namespace ordlab::testing {

// Klein bottle via its faithful affine action on Z^2: x.(m,n) = (m+1, -n),
// y.(m,n) = (m, n+1).  The action is free, so the orbit of the origin
// separates elements.
inline std::pair<long long, long long> klein_orbit_point(const Word& w, int x_idx) {
  long long m = 0, n = 0;
  const auto ls = letters(w);
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    auto [g, e] = *it;
    if (g == x_idx) {
      if (e > 0) {
        m += 1;
        n = -n;
      } else {
        n = -n;
        m -= 1;
      }
    } else {
      n += e;
    }
  }
  return {m, n};
}

inline bool klein_equal(const Word& a, const Word& b, int x_idx) {
  return klein_orbit_point(a, x_idx) == klein_orbit_point(b, x_idx);
}

// Reduced Burau representation of B_3 = <u, v | u^2 = v^3> (u = s1 s2 s1,
// v = s1 s2), faithful for B_3; entries are Laurent polynomials in t.
class Burau {
 public:
  using Poly = std::map<int, long long>;  // exponent -> coefficient
  using Mat = std::array<Poly, 4>;        // row-major 2x2

  static Mat identity() {
    Mat m;
    m[0][0] = 1;
    m[3][0] = 1;
    return m;
  }

  static Poly trim(Poly p) {
    for (auto it = p.begin(); it != p.end();) {
      it = it->second == 0 ? p.erase(it) : std::next(it);
    }
    return p;
  }

  static Mat mul(const Mat& a, const Mat& b) {
    auto pm = [](const Poly& x, const Poly& y) {
      Poly out;
      for (auto& [ex, cx] : x) {
        for (auto& [ey, cy] : y) {
          out[ex + ey] += cx * cy;
        }
      }
      return out;
    };
    auto pa = [](Poly x, const Poly& y) {
      for (auto& [e, c] : y) {
        x[e] += c;
      }
      return x;
    };
    Mat out;
    out[0] = trim(pa(pm(a[0], b[0]), pm(a[1], b[2])));
    out[1] = trim(pa(pm(a[0], b[1]), pm(a[1], b[3])));
    out[2] = trim(pa(pm(a[2], b[0]), pm(a[3], b[2])));
    out[3] = trim(pa(pm(a[2], b[1]), pm(a[3], b[3])));
    return out;
  }

  Burau() {
    // s1 -> [[-t, 1], [0, 1]], s2 -> [[1, 0], [t, -t]]
    Mat s1 = identity(), s2 = identity();
    s1[0] = {{1, -1}};
    s1[1] = {{0, 1}};
    s1[3] = {{0, 1}};
    s1[2] = {};
    s2[0] = {{0, 1}};
    s2[1] = {};
    s2[2] = {{1, 1}};
    s2[3] = {{1, -1}};
    // inverses: s1^-1 = [[-t^-1, t^-1], [0, 1]], s2^-1 = [[1, 0], [1, -t^-1]]
    Mat i1 = identity(), i2 = identity();
    i1[0] = {{-1, -1}};
    i1[1] = {{-1, 1}};
    i1[2] = {};
    i1[3] = {{0, 1}};
    i2[0] = {{0, 1}};
    i2[1] = {};
    i2[2] = {{0, 1}};
    i2[3] = {{-1, -1}};
    u_ = mul(mul(s1, s2), s1);
    v_ = mul(s1, s2);
    u_inv_ = mul(i1, mul(i2, i1));
    v_inv_ = mul(i2, i1);
  }

  // Evaluates a word over generators (0 = u, 1 = v).
  Mat eval(const Word& w) const {
    Mat m = identity();
    for (auto [g, e] : letters(w)) {
      const Mat& step = g == 0 ? (e > 0 ? u_ : u_inv_) : (e > 0 ? v_ : v_inv_);
      m = mul(m, step);
    }
    return m;
  }

  bool equal(const Word& a, const Word& b) const { return eval(a) == eval(b); }

 private:
  Mat u_, v_, u_inv_, v_inv_;
};

// All freely reduced words of letter length <= r over the given rank,
// as raw (unreduced-in-the-group) words.
inline void all_words(int ngens, int r, std::vector<Word>& out) {
  out.clear();
  std::vector<std::vector<std::pair<int, int>>> frontier{{}};
  out.push_back(Word{});
  for (int d = 1; d <= r; ++d) {
    std::vector<std::vector<std::pair<int, int>>> next;
    for (auto& w : frontier) {
      for (int g = 0; g < ngens; ++g) {
        for (int e : {1, -1}) {
          auto w2 = w;
          w2.emplace_back(g, e);
          Word word;
          for (auto [gg, ee] : w2) {
            word.push_syllable(gg, ee);
          }
          out.push_back(word);
          next.push_back(std::move(w2));
        }
      }
    }
    frontier = std::move(next);
  }
}

}  // namespace ordlab::testing

#endif
