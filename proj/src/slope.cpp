#include "ordlab/slope.hpp"

#include <numeric>
#include <stdexcept>

namespace ordlab {

namespace {

using int128 = __int128;

int sgn128(int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

long long squarefree_part(long long d, long long& square_root_out) {
  long long sq = 1;
  for (long long f = 2; f * f <= d; ++f) {
    while (d % (f * f) == 0) {
      d /= f * f;
      sq *= f;
    }
  }
  square_root_out = sq;
  return d;
}

}  // namespace

int quad_sign(long long A, long long B, long long d) {
  if (B == 0) {
    return A > 0 ? 1 : (A < 0 ? -1 : 0);
  }
  if (A == 0) {
    return B > 0 ? 1 : -1;
  }
  if (A > 0 && B > 0) {
    return 1;
  }
  if (A < 0 && B < 0) {
    return -1;
  }
  // opposite signs: compare A^2 with B^2 d (equality impossible, d nonsquare)
  const int cmp = sgn128(int128(A) * A - int128(B) * B * d);
  return A > 0 ? cmp : -cmp;
}

Slope Slope::of_fraction(long long p, long long q) {
  if (p == 0 && q == 0) {
    throw std::invalid_argument("slope 0/0");
  }
  if (q == 0) {
    p = 1;
  } else {
    if (q < 0) {
      p = -p;
      q = -q;
    }
    const long long g = std::gcd(p < 0 ? -p : p, q);
    p /= g;
    q /= g;
  }
  Slope s;
  s.rational = true;
  s.p = p;
  s.q = q;
  return s;
}

Slope Slope::quadratic(long long a, long long b, long long c, long long d) {
  if (c == 0 || d < 2) {
    throw std::invalid_argument("quadratic slope needs c != 0 and d >= 2");
  }
  long long sq = 1;
  d = squarefree_part(d, sq);
  b *= sq;
  if (d == 1 || b == 0) {
    return of_fraction(a + b, c);  // collapsed to a rational value
  }
  if (c < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  long long g = std::gcd(std::gcd(a < 0 ? -a : a, b < 0 ? -b : b), c);
  if (g == 0) {
    g = 1;
  }
  Slope s;
  s.rational = false;
  s.a = a / g;
  s.b = b / g;
  s.c = c / g;
  s.d = d;
  return s;
}

std::string Slope::str() const {
  if (rational) {
    if (q == 0) {
      return "∞";
    }
    return std::to_string(p) + "/" + std::to_string(q);
  }
  std::string num;
  if (a != 0) {
    num = std::to_string(a);
  }
  if (b == 1) {
    num += a != 0 ? "+" : "";
  } else if (b == -1) {
    num += "-";
  } else {
    num += (b > 0 && a != 0 ? "+" : "") + std::to_string(b);
  }
  num += "√" + std::to_string(d);
  return "(" + num + ")/" + std::to_string(c);
}

bool Slope::operator==(const Slope& o) const {
  if (rational != o.rational) {
    return false;
  }
  if (rational) {
    return p == o.p && q == o.q;
  }
  return a == o.a && b == o.b && c == o.c && d == o.d;
}

int slope_cmp_affine(const Slope& s, const Slope& t) {
  const bool si = s.is_infinite(), ti = t.is_infinite();
  if (si || ti) {
    if (si && ti) {
      return 0;
    }
    return si ? 1 : -1;
  }
  if (s.rational && t.rational) {
    return sgn128(int128(s.p) * t.q - int128(t.p) * s.q);
  }
  if (s.rational) {
    // p/q vs (a+b sqrt d)/c  ->  sign(p c - q a - q b sqrt d)
    return quad_sign(s.p * t.c - s.q * t.a, -s.q * t.b, t.d);
  }
  if (t.rational) {
    return -slope_cmp_affine(t, s);
  }
  if (s.d != t.d) {
    throw std::invalid_argument("cannot compare quadratic slopes over different radicands");
  }
  return quad_sign(s.a * t.c - t.a * s.c, s.b * t.c - t.b * s.c, s.d);
}

std::optional<Slope> parse_slope(const std::string& text) {
  try {
    if (text == "l") {
      return Slope::of_fraction(0, 1);
    }
    if (text == "m" || text == "inf" || text == "∞") {
      return Slope::infinity();
    }
    auto sqrtpos = text.find("sqrt(");
    if (sqrtpos != std::string::npos) {
      // forms: "sqrt(d)" or "(a+b*sqrt(d))/c" with integer a, b, c
      if (text.rfind("sqrt(", 0) == 0 && text.back() == ')') {
        const long long d = std::stoll(text.substr(5, text.size() - 6));
        return Slope::quadratic(0, 1, 1, d);
      }
      if (text.front() != '(') {
        return std::nullopt;
      }
      const auto close = text.find("))/");
      if (close == std::string::npos) {
        return std::nullopt;
      }
      const std::string inner = text.substr(1, close);  // a+b*sqrt(d)
      const long long c = std::stoll(text.substr(close + 3));
      const auto star = inner.find("*sqrt(");
      if (star == std::string::npos) {
        return std::nullopt;
      }
      const long long d = std::stoll(inner.substr(star + 6));
      std::string ab = inner.substr(0, star);
      long long a = 0, b = 1;
      auto split = ab.rfind('+');
      if (split == std::string::npos || split == 0) {
        split = ab.rfind('-');
        if (split == 0) {
          split = std::string::npos;
        }
      }
      if (split == std::string::npos) {
        b = std::stoll(ab);
      } else {
        a = std::stoll(ab.substr(0, split));
        b = std::stoll(ab.substr(split));
      }
      return Slope::quadratic(a, b, c, d);
    }
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
      return Slope::of_fraction(std::stoll(text), 1);
    }
    return Slope::of_fraction(std::stoll(text.substr(0, slash)),
                              std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

int LatticeLine::side(long long x, long long y) const {
  int raw;
  if (slope.rational) {
    // direction (q, p): raw = q y - p x
    raw = sgn128(int128(slope.q) * y - int128(slope.p) * x);
  } else {
    // y - s x with s = (a + b sqrt d)/c, c > 0
    raw = quad_sign(slope.c * y - slope.a * x, -slope.b * x, slope.d);
  }
  return raw * positive_side;
}

std::pair<long long, long long> LatticeLine::direction() const {
  if (!slope.rational) {
    throw std::invalid_argument("irrational line has no lattice direction");
  }
  return {slope.q, slope.p};  // already coprime, q >= 0
}

Mat2 Mat2::inverse_unimodular() const {
  const long long dt = det();
  if (dt != 1 && dt != -1) {
    throw std::invalid_argument("matrix is not in GL(2,Z)");
  }
  return Mat2{{{dt * m[1][1], -dt * m[0][1]}, {-dt * m[1][0], dt * m[0][0]}}};
}

Slope transport_slope(const Mat2& f, const Slope& s) {
  if (s.rational) {
    return Slope::of_fraction(f.m[0][0] * s.p + f.m[0][1] * s.q,
                              f.m[1][0] * s.p + f.m[1][1] * s.q);
  }
  // s = (a + b sqrt d)/c acting as [s : 1]; rationalise the denominator.
  const long long A1 = f.m[0][0] * s.a + f.m[0][1] * s.c, B1 = f.m[0][0] * s.b;
  const long long A2 = f.m[1][0] * s.a + f.m[1][1] * s.c, B2 = f.m[1][0] * s.b;
  const long long num_a = A1 * A2 - B1 * B2 * s.d;
  const long long num_b = B1 * A2 - A1 * B2;
  const long long den = A2 * A2 - B2 * B2 * s.d;
  if (den == 0) {
    return Slope::infinity();
  }
  return Slope::quadratic(num_a, num_b, den, s.d);
}

}  // namespace ordlab
