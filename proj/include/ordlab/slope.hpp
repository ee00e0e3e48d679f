#ifndef ORDLAB_SLOPE_HPP_
#define ORDLAB_SLOPE_HPP_

#include <optional>
#include <string>

namespace ordlab {

// A projective slope [p : q], printed p/q, with two exact flavours: rational
// (q >= 0, gcd 1, vertical = 1/0) and quadratic irrational (a + b sqrt(d))/c
// with b != 0, c > 0, d squarefree >= 2.  Quadratic values keep comparisons
// exact through integer sign analysis.
struct Slope {
  bool rational = true;
  long long p = 0, q = 1;
  long long a = 0, b = 0, c = 1, d = 0;

  static Slope of_fraction(long long p, long long q);
  static Slope infinity() { return of_fraction(1, 0); }
  static Slope quadratic(long long a, long long b, long long c, long long d);

  bool is_infinite() const { return rational && q == 0; }
  std::string str() const;  // "p/q", "(a+b√d)/c", or "∞"

  bool operator==(const Slope& o) const;
  bool operator!=(const Slope& o) const { return !(*this == o); }
};

// Sign of A + B*sqrt(d), exact.
int quad_sign(long long A, long long B, long long d);

// Affine comparison of slope values with infinity largest; throws on two
// quadratic slopes over different radicands.
int slope_cmp_affine(const Slope& s, const Slope& t);

// Parses "p/q", "inf"/"∞", "sqrt(d)", "(a+b*sqrt(d))/c", and the shorthands
// "l" (longitude, 0/1) and "m" (meridian, 1/0).
std::optional<Slope> parse_slope(const std::string& text);

// A line through the origin of the lattice plane, y = slope * x in the
// geometric (dy/dx) convention, with a declared positive side (+1 = above).
struct LatticeLine {
  Slope slope;
  int positive_side = 1;

  // Sign of the half-plane position of (x, y): positive on the declared
  // positive side, zero on the line.
  int side(long long x, long long y) const;

  // Primitive direction vector for rational slopes, canonically oriented.
  std::pair<long long, long long> direction() const;
};

// Projective action of a 2x2 integer matrix on slopes: [p:q] -> M (p,q)^T.
struct Mat2 {
  long long m[2][2];
  long long det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
  Mat2 inverse_unimodular() const;  // requires det = +-1
};

Slope transport_slope(const Mat2& f, const Slope& s);

}  // namespace ordlab

#endif  // ORDLAB_SLOPE_HPP_
