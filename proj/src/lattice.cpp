#include "ordlab/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ordlab {

namespace {

using int128 = __int128;

struct Vec {
  long long x, y;
  bool operator==(const Vec& o) const { return x == o.x && y == o.y; }
  bool operator<(const Vec& o) const { return x != o.x ? x < o.x : y < o.y; }
};

int128 cross(const Vec& a, const Vec& b) { return int128(a.x) * b.y - int128(a.y) * b.x; }

// primitive representative in the upper half (y > 0, or y == 0 and x > 0)
Vec normalize_dir(Vec v) {
  const long long g = std::gcd(v.x < 0 ? -v.x : v.x, v.y < 0 ? -v.y : v.y);
  v.x /= g;
  v.y /= g;
  if (v.y < 0 || (v.y == 0 && v.x < 0)) {
    v.x = -v.x;
    v.y = -v.y;
  }
  return v;
}

// angular order on upper-half directions
bool angle_less(const Vec& a, const Vec& b) { return cross(a, b) > 0; }

Slope slope_of_dir(const Vec& d) { return Slope::of_fraction(d.y, d.x); }

// Direction comparison where one side may be a quadratic slope: the
// direction of slope s is (1, s) up to scale.
int angle_cmp_slope(const Slope& s, const Vec& d) {
  // sign of cross(dir(s), d): positive means s lies angularly before d
  int cs;
  if (s.rational) {
    if (s.q == 0) {
      // vertical direction (0, 1): cross((0,1), d) = -d.x
      cs = d.x > 0 ? -1 : (d.x < 0 ? 1 : 0);
    } else {
      const int128 v = int128(s.q) * d.y - int128(s.p) * d.x;
      cs = v > 0 ? 1 : (v < 0 ? -1 : 0);
    }
  } else {
    cs = quad_sign(s.c * d.y - s.a * d.x, -s.b * d.x, s.d);
  }
  return -cs;
}

struct Analysis {
  std::vector<Vec> candidates;      // sorted by angle
  std::vector<bool> valid;          // consistent as a separating line
  std::vector<bool> witnessed;      // has on-line window points with a valid ray
  std::vector<bool> refuted;        // convexity of L_0 refuted
};

bool separation_ok(const std::vector<std::tuple<long long, long long, Sign>>& pts,
                   const Vec& d, int sigma) {
  for (auto& [x, y, s] : pts) {
    const int128 raw = cross(d, Vec{x, y});
    if (raw == 0) {
      continue;
    }
    const Sign need = (raw > 0) == (sigma > 0) ? Sign::plus : Sign::minus;
    if (s != need) {
      return false;
    }
  }
  return true;
}

// on-line window points of d must form a monotone +-ray: sign(k d) = tau sgn(k)
bool ray_ok(const std::vector<std::tuple<long long, long long, Sign>>& pts, const Vec& d,
            bool& has_points) {
  has_points = false;
  int tau = 0;
  for (auto& [x, y, s] : pts) {
    if (cross(d, Vec{x, y}) != 0) {
      continue;
    }
    has_points = true;
    // multiple k: v = k d
    const long long k = d.x != 0 ? x / d.x : y / d.y;
    const int want = (s == Sign::plus ? 1 : -1) * (k > 0 ? 1 : -1);
    if (tau == 0) {
      tau = want;
    } else if (tau != want) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool SlopeInterval::contains(const Slope& s) const {
  if (full_circle) {
    return true;
  }
  if (exact) {
    return s == lo;
  }
  // angular position between lo and hi (arc of width < pi in practice)
  auto dir_of = [](const Slope& t) -> std::optional<Vec> {
    if (!t.rational) {
      return std::nullopt;
    }
    return normalize_dir(Vec{t.q, t.p});
  };
  auto dlo = dir_of(lo), dhi = dir_of(hi);
  if (dlo && dhi) {
    if (s.rational) {
      const Vec ds = normalize_dir(Vec{s.q, s.p});
      if (!angle_less(*dlo, *dhi) && !(*dlo == *dhi)) {
        // wrapped arc
        return !(angle_less(ds, *dlo) && angle_less(*dhi, ds)) ||
               ds == *dlo || ds == *dhi;
      }
      return (!angle_less(ds, *dlo)) && (!angle_less(*dhi, ds));
    }
    // quadratic candidate against rational endpoints
    const int clo = angle_cmp_slope(s, *dlo);  // <0: s before lo
    const int chi = angle_cmp_slope(s, *dhi);
    if (!angle_less(*dlo, *dhi) && !(*dlo == *dhi)) {
      return clo >= 0 || chi <= 0;
    }
    return clo >= 0 && chi <= 0;
  }
  return false;
}

std::string SlopeInterval::str() const {
  if (full_circle) {
    return "(all slopes)";
  }
  if (exact) {
    return lo.str();
  }
  return "[" + lo.str() + ", " + hi.str() + "]";
}

SlopeInterval line_of_table(const LatticeSignTable& table, const LatticeOracle* oracle,
                            int refute_window) {
  SlopeInterval out;
  out.radius = table.radius;
  if (table.pts.empty()) {
    out.full_circle = true;
    return out;
  }

  // candidate directions: the point directions plus a representative inside
  // every angular gap (validity flips only at point directions)
  std::set<Vec> dirset;
  for (auto& [x, y, s] : table.pts) {
    dirset.insert(normalize_dir(Vec{x, y}));
  }
  std::vector<Vec> dirs(dirset.begin(), dirset.end());
  std::sort(dirs.begin(), dirs.end(), angle_less);
  std::vector<Vec> candidates;
  for (size_t i = 0; i < dirs.size(); ++i) {
    candidates.push_back(dirs[i]);
    Vec mid;
    if (i + 1 < dirs.size()) {
      mid = Vec{dirs[i].x + dirs[i + 1].x, dirs[i].y + dirs[i + 1].y};
    } else {
      mid = Vec{dirs[i].x - dirs[0].x, dirs[i].y - dirs[0].y};  // wrap gap
    }
    if (mid.x != 0 || mid.y != 0) {
      candidates.push_back(normalize_dir(mid));
    } else {
      // single-direction table: use a perpendicular as the gap representative
      candidates.push_back(normalize_dir(Vec{-dirs[i].y, dirs[i].x}));
    }
  }
  std::sort(candidates.begin(), candidates.end(), angle_less);
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  const size_t n = candidates.size();
  std::vector<bool> valid(n, false), refuted(n, false);
  for (size_t i = 0; i < n; ++i) {
    bool has_pts = false;
    if (!ray_ok(table.pts, candidates[i], has_pts)) {
      continue;  // on-line signs not a ray: no order realises this line
    }
    valid[i] = separation_ok(table.pts, candidates[i], +1) ||
               separation_ok(table.pts, candidates[i], -1);
  }

  if (std::none_of(valid.begin(), valid.end(), [](bool b) { return b; })) {
    throw NoSeparatingLine();
  }

  // Convexity refutation of every candidate: were the candidate the line of a
  // realising order, <p> for its primitive direction p would be convex, so no
  // g off the line may satisfy sign(g) = sign(h - g) with h = +-p (that would
  // place g strictly between 1 and h).
  std::map<Vec, Sign> window;
  for (auto& [x, y, s] : table.pts) {
    window.emplace(Vec{x, y}, s);
  }
  auto sign_at = [&](const Vec& v) -> std::optional<Sign> {
    auto it = window.find(v);
    if (it != window.end()) {
      return it->second;
    }
    if (oracle != nullptr && std::llabs(v.x) <= refute_window &&
        std::llabs(v.y) <= refute_window) {
      return (*oracle)(v.x, v.y);
    }
    return std::nullopt;
  };
  for (size_t i = 0; i < n; ++i) {
    if (!valid[i]) {
      continue;
    }
    const Vec d = candidates[i];
    for (auto& [x, y, s] : table.pts) {
      if (refuted[i]) {
        break;
      }
      if (cross(d, Vec{x, y}) == 0) {
        continue;
      }
      for (const Vec& h : {d, Vec{-d.x, -d.y}}) {
        const Vec diff{h.x - x, h.y - y};
        if (diff.x == 0 && diff.y == 0) {
          continue;
        }
        auto sd = sign_at(diff);
        if (sd && *sd == s) {
          refuted[i] = true;
          break;
        }
      }
    }
  }

  // the consistent set: one maximal cyclic run of valid candidates
  std::vector<size_t> valid_idx;
  for (size_t i = 0; i < n; ++i) {
    if (valid[i]) {
      valid_idx.push_back(i);
    }
  }
  if (valid_idx.size() == n) {
    out.full_circle = true;
    return out;
  }
  size_t run_start = 0;
  int boundaries = 0;
  for (size_t k = 0; k < valid_idx.size(); ++k) {
    const size_t prev = (valid_idx[k] + n - 1) % n;
    if (!valid[prev]) {
      run_start = k;
      ++boundaries;
    }
  }
  if (boundaries != 1) {
    throw InvariantViolation("consistent slope set is not a single arc");
  }
  const size_t lo_i = valid_idx[run_start];
  const size_t hi_i = valid_idx[(run_start + valid_idx.size() - 1) % valid_idx.size()];
  out.lo = slope_of_dir(candidates[lo_i]);
  out.hi = slope_of_dir(candidates[hi_i]);

  int survivors = 0;
  size_t survivor_i = 0;
  for (size_t i = 0; i < n; ++i) {
    if (valid[i] && !refuted[i]) {
      ++survivors;
      survivor_i = i;
    }
  }
  if (survivors == 1) {
    out.exact = true;
    out.lo = out.hi = slope_of_dir(candidates[survivor_i]);
  }
  return out;
}

std::pair<long long, long long> z2_coords(const GroupBackend& g, const Word& nf) {
  if (g.family() != Family::abelian || g.num_gens() != 2) {
    throw std::invalid_argument("z2_coords requires a rank-two abelian backend");
  }
  auto v = g.exponent_sums(nf);
  return {v[0], v[1]};
}

LatticeSignTable table_of_snapshot(const ConeSnapshot& s) {
  LatticeSignTable t;
  t.radius = s.radius;
  for (auto& [w, sg] : s.signs) {
    auto [x, y] = z2_coords(*s.group, w);
    t.pts.emplace_back(x, y, sg);
  }
  return t;
}

SlopeInterval line_of_cone(const ConeSnapshot& s) {
  return line_of_table(table_of_snapshot(s));
}

LatticeSignTable table_of_oracle(const OrderOracle& o, int r) {
  LatticeSignTable t;
  t.radius = r;
  for (long long x = -r; x <= r; ++x) {
    for (long long y = -r; y <= r; ++y) {
      if (x == 0 && y == 0) {
        continue;
      }
      Word w;
      w.push_syllable(0, x);
      w.push_syllable(1, y);
      auto s = sign_of(o, w);
      if (!s) {
        throw UnknownValue("lattice table: oracle unknown");
      }
      t.pts.emplace_back(x, y, *s);
    }
  }
  return t;
}

LatticeOracle oracle_queries(const OrderOracle& o) {
  return [o](long long x, long long y) -> std::optional<Sign> {
    if (x == 0 && y == 0) {
      return std::nullopt;
    }
    Word w;
    w.push_syllable(0, x);
    w.push_syllable(1, y);
    return sign_of(o, w);
  };
}

SlopeFit fit_slope(const LatticeSignTable& table, const Slope& s, const LatticeOracle* oracle,
                   int refute_window) {
  SlopeFit fit;
  if (!s.rational) {
    // irrational line: no lattice points on it; check separation only
    LatticeLine line{s, +1};
    for (int sigma : {+1, -1}) {
      bool ok = true;
      for (auto& [x, y, sg] : table.pts) {
        const int side = line.side(x, y) * sigma;
        if (side == 0) {
          continue;
        }
        if ((side > 0) != (sg == Sign::plus)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        fit.consistent = true;
        break;
      }
    }
    return fit;
  }

  const Vec d = normalize_dir(Vec{s.q, s.p});
  bool has_pts = false;
  if (!ray_ok(table.pts, d, has_pts)) {
    return fit;
  }
  fit.consistent =
      separation_ok(table.pts, d, +1) || separation_ok(table.pts, d, -1);
  if (!fit.consistent) {
    return fit;
  }
  std::map<Vec, Sign> window;
  for (auto& [x, y, sg] : table.pts) {
    window.emplace(Vec{x, y}, sg);
  }
  auto sign_at = [&](const Vec& v) -> std::optional<Sign> {
    auto it = window.find(v);
    if (it != window.end()) {
      return it->second;
    }
    if (oracle != nullptr && std::llabs(v.x) <= refute_window &&
        std::llabs(v.y) <= refute_window) {
      return (*oracle)(v.x, v.y);
    }
    return std::nullopt;
  };
  for (auto& [x, y, sg] : table.pts) {
    if (fit.refuted) {
      break;
    }
    if (cross(d, Vec{x, y}) == 0) {
      continue;
    }
    for (const Vec& h : {d, Vec{-d.x, -d.y}}) {
      const Vec diff{h.x - x, h.y - y};
      if (diff.x == 0 && diff.y == 0) {
        continue;
      }
      auto sd = sign_at(diff);
      if (sd && *sd == sg) {
        fit.refuted = true;
        break;
      }
    }
  }
  return fit;
}

std::vector<OrderOracle> classify_line_orders(const LatticeLine& line,
                                              std::shared_ptr<const GroupBackend> z2) {
  if (z2->family() != Family::abelian || z2->num_gens() != 2) {
    throw std::invalid_argument("classify_line_orders requires a rank-two abelian backend");
  }
  auto make = [&](int sigma, int tau, const std::string& label) {
    LatticeLine l = line;
    return OrderOracle{
        z2,
        [l, sigma, tau, z2](const Word& nf) -> MaybeSign {
          auto [x, y] = z2_coords(*z2, nf);
          const int raw = l.side(x, y) * sigma;
          if (raw != 0) {
            return raw > 0 ? Sign::plus : Sign::minus;
          }
          if (!l.slope.rational) {
            throw IdentitySign();  // irrational line meets the lattice only at 0
          }
          auto [dx, dy] = l.direction();
          const long long k = dx != 0 ? x / dx : y / dy;
          if (k == 0) {
            throw IdentitySign();
          }
          return (k > 0) == (tau > 0) ? Sign::plus : Sign::minus;
        },
        "line[" + l.slope.str() + label + "]"};
  };
  if (!line.slope.rational) {
    return {make(+1, +1, ",side+"), make(-1, +1, ",side-")};
  }
  return {make(+1, +1, ",side+,tie+"), make(-1, -1, ",side-,tie-"),
          make(+1, -1, ",side+,tie-"), make(-1, +1, ",side-,tie+")};
}

std::vector<Word> cofinal_elements(const LatticeLine& line, const Ball& ball) {
  std::vector<Word> out;
  for (size_t i = 0; i < ball.size(); ++i) {
    auto [x, y] = z2_coords(ball.group(), ball.at(i));
    if (line.side(x, y) != 0) {
      out.push_back(ball.at(i));
    }
  }
  return out;
}

}  // namespace ordlab
