#ifndef ORDLAB_LATTICE_HPP_
#define ORDLAB_LATTICE_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "ordlab/ball.hpp"
#include "ordlab/order.hpp"
#include "ordlab/slope.hpp"
#include "ordlab/snapshot.hpp"

namespace ordlab {

// A finite table of cone signs on lattice points of the plane (the window of
// a Z^2 order restriction).
struct LatticeSignTable {
  int radius = 0;  // box bound |x|,|y| <= radius for oracle-built tables
  std::vector<std::tuple<long long, long long, Sign>> pts;
};

// Extension queries beyond the table (signs of further lattice points), used
// to refute rival candidate lines; nullopt = unavailable.
using LatticeOracle = std::function<std::optional<Sign>(long long, long long)>;

struct NoSeparatingLine : std::runtime_error {
  NoSeparatingLine() : std::runtime_error("no line separates the given cone signs") {}
};

// The interval of slopes consistent with a sign table, in the geometric
// (dy/dx) convention.
//
// A candidate line is consistent when some orientation puts every strictly
// off-line point on its sign's side and the points on the line form a
// monotone +-ray.  Candidates are refuted through convexity: were the
// candidate the line of a realising order, the cyclic group on its primitive
// direction p would be convex, so finding g off the line with
// sign(g) = sign(h - g) for h = +-p places g strictly between 1 and h and
// rules the candidate out.  "exact" means exactly one candidate direction
// (drawn from the window points and the gaps between them) survives; rival
// lines of larger denominator than the scan window remain logically possible,
// so exactness is a radius-stamped claim like every other verdict here.
struct SlopeInterval {
  Slope lo = Slope::of_fraction(0, 1);
  Slope hi = Slope::of_fraction(0, 1);
  bool exact = false;
  bool full_circle = false;
  int radius = 0;

  bool contains(const Slope& s) const;  // angular containment, endpoints included
  std::string str() const;
};

SlopeInterval line_of_table(const LatticeSignTable& table,
                            const LatticeOracle* oracle = nullptr,
                            int refute_window = 0);

// Adapter for snapshots over a rank-two abelian backend.
LatticeSignTable table_of_snapshot(const ConeSnapshot& s);
SlopeInterval line_of_cone(const ConeSnapshot& s);

// Builds the box-window table |x|,|y| <= r of a Z^2 order oracle, plus the
// matching extension oracle.
LatticeSignTable table_of_oracle(const OrderOracle& o, int r);
LatticeOracle oracle_queries(const OrderOracle& o);

// Separation + ray-pattern + refutation check of one candidate slope against
// a table (the core of weak detection).
struct SlopeFit {
  bool consistent = false;  // separation and ray pattern hold for some side
  bool refuted = false;     // convexity of the candidate L_0 refuted
};
SlopeFit fit_slope(const LatticeSignTable& table, const Slope& s,
                   const LatticeOracle* oracle = nullptr, int refute_window = 0);

// The 2-or-4 realising orders of a line on Z^2 (four when the slope is
// rational, two otherwise), pairwise distinct on B_2.
std::vector<OrderOracle> classify_line_orders(const LatticeLine& line,
                                              std::shared_ptr<const GroupBackend> z2);

// {v in B_r : v not on L}; these are the cofinal elements for every order
// realising L.
std::vector<Word> cofinal_elements(const LatticeLine& line, const Ball& ball);

// Exponent coordinates of a rank-two abelian normal form.
std::pair<long long, long long> z2_coords(const GroupBackend& g, const Word& nf);

}  // namespace ordlab

#endif  // ORDLAB_LATTICE_HPP_
