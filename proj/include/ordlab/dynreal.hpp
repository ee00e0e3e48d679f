#ifndef ORDLAB_DYNREAL_HPP_
#define ORDLAB_DYNREAL_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ordlab/ball.hpp"
#include "ordlab/combinators.hpp"
#include "ordlab/order.hpp"
#include "ordlab/pl.hpp"

namespace ordlab {

// A dynamic realisation approximated on a window: a ball sorted by the order
// and embedded at integer positions with t(1) = 0 (any two tight embeddings
// differ by a homeomorphism, so window-scale conclusions are unaffected and
// integer positions keep the arithmetic exact).  Generators act by
// interpolating the table and extending affinely with slope 1.
//
// The table is built on the ball of radius max(radius, 2 (radius - 1)): a
// geodesic spelling of g in B_{radius-1} applied to h in B_{radius-1} then
// walks through intermediate points that all carry exact table entries, which
// is what makes the orbit law rho(g)(t(h)) = t(gh) hold on B_{radius-1}.
// The reported window is the hull of the radius-r part.
struct PLAction {
  std::shared_ptr<const GroupBackend> group;
  int radius = 0;           // window radius
  int table_radius = 0;     // internal enlargement
  std::vector<std::pair<Word, Rat>> table;  // ascending in the source order
  std::vector<PLHomeo> gen_pos, gen_neg;    // per generator and letter sign
  Rat window_lo, window_hi;
  std::string provenance;

  std::optional<Rat> t(const Word& nf) const;

  // A geodesic spelling of an in-table element, if available.
  std::optional<Word> geodesic_of(const Word& nf) const;

 private:
  friend PLAction build_realisation(const OrderOracle& o, int radius);
  std::map<std::string, Rat> index_;
  std::map<std::string, Word> geodesic_;
};

PLAction build_realisation(const OrderOracle& o, int radius);

// Applies the word letter by letter through the generator homeomorphisms.
Rat evaluate(const PLAction& a, const Word& w, const Rat& x);

// Evaluates a group element along a geodesic spelling when one is in the
// table (exact within the certified range), falling back to the word itself.
Rat evaluate_element(const PLAction& a, const Word& nf, const Rat& x);

// The composite PL map of a word.
PLHomeo element_map(const PLAction& a, const Word& w);

struct FixedPointReport {
  enum class Verdict { fixed_point_free_on_window, has_fixed_points, inconclusive };
  Word element;
  Rat window_lo, window_hi;
  std::vector<std::pair<Rat, Rat>> intervals;  // maximal fixed intervals
  Verdict verdict = Verdict::inconclusive;
};

std::string verdict_name(FixedPointReport::Verdict v);

// Exact PL root-finding of evaluate(a, w, x) - x on the window.  The verdict
// is inconclusive when every fixed interval touches the window boundary (the
// window is too small to certify interior fixed points either way).
FixedPointReport fixed_points(const PLAction& a, const Word& w);

// The action as an order-preserving action on Q, for order_from_action.
ActionOnR action_of(const PLAction& a);

// The order carried by a point of the window: g1 < g2 iff
// g1.x < g2.x with stab_order breaking ties on the window-certified
// stabiliser.  At x = t(g) with trivial stabiliser this is the conjugate
// order g.o of the source order.
OrderOracle order_at_point(const PLAction& a, const Rat& x, const OrderOracle* stab_order);

}  // namespace ordlab

#endif  // ORDLAB_DYNREAL_HPP_
