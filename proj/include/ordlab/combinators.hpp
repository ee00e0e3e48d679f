#ifndef ORDLAB_COMBINATORS_HPP_
#define ORDLAB_COMBINATORS_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "ordlab/ball.hpp"
#include "ordlab/order.hpp"
#include "ordlab/snapshot.hpp"

namespace ordlab {

// Opposite order: sign flipped everywhere (P(o^op) = P(o)^{-1}).
OrderOracle opposite(const OrderOracle& o);

// Conjugate order g.o with P(g.o) = g P(o) g^{-1}, i.e. sign'(h) = sign(g^-1 h g).
OrderOracle conjugate(const OrderOracle& o, const Word& g);

// A subgroup membership oracle for a claimed convex subgroup.  Membership may
// be tri-valued; unknown propagates.
struct ConvexWitness {
  std::function<std::optional<bool>(const Word& nf)> contains;
  std::string desc;
};

// A triple refuting convexity: 1 < g < h (or h < g < 1) with h in C, g not.
struct ConvexityRefutation {
  Word g, h;
  std::string describe(const std::vector<std::string>& gen_names) const {
    return "convexity refuted: " + format_word(g, gen_names) +
           " lies strictly between 1 and " + format_word(h, gen_names);
  }
};

// Scans the ball for a refutation of C being o-convex.  A subgroup C is
// convex iff 1 < g < h with h in C forces g in C (and dually below 1), so a
// violating pair is exactly g not in C, h in C with sign(g) = sign(g^-1 h).
std::optional<ConvexityRefutation> refute_convexity(const OrderOracle& o,
                                                    const ConvexWitness& c,
                                                    const Ball& ball);

struct ConvexityRefuted : std::runtime_error {
  ConvexityRefutation refutation;
  explicit ConvexityRefuted(ConvexityRefutation r)
      : std::runtime_error("convexity refuted on the working ball"),
        refutation(std::move(r)) {}
};

// Convex swap: flips the sign exactly on C \ {1}.  Refutation-checked to the
// working radius first.
OrderOracle convex_swap(const OrderOracle& o, const ConvexWitness& c, int working_radius);

// An epimorphism onto another backed group, computable on normal forms.
struct Projection {
  std::shared_ptr<const GroupBackend> target;
  std::function<Word(const Word& nf)> map;  // result is a raw word over target
  std::string name;
};

// Lexicographic extension along 1 -> K -> G -> Q -> 1: quotient sign when
// proj(g) is nontrivial, kernel sign otherwise.  The kernel is convex for the
// result by construction.
OrderOracle lex_extend(const OrderOracle& kernel_order, const OrderOracle& quotient_order,
                       const Projection& proj);

// The induced G-invariant total order on cosets G/C (convexity refutation-
// checked to the working radius): gC < hC iff g^-1 h not in C and g < h.
struct CosetOrder {
  std::shared_ptr<const GroupBackend> group;
  ConvexWitness subgroup;
  std::function<std::optional<int>(const Word& g, const Word& h)> cmp;
  std::string provenance;
};

CosetOrder quotient_order(const OrderOracle& o, const ConvexWitness& c, int working_radius);

// An order-preserving action on (a subset of) the rationals.
struct ActionOnR {
  std::shared_ptr<const GroupBackend> group;
  std::function<std::optional<Rat>(const Word& nf, const Rat& x)> apply;
  std::string desc;
};

// The order at a point of an ordered action: g1 < g2 iff g1.x < g2.x, with stab_order
// breaking ties on the stabiliser of x.  stab_order may be nullptr when the
// stabiliser is trivial on the working ball (ties then raise unknown).
OrderOracle order_from_action(const ActionOnR& action, const Rat& x,
                              const OrderOracle* stab_order);

// Spot-check that the action is order-preserving for all pairs in the ball at
// the given sample points; returns a violating pair description if found.
std::optional<std::string> check_action_order_preserving(const ActionOnR& action,
                                                         const OrderOracle& ox,
                                                         const Ball& ball, const Rat& x);

// Membership oracle for the window-certified stabiliser of x.
ConvexWitness stabiliser_witness(const ActionOnR& action, const Rat& x);

}  // namespace ordlab

#endif  // ORDLAB_COMBINATORS_HPP_
