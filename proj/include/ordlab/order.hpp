#ifndef ORDLAB_ORDER_HPP_
#define ORDLAB_ORDER_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "ordlab/backend.hpp"
#include "ordlab/errors.hpp"
#include "ordlab/word.hpp"

namespace ordlab {

enum class Sign : int { minus = -1, plus = 1 };

inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

// "unknown" is represented by nullopt and propagates monotonically through
// every combinator: nothing ever guesses.
using MaybeSign = std::optional<Sign>;

// A left-order presented as a sign oracle on nontrivial normal forms,
// together with the construction provenance.  Oracles are immutable values;
// the sign function must be pure.
struct OrderOracle {
  std::shared_ptr<const GroupBackend> group;
  std::function<MaybeSign(const Word& nf)> sign_nf;
  std::string provenance;
};

// Normalises w and queries the oracle.  Throws IdentitySign when w = 1 in the
// group; returns nullopt when the backend or the oracle answers "unknown".
MaybeSign sign_of(const OrderOracle& o, const Word& w);

// g < h in the order, i.e. sign(g^-1 h) = +.  Equal elements throw.
MaybeSign less_than(const OrderOracle& o, const Word& g, const Word& h);

// Three-way comparison: -1, 0, +1 (nullopt for unknown).
std::optional<int> order_cmp(const OrderOracle& o, const Word& g, const Word& h);

}  // namespace ordlab

#endif  // ORDLAB_ORDER_HPP_
