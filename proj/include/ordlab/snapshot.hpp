#ifndef ORDLAB_SNAPSHOT_HPP_
#define ORDLAB_SNAPSHOT_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ordlab/ball.hpp"
#include "ordlab/order.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace ordlab {

using Rat = boost::multiprecision::cpp_rational;

// The restriction of a positive cone to a Cayley ball: the unit of
// Sikora-topology comparison.  Entries are in ball order and exclude the
// identity.
struct ConeSnapshot {
  std::shared_ptr<const GroupBackend> group;
  int radius = 0;
  std::vector<std::pair<Word, Sign>> signs;  // (normal form, sign), ball order
  std::vector<int> dist;                     // word-metric distance per entry

  std::optional<Sign> sign_at(const Word& nf) const;

  // Canonical fixture format: one "<normal-form> <sign>" line per element.
  std::string serialise() const;

  bool operator==(const ConeSnapshot& o) const {
    return radius == o.radius && signs == o.signs;
  }
};

// Evaluates the oracle on every nontrivial ball element.  Throws UnknownValue
// if any sign is unknown.
ConeSnapshot snapshot(const OrderOracle& o, const Ball& ball);
ConeSnapshot snapshot(const OrderOracle& o, int radius);

// Sikora distance 2^{-m}, where m is the smallest word length at which the
// snapshots disagree; 0 if they agree everywhere.  Radii must match.
Rat sikora_distance(const ConeSnapshot& a, const ConeSnapshot& b);

// A replayable violation of the cone axioms on a ball.
struct ConeViolation {
  enum class Kind { antisymmetry, closure } kind;
  Word g, h, gh;  // for antisymmetry only g is set
  std::string describe(const std::vector<std::string>& gen_names) const;
};

// Checks inversion-antisymmetry and ball-local semigroup closure.
std::optional<ConeViolation> validate_cone(const ConeSnapshot& s, const Ball& ball);

}  // namespace ordlab

#endif  // ORDLAB_SNAPSHOT_HPP_
