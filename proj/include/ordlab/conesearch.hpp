#ifndef ORDLAB_CONESEARCH_HPP_
#define ORDLAB_CONESEARCH_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ordlab/ball.hpp"
#include "ordlab/combinators.hpp"
#include "ordlab/slope.hpp"
#include "ordlab/snapshot.hpp"

namespace ordlab {

// Constraints for the cone search.  The peripheral-line constraint couples
// the signs of peripheral ball elements so that the restriction to the
// peripheral subgroup realises the given slope (in the [p (mu) : q (lambda)]
// convention); both orientations of the line are explored by the search.
struct ConeConstraint {
  enum class Kind { prescribed_sign, peripheral_line, convex_subgroup };
  Kind kind = Kind::prescribed_sign;
  Word element;
  Sign sign = Sign::plus;
  std::string peripheral;
  Slope slope = Slope::of_fraction(0, 1);
  ConvexWitness subgroup;

  static ConeConstraint prescribe(Word w, Sign s) {
    ConeConstraint c;
    c.kind = Kind::prescribed_sign;
    c.element = std::move(w);
    c.sign = s;
    return c;
  }
  static ConeConstraint line(std::string peripheral_name, Slope s) {
    ConeConstraint c;
    c.kind = Kind::peripheral_line;
    c.peripheral = std::move(peripheral_name);
    c.slope = s;
    return c;
  }
  static ConeConstraint convex(ConvexWitness w) {
    ConeConstraint c;
    c.kind = Kind::convex_subgroup;
    c.subgroup = std::move(w);
    return c;
  }
};

// One step of a refutation derivation.  Steps assign signs to ball elements;
// a step whose element already carries the opposite sign is the contradiction
// closing its leaf.
struct CertStep {
  enum class By {
    assumption,        // branch assumption
    self_inverse,      // g = g^-1 for nontrivial g: no sign is consistent
    constraint,        // a prescribed sign
    inversion,         // sign(g^-1) = -sign(g), src_a = the set element
    closure,           // src_a, src_b positive, elem = src_a * src_b
    coupling           // linked to src_a by a constraint (same/opposite side)
  };
  By by = By::assumption;
  size_t elem = 0;
  Sign sign = Sign::plus;
  size_t src_a = SIZE_MAX, src_b = SIZE_MAX;  // ball indices of premises
  bool coupling_same = true;
  std::string note;
};

// A refutation tree: leaves carry a derivation ending in a contradiction,
// branch nodes refute both signs of a ball element.
struct UnsatCert {
  std::vector<CertStep> steps;
  std::optional<size_t> branch_elem;
  std::unique_ptr<UnsatCert> pos, neg;
};

struct SearchOutcome {
  bool unsat = false;
  std::vector<ConeSnapshot> snapshots;  // deterministic order
  bool complete = true;
  std::shared_ptr<const UnsatCert> certificate;  // when unsat
  size_t nodes = 0;
};

struct SearchOptions {
  size_t solution_limit = 1 << 20;
  size_t node_cap = 1 << 22;
  size_t ball_cap = 200000;
};

// Exhaustive backtracking search with unit propagation over the sign
// variables of inversion-paired ball elements.  Closure is checked for
// products landing inside the ball ("ball-local closure"): exclusion results
// are sound, existence results are radius-stamped.
SearchOutcome search(std::shared_ptr<const GroupBackend> g, int radius,
                     const std::vector<ConeConstraint>& constraints,
                     const SearchOptions& opts = {});

// The number of consistent cones (snapshot count), or nullopt with a
// certificate when unsatisfiable.
struct CountOutcome {
  bool unsat = false;
  size_t count = 0;
  bool complete = true;
  std::shared_ptr<const UnsatCert> certificate;
};
CountOutcome count_classes(std::shared_ptr<const GroupBackend> g, int radius,
                           const std::vector<ConeConstraint>& constraints,
                           const SearchOptions& opts = {});

// Runs unconstrained searches at increasing radius; a returned certificate
// proves that no left-order exists (sound); absence proves nothing.
struct NonorderabilityCertificate {
  int radius = 0;
  std::shared_ptr<const UnsatCert> certificate;
};
std::optional<NonorderabilityCertificate> certify_nonorderable(
    std::shared_ptr<const GroupBackend> g, int r_max, const SearchOptions& opts = {});

// Renders a certificate as a numbered list of assignments and closure steps.
std::string render_certificate(const UnsatCert& cert, const Ball& ball);

// Independently re-derives the contradiction (products re-multiplied through
// the backend, constraints re-instantiated).  Returns false if any step is
// unjustified or a leaf fails to reach a contradiction.
bool replay_certificate(const UnsatCert& cert, const Ball& ball,
                        const std::vector<ConeConstraint>& constraints);

}  // namespace ordlab

#endif  // ORDLAB_CONESEARCH_HPP_
