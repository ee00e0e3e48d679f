#ifndef ORDLAB_DETECTION_HPP_
#define ORDLAB_DETECTION_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ordlab/conesearch.hpp"
#include "ordlab/dynreal.hpp"
#include "ordlab/freeorder.hpp"
#include "ordlab/lattice.hpp"
#include "ordlab/order.hpp"
#include "ordlab/slope.hpp"

namespace ordlab {

// Peripheral slopes follow the [p mu + q lambda] <-> p/q convention: the
// point mu^a lambda^b is plotted at lattice coordinates (b, a), so the
// geometric machinery of the lattice module reports slopes whose p/q value
// is the mu-over-lambda ratio.
LatticeSignTable peripheral_table(const OrderOracle& o, const PeripheralSubgroup& P, int r);
LatticeOracle peripheral_queries(const OrderOracle& o, const PeripheralSubgroup& P);

// Same data measured on the conjugated peripheral g P g^-1, coordinates taken
// through the isomorphism beta -> g beta g^-1.
LatticeSignTable conjugate_peripheral_table(const OrderOracle& o, const PeripheralSubgroup& P,
                                            const Word& g, int r);
LatticeOracle conjugate_peripheral_queries(const OrderOracle& o, const PeripheralSubgroup& P,
                                           const Word& g);

struct SlopeEstimate {
  SlopeInterval interval;
  int radius = 0;
  bool exact = false;
  const Slope& slope() const { return interval.lo; }  // when exact
};

// The slope of the line separating the order's positive and negative
// peripheral points; exact when a unique candidate line survives convexity
// refutation at this radius.
SlopeEstimate slope_of_order(const OrderOracle& o, const PeripheralSubgroup& P, int r);
SlopeEstimate slope_on_conjugate(const OrderOracle& o, const PeripheralSubgroup& P,
                                 const Word& g, int r);

enum class DetectionLevel { weak, regular, strong };
enum class DetectionStatus { certified, refuted_at_radius, unknown };

std::string level_name(DetectionLevel l);
std::string status_name(DetectionStatus s);

struct DetectionVerdict {
  DetectionLevel level = DetectionLevel::weak;
  Slope slope = Slope::of_fraction(0, 1);
  DetectionStatus status = DetectionStatus::unknown;
  std::string witness;  // order provenance, epimorphism data, or refutation note
  int radius = 0;
  std::shared_ptr<const UnsatCert> certificate;  // for snapshot exclusions
};

// Weak detection of a slope by one order: the peripheral sign pattern is
// consistent with the line through the slope and the line's convexity is not
// refuted through the oracle.  Never refutes globally; a failed check means
// "not certified at this radius".
DetectionVerdict weak_detect(const OrderOracle& o, const PeripheralSubgroup& P,
                             const Slope& slope, int r);

// Regular detection check: weak detection for every conjugate g.o with g in
// the conjugation ball.  A conjugate whose peripheral pattern is inconsistent
// with the slope refutes this witness order.
DetectionVerdict regular_detect_check(const OrderOracle& o, const PeripheralSubgroup& P,
                                      const Slope& slope, int r_conj, int r_slope,
                                      int jobs = 1);

// Strong detection via a left-ordered quotient: certified iff phi kills the
// primitive representative mu^p lambda^q and is surjective onto the ordered
// target; the kernel is then a proper normal convex subgroup through the
// lexicographic order.  This certificate is algebraic, not radius-stamped.
struct StrongWitness {
  DetectionVerdict verdict;
  std::optional<OrderOracle> induced;  // lex order when a kernel order is given
  long long phi_alpha = 0;             // the image of the representative
};
StrongWitness strong_detect_witness(std::shared_ptr<const GroupBackend> g,
                                    const PeripheralSubgroup& P, const Slope& slope,
                                    const Projection& phi, const OrderOracle& target_order,
                                    const OrderOracle* kernel_order);

enum class Cofinality { cofinal_at_radius, bounded_at_radius, unknown };
std::string cofinality_name(Cofinality c);

struct CofinalityReport {
  Cofinality verdict = Cofinality::unknown;
  Word element;
  std::optional<Word> bound;  // a one-sided bound when bounded-at-radius
  int radius = 0;
  int n_max = 0;
  // when a realisation is supplied: the window fixed-point verdict agrees
  std::optional<bool> consistent_with_action;
};

// w is cofinal-at-radius when its powers within |n| <= n_max sandwich every
// ball element, bounded-at-radius when some ball element tops (or bottoms)
// every such power with slack.
CofinalityReport cofinality_check(const OrderOracle& o, const Word& w, int r, int n_max,
                                  const PLAction* action = nullptr);

struct BoundaryCofinalityReport {
  Cofinality verdict = Cofinality::unknown;
  Word witness;  // a peripheral element off the detected line
  SlopeEstimate line;
  CofinalityReport detail;
};

// Picks a peripheral element off the detected line (such elements are
// cofinal in the peripheral restriction) and runs the cofinality check.
BoundaryCofinalityReport boundary_cofinality_report(const OrderOracle& o,
                                                    const PeripheralSubgroup& P, int r,
                                                    int n_max);

// Default n_max for the cofinality checks.
inline int default_n_max(int r) { return 2 * r + 4; }

struct ExclusionOutcome {
  bool excluded = false;  // no radius-r cone weakly detects the slope
  int radius = 0;
  bool complete = true;
  size_t nodes = 0;
  size_t cones_seen = 0;  // consistent cones found before stopping
  std::shared_ptr<const UnsatCert> certificate;
};

// Runs the cone search under the peripheral-line constraint.  A certificate
// proves that no order's radius-r snapshot weakly detects the slope; absence
// of a certificate proves nothing.
ExclusionOutcome exclusion_search(std::shared_ptr<const GroupBackend> g,
                                  const std::string& peripheral, const Slope& slope, int r,
                                  const SearchOptions& opts = {});

struct Multislope {
  std::vector<Slope> slopes;  // one per declared peripheral torus, in order
  bool operator==(const Multislope& o) const { return slopes == o.slopes; }
};

// The per-torus detected slopes of an order (each must be exact at radius r).
Multislope multislope_of_order(const OrderOracle& o, int r);

}  // namespace ordlab

#endif  // ORDLAB_DETECTION_HPP_
