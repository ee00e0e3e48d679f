#ifndef ORDLAB_GLUING_HPP_
#define ORDLAB_GLUING_HPP_

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ordlab/detection.hpp"
#include "ordlab/order.hpp"
#include "ordlab/slope.hpp"

namespace ordlab {

// Identification of two peripheral tori: the element with source coordinates
// u corresponds to the element with target coordinates M u.  det M = +-1.
struct GluingMap {
  std::string source_peripheral;
  std::string target_peripheral;
  Mat2 matrix;
};

// A finite, explicitly listed family of orders on one group, with its closure
// tags verified rather than assumed: conjugating any member by any generator
// must reproduce a member up to snapshot equality at radius 3, and opposites
// must be members likewise.
struct NormalFamilyFixture {
  std::shared_ptr<const GroupBackend> group;
  std::vector<OrderOracle> members;
  bool opposite_closed = false;
  bool conjugate_closed_at_3 = false;
};

NormalFamilyFixture make_normal_family(std::shared_ptr<const GroupBackend> g,
                                       std::vector<OrderOracle> members);

// Throws InvariantViolation naming the violating member/generator.
void validate_normal_family(NormalFamilyFixture& f);

// Klein-bottle four-order family and torus-knot abelianisation families.
NormalFamilyFixture klein_four_family(std::shared_ptr<const GroupBackend> klein);
NormalFamilyFixture torus_knot_ablex_family(std::shared_ptr<const GroupBackend> tk);

enum class Compatibility { compatible, incompatible, unknown };
std::string compatibility_name(Compatibility c);

struct BludovGlassReport {
  Compatibility verdict = Compatibility::unknown;
  std::string reason;  // an unmatched restriction when incompatible
  int radius = 0;
  size_t restrictions_1 = 0, restrictions_2 = 0;
  // A compatible verdict means the amalgamated product is left-orderable by
  // the Bludov-Glass amalgamation criterion; the report carries that reading.
  std::string interpretation;
};

// Compares the boundary restriction sets of the two families through the
// gluing: each family's set of distinct peripheral restriction tables at
// radius r, the first transported through the identification.
BludovGlassReport bludov_glass_check(const NormalFamilyFixture& n1,
                                     const NormalFamilyFixture& n2, const GluingMap& f,
                                     int r);

// ---------------------------------------------------------------------------
// Gluing graphs

struct GluingGraph {
  struct Vertex {
    std::string name;
    std::string file;
    std::shared_ptr<const GroupBackend> group;
  };
  struct Edge {
    size_t v1 = 0, v2 = 0;
    std::string t1, t2;
    Mat2 matrix{{{1, 0}, {0, 1}}};
  };
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  int vertex_index(const std::string& name) const;
};

// File format: `vertex <name> <presentation-path>` lines, then
// `edge <v1>.<torus> <v2>.<torus> [[a,b],[c,d]]` lines; '#' comments.
GluingGraph parse_gluing_graph(
    const std::string& text,
    const std::function<std::shared_ptr<const GroupBackend>(const std::string&)>& load);

// One slope per vertex-torus, keyed "vertex.torus".
using SlopeAssignment = std::map<std::string, Slope>;

struct CoherenceReport {
  bool passed = false;
  struct EdgeCheck {
    std::string description;
    bool ok = false;
    Slope transported = Slope::of_fraction(0, 1);
    Slope expected = Slope::of_fraction(0, 1);
  };
  struct VertexCheck {
    std::string vertex;
    std::string torus;
    Slope slope = Slope::of_fraction(0, 1);
    bool witnessed = false;
    std::string witness;
  };
  std::vector<EdgeCheck> edges;
  std::vector<VertexCheck> vertices;
  std::vector<std::string> failures;
  std::string interpretation;  // the left-orderability reading when it passes
};

// Checks every edge identifies the assigned slopes under transport and every
// vertex multislope carries a regular-detection witness at the working
// radius.  Witness construction: an abelian vertex uses a line order; a
// vertex with a rank-one abelianisation killing the slope representative
// uses the lexicographic order of the induced strong witness.
CoherenceReport coherence_check(const GluingGraph& graph, const SlopeAssignment& assignment,
                                int r_slope = 3, int r_conj = 3, int jobs = 1);

}  // namespace ordlab

#endif  // ORDLAB_GLUING_HPP_
