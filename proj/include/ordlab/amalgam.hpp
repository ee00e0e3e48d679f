#ifndef ORDLAB_AMALGAM_HPP_
#define ORDLAB_AMALGAM_HPP_

#include <memory>
#include <string>

#include "ordlab/backend.hpp"
#include "ordlab/gluing.hpp"

namespace ordlab {

struct AmalgamSpec {
  std::shared_ptr<const GroupBackend> g1, g2;
  GluingMap identification;  // source torus in g1, target torus in g2
  int certified_radius = 4;
  std::string name1 = "1", name2 = "2";  // generator suffixes
};

// The amalgamated product of two backends over their identified peripheral
// Z^2 subgroups, with the Britton/coset-representative normal form: the
// syllable decomposition is computed exactly, coset representatives are
// obtained by bounded enumeration of factor balls, and answers beyond the
// precomputed range are "unknown" (the tri-valued contract).
//
// Rejects a factor whose small ball lies entirely inside the edge subgroup
// ("factor equals edge group").
std::shared_ptr<const GroupBackend> build_amalgam(const AmalgamSpec& spec);

}  // namespace ordlab

#endif  // ORDLAB_AMALGAM_HPP_
