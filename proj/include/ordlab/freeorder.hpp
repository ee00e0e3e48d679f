#ifndef ORDLAB_FREEORDER_HPP_
#define ORDLAB_FREEORDER_HPP_

#include <map>
#include <memory>
#include <vector>

#include "ordlab/backend.hpp"
#include "ordlab/combinators.hpp"
#include "ordlab/order.hpp"

namespace ordlab {

// The Magnus bi-order on a free group: map each basis generator to 1 + X_i in
// the ring of truncated noncommutative power series and compare the lowest
// (graded-lex) nonconstant coefficient against zero.  Words are given in
// +-(id+1) letter encoding over basis generators 0..rank-1.
class MagnusOrder {
 public:
  explicit MagnusOrder(int rank) : rank_(rank) {}

  // Sign of a nontrivial freely reduced word; throws on the empty word.
  Sign sign(const std::vector<int>& word) const;

 private:
  int rank_;
};

// A computable left-order on the kernel of the abelianisation of a torus-knot
// group G = <u, v | u^p = v^q>.
//
// ker(ab) meets the centre <z> trivially, so it embeds in Q = Z/p * Z/q as
// K = ker(Q -> Z/p x Z/q), a free normal subgroup of index pq and rank
// (p-1)(q-1).  Elements are rewritten into a free basis of K by Schreier
// rewriting over the coset grid Z/p x Z/q followed by Tietze elimination of
// the relator-derived relations, and ordered by the Magnus expansion.
class TorusKnotKernelOrder {
 public:
  explicit TorusKnotKernelOrder(std::shared_ptr<const GroupBackend> g);

  int rank() const { return rank_; }

  // Rewrites a kernel element (given by its G-normal form) into the free
  // basis; throws InvariantViolation if ab_z(w) != 0.
  std::vector<int> rewrite_to_basis(const Word& nf) const;

  // Sign of a nontrivial kernel element.
  Sign sign(const Word& nf) const;

  // Oracle over G that answers on kernel elements and throws off the kernel;
  // meant to be consumed by lex_extend.
  OrderOracle as_oracle(bool positive = true) const;

 private:
  std::vector<int> schreier_word(const Word& nf) const;
  std::vector<int> expand(int sigma_id) const;  // sigma generator -> basis word

  std::shared_ptr<const GroupBackend> group_;
  int p_ = 0, q_ = 0;
  int u_idx_ = 0, v_idx_ = 0;
  int rank_ = 0;
  // Per Schreier generator: either a basis letter, the identity (tree edge),
  // or an eliminated generator with a stored definition.
  struct SigmaInfo {
    enum class Kind { tree, basis, eliminated } kind = Kind::tree;
    int basis_id = -1;
    std::vector<int> definition;  // for eliminated gens, over sigma letters
  };
  std::vector<SigmaInfo> sigma_;
  mutable std::map<int, std::vector<int>> expand_memo_;
  MagnusOrder magnus_{0};
};

// ---------------------------------------------------------------------------
// Standard order constructors for the built-in fixtures.

// The standard (or opposite) order on Z for a rank-one backend.
OrderOracle z_order(std::shared_ptr<const GroupBackend> z, bool positive = true);

// The canonical Z-valued projection of a backend with ab_z (Klein bottle:
// x-exponent; torus knot: full abelianisation; rank-one groups: identity).
Projection ab_z_projection(std::shared_ptr<const GroupBackend> g,
                           std::shared_ptr<const GroupBackend> z_target);

// The four Klein-bottle orders o(..) as lexicographic extensions along
// 1 -> <y> -> G -> <x> -> 1; x_positive/y_positive choose the generator signs.
OrderOracle klein_lex_order(std::shared_ptr<const GroupBackend> klein, bool x_positive,
                            bool y_positive);

// Abelianisation-lex orders on a torus-knot group; kernel side ordered by the
// Magnus order on ker(ab) (or its opposite).
OrderOracle torus_knot_lex_order(std::shared_ptr<const GroupBackend> tk, bool q_positive,
                                 bool kernel_positive);

}  // namespace ordlab

#endif  // ORDLAB_FREEORDER_HPP_
