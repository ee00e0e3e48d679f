#ifndef ORDLAB_BACKEND_HPP_
#define ORDLAB_BACKEND_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ordlab/errors.hpp"
#include "ordlab/presentation.hpp"
#include "ordlab/word.hpp"

namespace ordlab {

enum class Family {
  abelian,       // free abelian, relators are pairwise commutators
  free_group,    // no relators
  klein_bottle,  // <x, y | x y x^-1 = y^-1>
  torus_knot,    // <u, v | u^p = v^q>, p, q >= 2
  finite_table,  // finite group via coset enumeration
  amalgam,       // amalgamated product over an identified peripheral Z^2
};

std::string family_name(Family f);

// A named peripheral Z^2 subgroup with ordered basis (mu-like, lambda-like).
struct PeripheralSubgroup {
  std::string name;
  Word mu;      // normal form
  Word lambda;  // normal form
};

struct CoordsResult {
  enum class Status { member, non_member, unknown };
  Status status = Status::unknown;
  long long a = 0;  // mu exponent
  long long b = 0;  // lambda exponent

  static CoordsResult member(long long a, long long b) {
    return {Status::member, a, b};
  }
  static CoordsResult non_member() { return {Status::non_member, 0, 0}; }
  static CoordsResult unknown() { return {Status::unknown, 0, 0}; }
};

// A group with an exact (or, for amalgams beyond their certified radius,
// tri-valued) word problem.  Immutable after construction; all operations are
// pure, so instances are safe to share across threads.
class GroupBackend {
 public:
  virtual ~GroupBackend() = default;

  const Presentation& presentation() const { return pres_; }
  Family family() const { return family_; }
  const std::vector<std::string>& gen_names() const { return pres_.gens; }
  int num_gens() const { return static_cast<int>(pres_.gens.size()); }
  const std::vector<PeripheralSubgroup>& peripherals() const { return peripherals_; }
  const PeripheralSubgroup& peripheral(const std::string& name) const;

  // Canonical representative; nullopt means "unknown" (tri-valued contract,
  // amalgams only).  Two words are equal in the group iff their normal forms
  // are equal words.
  std::optional<Word> normal_form(const Word& w) const;

  std::optional<Word> mult(const Word& a, const Word& b) const {
    return normal_form(concat(a, b));
  }
  std::optional<Word> inv(const Word& a) const { return normal_form(inverse(a)); }
  std::optional<bool> is_trivial(const Word& w) const;

  // Writes w = mu^a lambda^b when possible.  Exact for the built-in families;
  // "unknown" only beyond an amalgam's certified radius.
  virtual CoordsResult peripheral_coords(const PeripheralSubgroup& p, const Word& w) const;

  // The torsion-free rank-one abelianisation where the family carries a
  // canonical one (Klein bottle: x-exponent; torus knot: q*|u| + p*|v|;
  // Z and Z/n-free rank-one cases: exponent sum).
  virtual std::optional<long long> ab_z(const Word&) const { return std::nullopt; }

  // Exponent-sum vector of a word (not a homomorphism into the group unless
  // the group is abelian; used for detection heuristics and oracles).
  std::vector<long long> exponent_sums(const Word& w) const;

  // Construction-time only; peripherals are verified first (commutation and
  // absence of small torsion relations).
  void install_peripherals(std::vector<PeripheralSubgroup> ps) {
    peripherals_ = std::move(ps);
  }

 protected:
  GroupBackend(Presentation pres, Family fam)
      : pres_(std::move(pres)), family_(fam) {}

  virtual std::optional<Word> normal_form_impl(const Word& w) const = 0;

  void check_word(const Word& w) const;

  Presentation pres_;
  Family family_;
  std::vector<PeripheralSubgroup> peripherals_;
};

struct BackendOptions {
  int coset_cap = 4096;          // Todd-Coxeter coset cap
  int peripheral_check_bound = 6;  // |a|,|b| bound in the torsion check
  bool auto_peripheral = true;   // inject the canonical torus for Klein/torus-knot
};

// Detects the family from the presentation and builds the backend.
// Throws UnsupportedPresentation when no exact backend applies.
std::shared_ptr<const GroupBackend> make_backend(const Presentation& p,
                                                 const BackendOptions& opts = {});

// Convenience builders for the standard fixtures.
std::shared_ptr<const GroupBackend> make_z_backend();
std::shared_ptr<const GroupBackend> make_z2_backend();      // peripheral T = (a, b)
std::shared_ptr<const GroupBackend> make_klein_backend();   // peripheral T = (x^2, y)
std::shared_ptr<const GroupBackend> make_torus_knot_backend(int p, int q);

// Torus-knot structure access (meridian/longitude bookkeeping used by the
// detection and freeorder modules).
struct TorusKnotData {
  int p, q;
  Word u, v;     // generators as words
  Word mu;       // u^a v^b with a q + b p = 1
  Word lambda;   // z mu^{-pq}
  Word z;        // u^p
};
const TorusKnotData* torus_knot_data(const GroupBackend& g);

// Klein-bottle structure access.
struct KleinData {
  int x_idx, y_idx;
};
const KleinData* klein_data(const GroupBackend& g);

}  // namespace ordlab

#endif  // ORDLAB_BACKEND_HPP_
