#ifndef ORDLAB_BALL_HPP_
#define ORDLAB_BALL_HPP_

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ordlab/backend.hpp"
#include "ordlab/word.hpp"

namespace ordlab {

// The radius-r Cayley ball of a backend, enumerated breadth-first and held in
// "ball order": word-metric distance first, then the deterministic word
// comparison on normal forms.  B_0 = {1}; closed under inversion.
class Ball {
 public:
  Ball(std::shared_ptr<const GroupBackend> group, int radius, size_t size_cap = 200000);

  const GroupBackend& group() const { return *group_; }
  std::shared_ptr<const GroupBackend> group_ptr() const { return group_; }
  int radius() const { return radius_; }
  size_t size() const { return elems_.size(); }

  const Word& at(size_t i) const { return elems_[i]; }
  int distance(size_t i) const { return dist_[i]; }

  // A geodesic spelling of element i recorded during the breadth-first
  // enumeration (single letters, length = distance).
  const Word& geodesic(size_t i) const { return geodesics_[i]; }

  // Index of a normal form in the ball, or -1.
  int index_of(const Word& nf) const;
  bool contains(const Word& nf) const { return index_of(nf) >= 0; }

  const std::vector<Word>& elements() const { return elems_; }

  // Index of the inverse of element i.
  size_t inverse_index(size_t i) const { return inv_[i]; }

 private:
  std::shared_ptr<const GroupBackend> group_;
  int radius_;
  std::vector<Word> elems_;
  std::vector<int> dist_;
  std::vector<Word> geodesics_;
  std::vector<size_t> inv_;
  std::map<std::string, size_t> index_;
};

}  // namespace ordlab

#endif  // ORDLAB_BALL_HPP_
