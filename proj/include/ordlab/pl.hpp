#ifndef ORDLAB_PL_HPP_
#define ORDLAB_PL_HPP_

#include <utility>
#include <vector>

#include "ordlab/snapshot.hpp"  // Rat

namespace ordlab {

// An orientation-preserving piecewise-linear homeomorphism of R with exact
// rational breakpoints, linear interpolation between them and affine
// extensions beyond; composition, inversion and evaluation never round.
class PLHomeo {
 public:
  PLHomeo() = default;  // identity

  static PLHomeo from_points(std::vector<std::pair<Rat, Rat>> pts, Rat slope_left = Rat(1),
                             Rat slope_right = Rat(1));

  Rat eval(const Rat& x) const;
  PLHomeo inverse() const;

  // (*this)(other(x)) — apply `other` first.
  PLHomeo compose_after(const PLHomeo& other) const;

  // Maximal intervals of the fixed set within [lo, hi], exact.
  std::vector<std::pair<Rat, Rat>> fixed_intervals(const Rat& lo, const Rat& hi) const;

  const std::vector<Rat>& breakpoints() const { return xs_; }
  const std::vector<Rat>& values() const { return ys_; }
  const Rat& slope_left() const { return sl_; }
  const Rat& slope_right() const { return sr_; }

  bool operator==(const PLHomeo& o) const {
    return xs_ == o.xs_ && ys_ == o.ys_ && sl_ == o.sl_ && sr_ == o.sr_;
  }

 private:
  std::vector<Rat> xs_, ys_;
  Rat sl_ = 1, sr_ = 1;
};

}  // namespace ordlab

#endif  // ORDLAB_PL_HPP_
