#include "ordlab/pl.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordlab {

PLHomeo PLHomeo::from_points(std::vector<std::pair<Rat, Rat>> pts, Rat slope_left,
                             Rat slope_right) {
  std::sort(pts.begin(), pts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  PLHomeo f;
  f.sl_ = std::move(slope_left);
  f.sr_ = std::move(slope_right);
  if (f.sl_ <= 0 || f.sr_ <= 0) {
    throw std::invalid_argument("PL extension slopes must be positive");
  }
  for (auto& [x, y] : pts) {
    if (!f.xs_.empty()) {
      if (x == f.xs_.back()) {
        if (y != f.ys_.back()) {
          throw std::invalid_argument("PL table maps one point to two values");
        }
        continue;
      }
      if (y <= f.ys_.back()) {
        throw std::invalid_argument("PL table is not strictly increasing");
      }
    }
    f.xs_.push_back(x);
    f.ys_.push_back(y);
  }
  return f;
}

Rat PLHomeo::eval(const Rat& x) const {
  if (xs_.empty()) {
    return x;
  }
  if (x <= xs_.front()) {
    return ys_.front() + sl_ * (x - xs_.front());
  }
  if (x >= xs_.back()) {
    return ys_.back() + sr_ * (x - xs_.back());
  }
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  const size_t i = static_cast<size_t>(it - xs_.begin()) - 1;
  const Rat t = (x - xs_[i]) / (xs_[i + 1] - xs_[i]);
  return ys_[i] + t * (ys_[i + 1] - ys_[i]);
}

PLHomeo PLHomeo::inverse() const {
  PLHomeo g;
  g.xs_ = ys_;
  g.ys_ = xs_;
  g.sl_ = 1 / sl_;
  g.sr_ = 1 / sr_;
  return g;
}

PLHomeo PLHomeo::compose_after(const PLHomeo& other) const {
  // breakpoints: other's, plus preimages of ours under other
  const PLHomeo other_inv = other.inverse();
  std::vector<Rat> bps = other.xs_;
  for (const Rat& b : xs_) {
    bps.push_back(other_inv.eval(b));
  }
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
  std::vector<std::pair<Rat, Rat>> pts;
  pts.reserve(bps.size());
  for (const Rat& b : bps) {
    pts.emplace_back(b, eval(other.eval(b)));
  }
  if (pts.empty()) {
    PLHomeo f;
    f.sl_ = f.sr_ = sl_ * other.sl_;
    const Rat y0 = eval(other.eval(Rat(0)));
    if (y0 != 0) {
      f.xs_ = {Rat(0)};
      f.ys_ = {y0};
    }
    return f;
  }
  return from_points(std::move(pts), sl_ * other.sl_, sr_ * other.sr_);
}

std::vector<std::pair<Rat, Rat>> PLHomeo::fixed_intervals(const Rat& lo, const Rat& hi) const {
  if (lo > hi) {
    throw std::invalid_argument("empty window");
  }
  std::vector<Rat> cuts{lo};
  for (const Rat& x : xs_) {
    if (x > lo && x < hi) {
      cuts.push_back(x);
    }
  }
  cuts.push_back(hi);
  std::vector<std::pair<Rat, Rat>> out;
  auto add = [&out](const Rat& a, const Rat& b) {
    if (!out.empty() && out.back().second >= a) {
      out.back().second = std::max(out.back().second, b);
    } else {
      out.emplace_back(a, b);
    }
  };
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rat a = cuts[i], b = cuts[i + 1];
    const Rat da = eval(a) - a, db = eval(b) - b;
    if (da == 0 && db == 0) {
      add(a, b);  // displacement vanishes on the whole segment
      continue;
    }
    if (da == 0) {
      add(a, a);
    } else if (db == 0) {
      add(b, b);
    } else if ((da < 0) != (db < 0)) {
      // one interior crossing of the affine displacement
      const Rat x = a + (b - a) * (-da) / (db - da);
      add(x, x);
    }
  }
  return out;
}

}  // namespace ordlab
