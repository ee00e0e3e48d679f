#include "ordlab/ball.hpp"

#include <algorithm>

#include "ordlab/errors.hpp"

namespace ordlab {

Ball::Ball(std::shared_ptr<const GroupBackend> group, int radius, size_t size_cap)
    : group_(std::move(group)), radius_(radius) {
  if (radius < 0) {
    throw std::invalid_argument("ball radius must be nonnegative");
  }
  std::map<std::string, size_t> seen;
  std::vector<std::pair<Word, Word>> frontier{{Word{}, Word{}}};  // (nf, geodesic)
  elems_.push_back(Word{});
  dist_.push_back(0);
  geodesics_.push_back(Word{});
  seen.emplace(word_key(Word{}), 0);

  for (int d = 1; d <= radius_; ++d) {
    std::vector<std::pair<Word, Word>> next;
    for (auto& [w, path] : frontier) {
      for (int g = 0; g < group_->num_gens(); ++g) {
        for (int e : {1, -1}) {
          Word step;
          step.push_syllable(g, e);
          auto nf = group_->mult(w, step);
          if (!nf) {
            throw UnknownValue("ball enumeration hit an unknown product");
          }
          const auto key = word_key(*nf);
          if (seen.emplace(key, elems_.size()).second) {
            if (elems_.size() >= size_cap) {
              throw ResourceLimit("ball size cap " + std::to_string(size_cap) +
                                  " exceeded at radius " + std::to_string(d));
            }
            Word path2 = path;
            path2.push_syllable(g, e);  // BFS paths never backtrack, so no cancellation
            elems_.push_back(*nf);
            dist_.push_back(d);
            geodesics_.push_back(path2);
            next.emplace_back(std::move(*nf), std::move(path2));
          }
        }
      }
    }
    frontier = std::move(next);
  }

  // ball order: distance, then deterministic word comparison
  std::vector<size_t> perm(elems_.size());
  for (size_t i = 0; i < perm.size(); ++i) {
    perm[i] = i;
  }
  std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
    if (dist_[a] != dist_[b]) {
      return dist_[a] < dist_[b];
    }
    return word_cmp(elems_[a], elems_[b]) < 0;
  });
  std::vector<Word> sorted_elems(elems_.size());
  std::vector<int> sorted_dist(elems_.size());
  std::vector<Word> sorted_geo(elems_.size());
  for (size_t i = 0; i < perm.size(); ++i) {
    sorted_elems[i] = std::move(elems_[perm[i]]);
    sorted_dist[i] = dist_[perm[i]];
    sorted_geo[i] = std::move(geodesics_[perm[i]]);
  }
  elems_ = std::move(sorted_elems);
  dist_ = std::move(sorted_dist);
  geodesics_ = std::move(sorted_geo);

  index_.clear();
  for (size_t i = 0; i < elems_.size(); ++i) {
    index_.emplace(word_key(elems_[i]), i);
  }
  inv_.resize(elems_.size());
  for (size_t i = 0; i < elems_.size(); ++i) {
    auto winv = group_->inv(elems_[i]);
    if (!winv) {
      throw UnknownValue("ball inversion hit an unknown normal form");
    }
    const int j = index_of(*winv);
    if (j < 0) {
      throw InvariantViolation("ball not closed under inversion");
    }
    inv_[i] = static_cast<size_t>(j);
  }
}

int Ball::index_of(const Word& nf) const {
  auto it = index_.find(word_key(nf));
  return it == index_.end() ? -1 : static_cast<int>(it->second);
}

}  // namespace ordlab
