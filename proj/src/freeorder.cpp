#include "ordlab/freeorder.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace ordlab {

namespace {

// truncated noncommutative power series over basis letters
using Monomial = std::string;  // letters 'a' + i
using Series = std::map<Monomial, long long>;

Series mul_truncated(const Series& a, const Series& b, size_t max_deg) {
  Series out;
  for (auto& [ma, ca] : a) {
    if (ca == 0) {
      continue;
    }
    for (auto& [mb, cb] : b) {
      if (cb == 0 || ma.size() + mb.size() > max_deg) {
        continue;
      }
      out[ma + mb] += ca * cb;
    }
  }
  return out;
}

Series letter_series(int letter, size_t max_deg) {
  // letter is +-(id+1); generator -> 1 + X, inverse -> 1 - X + X^2 - ...
  const int id = std::abs(letter) - 1;
  const char x = static_cast<char>('a' + id);
  Series s{{"", 1}};
  if (letter > 0) {
    s[std::string(1, x)] = 1;
  } else {
    long long c = -1;
    for (size_t d = 1; d <= max_deg; ++d) {
      s[std::string(d, x)] = c;
      c = -c;
    }
  }
  return s;
}

std::vector<int> free_reduce(const std::vector<int>& w) {
  std::vector<int> out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

std::vector<int> invert_letters(const std::vector<int>& w) {
  std::vector<int> out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(-*it);
  }
  return out;
}

}  // namespace

Sign MagnusOrder::sign(const std::vector<int>& word) const {
  const auto w = free_reduce(word);
  if (w.empty()) {
    throw IdentitySign();
  }
  size_t max_deg = 2;
  const size_t cap = std::max<size_t>(w.size(), 2);
  while (true) {
    Series s{{"", 1}};
    for (int l : w) {
      s = mul_truncated(s, letter_series(l, max_deg), max_deg);
    }
    // graded-lex smallest nonconstant monomial with nonzero coefficient
    const Monomial* best_m = nullptr;
    long long best_c = 0;
    for (auto& [m, c] : s) {
      if (m.empty() || c == 0) {
        continue;
      }
      if (best_m == nullptr || m.size() < best_m->size() ||
          (m.size() == best_m->size() && m < *best_m)) {
        best_m = &m;
        best_c = c;
      }
    }
    if (best_m != nullptr) {
      return best_c > 0 ? Sign::plus : Sign::minus;
    }
    if (max_deg >= cap) {
      throw InvariantViolation("Magnus expansion trivial for a nonempty reduced word");
    }
    max_deg = std::min(cap, max_deg * 2);
  }
}

// ---------------------------------------------------------------------------

TorusKnotKernelOrder::TorusKnotKernelOrder(std::shared_ptr<const GroupBackend> g)
    : group_(std::move(g)) {
  const auto* tk = torus_knot_data(*group_);
  if (tk == nullptr) {
    throw std::invalid_argument("TorusKnotKernelOrder requires a torus-knot backend");
  }
  p_ = tk->p;
  q_ = tk->q;
  u_idx_ = tk->u.syls[0].first;
  v_idx_ = tk->v.syls[0].first;

  const int ncosets = p_ * q_;
  auto coset_id = [&](int i, int j) { return i * q_ + j; };
  auto move = [&](int t, int gen, int dir) {
    int i = t / q_, j = t % q_;
    if (gen == 0) {
      i = ((i + dir) % p_ + p_) % p_;
    } else {
      j = ((j + dir) % q_ + q_) % q_;
    }
    return coset_id(i, j);
  };
  auto sigma_id = [&](int t, int gen) { return 2 * t + gen; };

  sigma_.assign(static_cast<size_t>(2 * ncosets), {});
  for (auto& s : sigma_) {
    s.kind = SigmaInfo::Kind::eliminated;  // resolved below
  }

  // spanning tree of the coset graph (BFS, letters in a fixed order)
  std::vector<bool> seen(static_cast<size_t>(ncosets), false);
  std::vector<bool> is_tree(sigma_.size(), false);
  std::deque<int> bfs{0};
  seen[0] = true;
  while (!bfs.empty()) {
    const int t = bfs.front();
    bfs.pop_front();
    for (int gen = 0; gen < 2; ++gen) {
      for (int dir : {1, -1}) {
        const int t2 = move(t, gen, dir);
        if (!seen[static_cast<size_t>(t2)]) {
          seen[static_cast<size_t>(t2)] = true;
          is_tree[static_cast<size_t>(dir > 0 ? sigma_id(t, gen) : sigma_id(t2, gen))] = true;
          bfs.push_back(t2);
        }
      }
    }
  }

  // relator-derived relations: one relation per <letter>-orbit of cosets
  auto walk_power = [&](int t0, int gen, int count) {
    std::vector<int> rel;
    int t = t0;
    for (int s = 0; s < count; ++s) {
      const int id = sigma_id(t, gen);
      if (!is_tree[static_cast<size_t>(id)]) {
        rel.push_back(id + 1);
      }
      t = move(t, gen, 1);
    }
    return rel;
  };
  std::vector<std::vector<int>> relations;
  for (int j = 0; j < q_; ++j) {
    relations.push_back(walk_power(coset_id(0, j), 0, p_));
  }
  for (int i = 0; i < p_; ++i) {
    relations.push_back(walk_power(coset_id(i, 0), 1, q_));
  }

  // Tietze elimination: each relation removes one generator that occurs in
  // it exactly once.
  std::vector<bool> eliminated(sigma_.size(), false);
  std::vector<bool> relation_done(relations.size(), false);
  for (size_t pass = 0; pass < relations.size(); ++pass) {
    bool progressed = false;
    for (size_t r = 0; r < relations.size(); ++r) {
      if (relation_done[r]) {
        continue;
      }
      auto rel = free_reduce(relations[r]);
      if (rel.empty()) {
        relation_done[r] = true;
        progressed = true;
        continue;
      }
      int victim = -1;
      size_t victim_pos = 0;
      for (size_t i = 0; i < rel.size() && victim < 0; ++i) {
        const int id = std::abs(rel[i]) - 1;
        int count = 0;
        for (int l : rel) {
          if (std::abs(l) - 1 == id) {
            ++count;
          }
        }
        if (count == 1) {
          victim = id;
          victim_pos = i;
        }
      }
      if (victim < 0) {
        continue;
      }
      // rel = A g^e B = 1  =>  g^e = A^-1 B^-1
      std::vector<int> a(rel.begin(), rel.begin() + static_cast<long>(victim_pos));
      std::vector<int> b(rel.begin() + static_cast<long>(victim_pos) + 1, rel.end());
      std::vector<int> def = invert_letters(a);
      auto binv = invert_letters(b);
      def.insert(def.end(), binv.begin(), binv.end());
      if (rel[victim_pos] < 0) {
        def = invert_letters(def);
      }
      sigma_[static_cast<size_t>(victim)].kind = SigmaInfo::Kind::eliminated;
      sigma_[static_cast<size_t>(victim)].definition = free_reduce(def);
      eliminated[static_cast<size_t>(victim)] = true;
      relation_done[r] = true;
      progressed = true;
      // substitute into the remaining relations
      for (size_t r2 = 0; r2 < relations.size(); ++r2) {
        if (relation_done[r2]) {
          continue;
        }
        std::vector<int> out;
        for (int l : relations[r2]) {
          if (std::abs(l) - 1 == victim) {
            auto rep = sigma_[static_cast<size_t>(victim)].definition;
            if (l < 0) {
              rep = invert_letters(rep);
            }
            out.insert(out.end(), rep.begin(), rep.end());
          } else {
            out.push_back(l);
          }
        }
        relations[r2] = free_reduce(out);
      }
    }
    if (!progressed) {
      break;
    }
  }
  for (size_t r = 0; r < relations.size(); ++r) {
    if (!relation_done[r] && !free_reduce(relations[r]).empty()) {
      throw InvariantViolation("Schreier relation elimination got stuck");
    }
  }

  // classify the remaining generators
  rank_ = 0;
  for (size_t id = 0; id < sigma_.size(); ++id) {
    if (is_tree[id]) {
      sigma_[id].kind = SigmaInfo::Kind::tree;
    } else if (!eliminated[id]) {
      sigma_[id].kind = SigmaInfo::Kind::basis;
      sigma_[id].basis_id = rank_++;
    }
  }
  const int expected = (p_ - 1) * (q_ - 1);
  if (rank_ != expected) {
    throw InvariantViolation("kernel rank " + std::to_string(rank_) + " != (p-1)(q-1) = " +
                             std::to_string(expected));
  }
  magnus_ = MagnusOrder(rank_);
}

std::vector<int> TorusKnotKernelOrder::schreier_word(const Word& nf) const {
  auto ab = group_->ab_z(nf);
  if (!ab || *ab != 0) {
    throw InvariantViolation("element is not in the abelianisation kernel");
  }
  auto coset_id = [&](int i, int j) { return i * q_ + j; };
  std::vector<int> out;
  int i = 0, j = 0;
  for (auto [g, e] : letters(nf)) {
    const int gen = g == u_idx_ ? 0 : 1;
    if (e > 0) {
      out.push_back(2 * coset_id(i, j) + gen + 1);
      if (gen == 0) {
        i = (i + 1) % p_;
      } else {
        j = (j + 1) % q_;
      }
    } else {
      if (gen == 0) {
        i = ((i - 1) % p_ + p_) % p_;
      } else {
        j = ((j - 1) % q_ + q_) % q_;
      }
      out.push_back(-(2 * coset_id(i, j) + gen + 1));
    }
  }
  if (i != 0 || j != 0) {
    throw InvariantViolation("Schreier walk did not close");
  }
  return out;
}

std::vector<int> TorusKnotKernelOrder::expand(int sigma_letter) const {
  const int id = std::abs(sigma_letter) - 1;
  const auto& info = sigma_[static_cast<size_t>(id)];
  std::vector<int> base;
  switch (info.kind) {
    case SigmaInfo::Kind::tree:
      break;
    case SigmaInfo::Kind::basis:
      base.push_back(info.basis_id + 1);
      break;
    case SigmaInfo::Kind::eliminated: {
      auto it = expand_memo_.find(id);
      if (it != expand_memo_.end()) {
        base = it->second;
      } else {
        for (int l : info.definition) {
          auto sub = expand(l);
          base.insert(base.end(), sub.begin(), sub.end());
        }
        base = free_reduce(base);
        expand_memo_.emplace(id, base);
      }
      break;
    }
  }
  if (sigma_letter < 0) {
    base = invert_letters(base);
  }
  return base;
}

std::vector<int> TorusKnotKernelOrder::rewrite_to_basis(const Word& nf) const {
  std::vector<int> out;
  for (int l : schreier_word(nf)) {
    auto sub = expand(l);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return free_reduce(out);
}

Sign TorusKnotKernelOrder::sign(const Word& nf) const {
  auto w = rewrite_to_basis(nf);
  if (w.empty()) {
    throw IdentitySign();
  }
  return magnus_.sign(w);
}

OrderOracle TorusKnotKernelOrder::as_oracle(bool positive) const {
  auto self = std::make_shared<TorusKnotKernelOrder>(*this);
  return OrderOracle{group_,
                     [self, positive](const Word& nf) -> MaybeSign {
                       const Sign s = self->sign(nf);
                       return positive ? s : flip(s);
                     },
                     std::string("magnus") + (positive ? "+" : "-")};
}

// ---------------------------------------------------------------------------

OrderOracle z_order(std::shared_ptr<const GroupBackend> z, bool positive) {
  if (z->num_gens() != 1) {
    throw std::invalid_argument("z_order requires a rank-one backend");
  }
  return OrderOracle{z,
                     [positive](const Word& nf) -> MaybeSign {
                       const long long e = nf.syls.empty() ? 0 : nf.syls[0].second;
                       if (e == 0) {
                         throw IdentitySign();
                       }
                       const Sign s = e > 0 ? Sign::plus : Sign::minus;
                       return positive ? s : flip(s);
                     },
                     positive ? "z+" : "z-"};
}

Projection ab_z_projection(std::shared_ptr<const GroupBackend> g,
                           std::shared_ptr<const GroupBackend> z_target) {
  return Projection{z_target,
                    [g](const Word& nf) -> Word {
                      auto v = g->ab_z(nf);
                      if (!v) {
                        throw UnsupportedPresentation("no canonical Z-abelianisation");
                      }
                      Word out;
                      out.push_syllable(0, *v);
                      return out;
                    },
                    "ab"};
}

OrderOracle klein_lex_order(std::shared_ptr<const GroupBackend> klein, bool x_positive,
                            bool y_positive) {
  const auto* kd = klein_data(*klein);
  if (kd == nullptr) {
    throw std::invalid_argument("klein_lex_order requires the Klein-bottle backend");
  }
  const int y_idx = kd->y_idx;
  OrderOracle kernel{klein,
                     [y_idx, y_positive](const Word& nf) -> MaybeSign {
                       long long b = 0;
                       for (auto& [g, e] : nf.syls) {
                         if (g == y_idx) {
                           b = e;
                         }
                       }
                       if (b == 0) {
                         throw IdentitySign();
                       }
                       const Sign s = b > 0 ? Sign::plus : Sign::minus;
                       return y_positive ? s : flip(s);
                     },
                     y_positive ? "y+" : "y-"};
  auto z = make_z_backend();
  return lex_extend(kernel, z_order(z, x_positive), ab_z_projection(klein, z));
}

OrderOracle torus_knot_lex_order(std::shared_ptr<const GroupBackend> tk, bool q_positive,
                                 bool kernel_positive) {
  TorusKnotKernelOrder kernel(tk);
  auto z = make_z_backend();
  return lex_extend(kernel.as_oracle(kernel_positive), z_order(z, q_positive),
                    ab_z_projection(tk, z));
}

}  // namespace ordlab
