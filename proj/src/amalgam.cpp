#include "ordlab/amalgam.hpp"

#include <algorithm>

#include "ordlab/ball.hpp"

namespace ordlab {

namespace {

class AmalgamBackend : public GroupBackend {
 public:
  AmalgamBackend(Presentation pres, const AmalgamSpec& spec)
      : GroupBackend(std::move(pres), Family::amalgam), spec_(spec) {
    offset_ = spec_.g1->num_gens();
    const auto& P1 = spec_.g1->peripheral(spec_.identification.source_peripheral);
    const auto& P2 = spec_.g2->peripheral(spec_.identification.target_peripheral);
    p1_ = &P1;
    p2_ = &P2;
    // reject degenerate factors: everything short lies in the edge subgroup
    for (int side = 0; side < 2; ++side) {
      const auto& g = side == 0 ? spec_.g1 : spec_.g2;
      const auto& P = side == 0 ? P1 : P2;
      Ball b2(g, 2);
      bool proper = false;
      for (size_t i = 0; i < b2.size(); ++i) {
        if (g->peripheral_coords(P, b2.at(i)).status == CoordsResult::Status::non_member) {
          proper = true;
          break;
        }
      }
      if (!proper) {
        throw UnsupportedPresentation(
            "factor equals edge group: the amalgam degenerates (factor " +
            std::to_string(side + 1) + ")");
      }
    }
    ball1_ = std::make_unique<Ball>(spec_.g1, 2 * spec_.certified_radius);
    ball2_ = std::make_unique<Ball>(spec_.g2, 2 * spec_.certified_radius);
  }

  std::optional<Word> normal_form_impl(const Word& w) const override {
    // split into factor runs
    struct Run {
      int side;  // 0 or 1
      Word word;  // over the factor's own generators
    };
    std::vector<Run> runs;
    for (auto& [g, e] : w.syls) {
      const int side = g < offset_ ? 0 : 1;
      const int local = side == 0 ? g : g - offset_;
      if (runs.empty() || runs.back().side != side) {
        runs.push_back(Run{side, Word{}});
      }
      runs.back().word.push_syllable(local, e);
    }
    // reduce each run to a factor normal form, dropping trivial runs
    auto reduce_runs = [&](std::vector<Run>& rs) -> bool {
      std::vector<Run> out;
      for (auto& r : rs) {
        auto nf = factor(r.side)->normal_form(r.word);
        if (!nf) {
          return false;
        }
        if (nf->empty()) {
          continue;
        }
        if (!out.empty() && out.back().side == r.side) {
          auto merged = factor(r.side)->mult(out.back().word, *nf);
          if (!merged) {
            return false;
          }
          if (merged->empty()) {
            out.pop_back();
          } else {
            out.back().word = *merged;
          }
        } else {
          out.push_back(Run{r.side, *nf});
        }
      }
      rs = std::move(out);
      return true;
    };
    if (!reduce_runs(runs)) {
      return std::nullopt;
    }

    // Britton reduction: convert edge-subgroup runs into the other factor
    // until the syllables are alternating and edge-free (or a single edge
    // element remains)
    while (true) {
      bool changed = false;
      for (size_t i = 0; i < runs.size(); ++i) {
        auto coords = factor(runs[i].side)
                          ->peripheral_coords(torus(runs[i].side), runs[i].word);
        if (coords.status == CoordsResult::Status::unknown) {
          return std::nullopt;
        }
        if (coords.status != CoordsResult::Status::member) {
          continue;
        }
        if (runs.size() == 1) {
          // a pure edge element: canonical frame is factor one
          if (runs[i].side == 1) {
            runs[i] = Run{0, edge_word(0, to_frame(0, coords.a, coords.b, 1))};
            changed = true;
          }
          break;
        }
        const int other = 1 - runs[i].side;
        runs[i] = Run{other, edge_word(other, to_frame(other, coords.a, coords.b,
                                                       runs[i].side))};
        if (!reduce_runs(runs)) {
          return std::nullopt;
        }
        changed = true;
        break;
      }
      if (!changed) {
        break;
      }
    }

    if (runs.empty()) {
      return Word{};
    }

    // canonical coset decomposition, right to left: s_i = h_i r_i with r_i
    // the minimal representative of the right coset H s_i; h_i migrates left
    Word prefix;  // edge part, expressed in the factor-one frame at the end
    for (size_t idx = runs.size(); idx-- > 0;) {
      auto rep = coset_rep(runs[idx].side, runs[idx].word);
      if (!rep) {
        return std::nullopt;
      }
      auto [rep_word, ha, hb] = *rep;
      runs[idx].word = rep_word;
      if (ha == 0 && hb == 0) {
        continue;
      }
      if (idx == 0) {
        auto [fa, fb] = to_frame(0, ha, hb, runs[0].side);
        prefix = edge_word(0, {fa, fb});
        // the prefix commutes into the leading syllable only through the
        // edge subgroup; keep it as a separate leading factor-one word
        if (runs[0].side == 0) {
          auto merged = spec_.g1->mult(prefix, runs[0].word);
          if (!merged) {
            return std::nullopt;
          }
          runs[0].word = *merged;
          prefix = Word{};
        }
      } else {
        auto [fa, fb] = to_frame(runs[idx - 1].side, ha, hb, runs[idx].side);
        auto merged = factor(runs[idx - 1].side)
                          ->mult(runs[idx - 1].word, edge_word(runs[idx - 1].side, {fa, fb}));
        if (!merged) {
          return std::nullopt;
        }
        runs[idx - 1].word = *merged;
      }
    }

    Word out;
    if (!prefix.empty()) {
      for (auto& [g, e] : prefix.syls) {
        out.push_syllable(g, e);
      }
    }
    for (auto& r : runs) {
      for (auto& [g, e] : r.word.syls) {
        out.push_syllable(r.side == 0 ? g : g + offset_, e);
      }
    }
    return out;
  }

 private:
  const std::shared_ptr<const GroupBackend>& factor(int side) const {
    return side == 0 ? spec_.g1 : spec_.g2;
  }
  const PeripheralSubgroup& torus(int side) const { return side == 0 ? *p1_ : *p2_; }

  // converts edge coordinates given in `from`'s frame into `to`'s frame
  std::pair<long long, long long> to_frame(int to, long long a, long long b,
                                           int from) const {
    if (to == from) {
      return {a, b};
    }
    const Mat2& m = spec_.identification.matrix;
    if (from == 0) {
      return {m.m[0][0] * a + m.m[0][1] * b, m.m[1][0] * a + m.m[1][1] * b};
    }
    const Mat2 inv = m.inverse_unimodular();
    return {inv.m[0][0] * a + inv.m[0][1] * b, inv.m[1][0] * a + inv.m[1][1] * b};
  }

  Word edge_word(int side, std::pair<long long, long long> coords) const {
    const auto& P = torus(side);
    auto w = factor(side)->normal_form(
        concat(power(P.mu, coords.first), power(P.lambda, coords.second)));
    return *w;
  }

  // minimal representative of H s (ball order), with s = h rep
  std::optional<std::tuple<Word, long long, long long>> coset_rep(int side,
                                                                  const Word& s) const {
    const Ball& ball = side == 0 ? *ball1_ : *ball2_;
    const Word s_inv = inverse(s);
    for (size_t i = 0; i < ball.size(); ++i) {
      auto d = factor(side)->mult(s, inverse(ball.at(i)));
      if (!d) {
        return std::nullopt;
      }
      auto coords = factor(side)->peripheral_coords(torus(side), *d);
      if (coords.status == CoordsResult::Status::unknown) {
        return std::nullopt;
      }
      if (coords.status == CoordsResult::Status::member) {
        return std::tuple{ball.at(i), coords.a, coords.b};
      }
    }
    (void)s_inv;
    return std::nullopt;  // beyond the certified range
  }

  AmalgamSpec spec_;
  int offset_;
  const PeripheralSubgroup* p1_;
  const PeripheralSubgroup* p2_;
  std::unique_ptr<Ball> ball1_, ball2_;
};

}  // namespace

std::shared_ptr<const GroupBackend> build_amalgam(const AmalgamSpec& spec) {
  Presentation pres;
  const auto& p1 = spec.g1->presentation();
  const auto& p2 = spec.g2->presentation();
  for (auto& g : p1.gens) {
    pres.gens.push_back(g + spec.name1);
  }
  for (auto& g : p2.gens) {
    pres.gens.push_back(g + spec.name2);
  }
  const int offset = spec.g1->num_gens();
  for (auto& r : p1.relators) {
    pres.relators.push_back(r);
  }
  for (auto& r : p2.relators) {
    Word shifted;
    for (auto& [g, e] : r.syls) {
      shifted.push_syllable(g + offset, e);
    }
    pres.relators.push_back(std::move(shifted));
  }
  // identification relators: mu_1 = image of (1,0), lambda_1 = image of (0,1)
  const auto& P1 = spec.g1->peripheral(spec.identification.source_peripheral);
  const auto& P2 = spec.g2->peripheral(spec.identification.target_peripheral);
  const Mat2& m = spec.identification.matrix;
  auto shift2 = [&](const Word& w) {
    Word out;
    for (auto& [g, e] : w.syls) {
      out.push_syllable(g + offset, e);
    }
    return out;
  };
  for (int col = 0; col < 2; ++col) {
    const Word& src = col == 0 ? P1.mu : P1.lambda;
    const Word img = concat(power(shift2(P2.mu), m.m[0][col]),
                            power(shift2(P2.lambda), m.m[1][col]));
    pres.relators.push_back(concat(src, inverse(img)));
  }
  return std::make_shared<AmalgamBackend>(std::move(pres), spec);
}

}  // namespace ordlab
