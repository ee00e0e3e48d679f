#include "ordlab/dynreal.hpp"

#include <algorithm>

namespace ordlab {

std::optional<Rat> PLAction::t(const Word& nf) const {
  auto it = index_.find(word_key(nf));
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<Word> PLAction::geodesic_of(const Word& nf) const {
  auto it = geodesic_.find(word_key(nf));
  if (it == geodesic_.end()) {
    return std::nullopt;
  }
  return it->second;
}

PLAction build_realisation(const OrderOracle& o, int radius) {
  const int table_radius = std::max(radius, 2 * (radius - 1));
  Ball ball(o.group, table_radius);
  std::vector<size_t> perm(ball.size());
  for (size_t i = 0; i < perm.size(); ++i) {
    perm[i] = i;
  }
  std::sort(perm.begin(), perm.end(), [&](size_t i, size_t j) {
    auto c = order_cmp(o, ball.at(i), ball.at(j));
    if (!c) {
      throw UnknownValue("build_realisation: order unknown on a ball pair");
    }
    return *c < 0;
  });

  PLAction a;
  a.group = o.group;
  a.radius = radius;
  a.table_radius = table_radius;
  a.provenance = o.provenance;
  long long identity_pos = -1;
  for (size_t k = 0; k < perm.size(); ++k) {
    if (ball.at(perm[k]).empty()) {
      identity_pos = static_cast<long long>(k);
      break;
    }
  }
  bool window_set = false;
  for (size_t k = 0; k < perm.size(); ++k) {
    const Rat pos(static_cast<long long>(k) - identity_pos);
    a.table.emplace_back(ball.at(perm[k]), pos);
    a.index_.emplace(word_key(ball.at(perm[k])), pos);
    a.geodesic_.emplace(word_key(ball.at(perm[k])), ball.geodesic(perm[k]));
    if (ball.distance(perm[k]) <= radius) {
      if (!window_set) {
        a.window_lo = a.window_hi = pos;
        window_set = true;
      } else {
        a.window_lo = std::min(a.window_lo, pos);
        a.window_hi = std::max(a.window_hi, pos);
      }
    }
  }

  for (int g = 0; g < o.group->num_gens(); ++g) {
    for (int e : {1, -1}) {
      Word step;
      step.push_syllable(g, e);
      std::vector<std::pair<Rat, Rat>> pts;
      for (auto& [h, th] : a.table) {
        auto gh = o.group->mult(step, h);
        if (!gh) {
          throw UnknownValue("build_realisation: product unknown");
        }
        auto tgh = a.t(*gh);
        if (tgh) {
          pts.emplace_back(th, *tgh);
        }
      }
      auto& dst = e > 0 ? a.gen_pos : a.gen_neg;
      dst.push_back(PLHomeo::from_points(std::move(pts)));
    }
  }
  return a;
}

Rat evaluate(const PLAction& a, const Word& w, const Rat& x) {
  Rat y = x;
  const auto ls = letters(w);
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    auto [g, e] = *it;
    const auto& f =
        e > 0 ? a.gen_pos[static_cast<size_t>(g)] : a.gen_neg[static_cast<size_t>(g)];
    y = f.eval(y);
  }
  return y;
}

Rat evaluate_element(const PLAction& a, const Word& nf, const Rat& x) {
  auto geo = a.geodesic_of(nf);
  return evaluate(a, geo ? *geo : nf, x);
}

PLHomeo element_map(const PLAction& a, const Word& w) {
  PLHomeo f;
  const auto ls = letters(w);
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    auto [g, e] = *it;
    const auto& step =
        e > 0 ? a.gen_pos[static_cast<size_t>(g)] : a.gen_neg[static_cast<size_t>(g)];
    f = step.compose_after(f);
  }
  return f;
}

std::string verdict_name(FixedPointReport::Verdict v) {
  switch (v) {
    case FixedPointReport::Verdict::fixed_point_free_on_window:
      return "fixed-point-free-on-window";
    case FixedPointReport::Verdict::has_fixed_points:
      return "has-fixed-points";
    case FixedPointReport::Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

FixedPointReport fixed_points(const PLAction& a, const Word& w) {
  FixedPointReport rep;
  rep.element = w;
  rep.window_lo = a.window_lo;
  rep.window_hi = a.window_hi;
  const PLHomeo f = element_map(a, w);
  rep.intervals = f.fixed_intervals(a.window_lo, a.window_hi);
  if (rep.intervals.empty()) {
    rep.verdict = FixedPointReport::Verdict::fixed_point_free_on_window;
  } else {
    bool interior = false;
    for (auto& [lo, hi] : rep.intervals) {
      if (lo > a.window_lo && hi < a.window_hi) {
        interior = true;
      }
    }
    rep.verdict = interior ? FixedPointReport::Verdict::has_fixed_points
                           : FixedPointReport::Verdict::inconclusive;
  }
  return rep;
}

ActionOnR action_of(const PLAction& a) {
  auto copy = std::make_shared<PLAction>(a);
  return ActionOnR{a.group,
                   [copy](const Word& nf, const Rat& x) -> std::optional<Rat> {
                     return evaluate_element(*copy, nf, x);
                   },
                   "dynreal[" + a.provenance + "]"};
}

OrderOracle order_at_point(const PLAction& a, const Rat& x, const OrderOracle* stab_order) {
  auto o = order_from_action(action_of(a), x, stab_order);
  o.provenance = "at[" + x.str() + "](" + a.provenance + ")";
  return o;
}

}  // namespace ordlab
