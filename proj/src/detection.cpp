#include "ordlab/detection.hpp"

#include <numeric>

#include "ordlab/jobs.hpp"

namespace ordlab {

namespace {

Word peripheral_word(const PeripheralSubgroup& P, long long a, long long b) {
  return concat(power(P.mu, a), power(P.lambda, b));
}

}  // namespace

LatticeSignTable peripheral_table(const OrderOracle& o, const PeripheralSubgroup& P, int r) {
  LatticeSignTable t;
  t.radius = r;
  for (long long a = -r; a <= r; ++a) {
    for (long long b = -r; b <= r; ++b) {
      if (a == 0 && b == 0) {
        continue;
      }
      auto s = sign_of(o, peripheral_word(P, a, b));
      if (!s) {
        throw UnknownValue("peripheral table: sign unknown");
      }
      t.pts.emplace_back(b, a, *s);  // plotted at (lambda, mu) coordinates
    }
  }
  return t;
}

LatticeOracle peripheral_queries(const OrderOracle& o, const PeripheralSubgroup& P) {
  return [o, P](long long x, long long y) -> std::optional<Sign> {
    if (x == 0 && y == 0) {
      return std::nullopt;
    }
    return sign_of(o, peripheral_word(P, y, x));
  };
}

LatticeSignTable conjugate_peripheral_table(const OrderOracle& o, const PeripheralSubgroup& P,
                                            const Word& g, int r) {
  LatticeSignTable t;
  t.radius = r;
  const Word ginv = inverse(g);
  for (long long a = -r; a <= r; ++a) {
    for (long long b = -r; b <= r; ++b) {
      if (a == 0 && b == 0) {
        continue;
      }
      auto s = sign_of(o, concat(concat(g, peripheral_word(P, a, b)), ginv));
      if (!s) {
        throw UnknownValue("conjugate peripheral table: sign unknown");
      }
      t.pts.emplace_back(b, a, *s);
    }
  }
  return t;
}

LatticeOracle conjugate_peripheral_queries(const OrderOracle& o, const PeripheralSubgroup& P,
                                           const Word& g) {
  const Word ginv = inverse(g);
  return [o, P, g, ginv](long long x, long long y) -> std::optional<Sign> {
    if (x == 0 && y == 0) {
      return std::nullopt;
    }
    return sign_of(o, concat(concat(g, peripheral_word(P, y, x)), ginv));
  };
}

SlopeEstimate slope_of_order(const OrderOracle& o, const PeripheralSubgroup& P, int r) {
  SlopeEstimate est;
  est.radius = r;
  auto table = peripheral_table(o, P, r);
  auto queries = peripheral_queries(o, P);
  est.interval = line_of_table(table, &queries, 3 * r);
  est.exact = est.interval.exact;
  return est;
}

SlopeEstimate slope_on_conjugate(const OrderOracle& o, const PeripheralSubgroup& P,
                                 const Word& g, int r) {
  SlopeEstimate est;
  est.radius = r;
  auto table = conjugate_peripheral_table(o, P, g, r);
  auto queries = conjugate_peripheral_queries(o, P, g);
  est.interval = line_of_table(table, &queries, 3 * r);
  est.exact = est.interval.exact;
  return est;
}

std::string level_name(DetectionLevel l) {
  switch (l) {
    case DetectionLevel::weak: return "weak";
    case DetectionLevel::regular: return "regular";
    case DetectionLevel::strong: return "strong";
  }
  return "?";
}

std::string status_name(DetectionStatus s) {
  switch (s) {
    case DetectionStatus::certified: return "certified";
    case DetectionStatus::refuted_at_radius: return "refuted-at-radius";
    case DetectionStatus::unknown: return "unknown";
  }
  return "?";
}

DetectionVerdict weak_detect(const OrderOracle& o, const PeripheralSubgroup& P,
                             const Slope& slope, int r) {
  DetectionVerdict v;
  v.level = DetectionLevel::weak;
  v.slope = slope;
  v.radius = r;
  v.witness = o.provenance;
  auto table = peripheral_table(o, P, r);
  auto queries = peripheral_queries(o, P);
  const SlopeFit fit = fit_slope(table, slope, &queries, 3 * r);
  v.status = fit.consistent && !fit.refuted ? DetectionStatus::certified
                                            : DetectionStatus::unknown;
  return v;
}

DetectionVerdict regular_detect_check(const OrderOracle& o, const PeripheralSubgroup& P,
                                      const Slope& slope, int r_conj, int r_slope,
                                      int jobs) {
  DetectionVerdict v;
  v.level = DetectionLevel::regular;
  v.slope = slope;
  v.radius = r_conj;
  v.witness = o.provenance;
  Ball conjugators(o.group, r_conj);
  const auto fits = parallel_map<SlopeFit>(
      conjugators.size(), jobs, [&](size_t i) {
        auto table = conjugate_peripheral_table(o, P, conjugators.at(i), r_slope);
        auto queries = conjugate_peripheral_queries(o, P, conjugators.at(i));
        return fit_slope(table, slope, &queries, 3 * r_slope);
      });
  for (size_t i = 0; i < conjugators.size(); ++i) {
    if (!fits[i].consistent) {
      // this conjugate's peripheral line excludes the slope: the witness
      // order does not regularly detect it
      v.status = DetectionStatus::refuted_at_radius;
      v.witness = "conjugate by " +
                  format_word(conjugators.at(i), o.group->gen_names()) +
                  " has an inconsistent peripheral pattern";
      return v;
    }
    if (fits[i].refuted) {
      v.status = DetectionStatus::refuted_at_radius;
      v.witness = "conjugate by " +
                  format_word(conjugators.at(i), o.group->gen_names()) +
                  " refutes convexity of the slope line";
      return v;
    }
  }
  v.status = DetectionStatus::certified;
  return v;
}

StrongWitness strong_detect_witness(std::shared_ptr<const GroupBackend> g,
                                    const PeripheralSubgroup& P, const Slope& slope,
                                    const Projection& phi, const OrderOracle& target_order,
                                    const OrderOracle* kernel_order) {
  if (!slope.rational) {
    throw std::invalid_argument("strong detection applies to rational slopes");
  }
  StrongWitness out;
  out.verdict.level = DetectionLevel::strong;
  out.verdict.slope = slope;
  out.verdict.radius = 0;
  const Word alpha = *g->normal_form(peripheral_word(P, slope.p, slope.q));
  const Word img = *phi.target->normal_form(phi.map(alpha));
  out.phi_alpha = img.syls.empty() ? 0 : img.syls[0].second;
  // surjectivity of phi onto the rank-one target
  long long gcd_imgs = 0;
  for (int gi = 0; gi < g->num_gens(); ++gi) {
    Word gen;
    gen.push_syllable(gi, 1);
    const Word gen_img = *phi.target->normal_form(phi.map(*g->normal_form(gen)));
    const long long e = gen_img.syls.empty() ? 0 : gen_img.syls[0].second;
    gcd_imgs = std::gcd(gcd_imgs, e < 0 ? -e : e);
  }
  if (!img.empty()) {
    out.verdict.status = DetectionStatus::unknown;
    out.verdict.witness = "phi(alpha) = " + format_word(img, phi.target->gen_names()) +
                          " is nontrivial";
    return out;
  }
  if (gcd_imgs != 1) {
    out.verdict.status = DetectionStatus::unknown;
    out.verdict.witness = "phi is not surjective onto the ordered target";
    return out;
  }
  out.verdict.status = DetectionStatus::certified;
  out.verdict.witness = "kernel of " + phi.name +
                        " is a proper normal convex subgroup through the lex order";
  if (kernel_order != nullptr) {
    out.induced = lex_extend(*kernel_order, target_order, phi);
  }
  return out;
}

std::string cofinality_name(Cofinality c) {
  switch (c) {
    case Cofinality::cofinal_at_radius: return "cofinal-at-radius";
    case Cofinality::bounded_at_radius: return "bounded-at-radius";
    case Cofinality::unknown: return "unknown";
  }
  return "?";
}

CofinalityReport cofinality_check(const OrderOracle& o, const Word& w, int r, int n_max,
                                  const PLAction* action) {
  CofinalityReport rep;
  rep.element = w;
  rep.radius = r;
  rep.n_max = n_max;
  const Word wn = *o.group->normal_form(w);
  if (wn.empty()) {
    throw std::invalid_argument("cofinality of the identity is undefined");
  }
  const Sign sw = *sign_of(o, wn);
  const Word up = sw == Sign::plus ? wn : inverse(wn);
  const Word hi = power(up, n_max);
  const Word lo = inverse(hi);
  Ball ball(o.group, r);

  bool cofinal = true;
  for (size_t i = 0; i < ball.size() && cofinal; ++i) {
    auto c1 = order_cmp(o, lo, ball.at(i));
    auto c2 = order_cmp(o, ball.at(i), hi);
    if (!c1 || !c2) {
      rep.verdict = Cofinality::unknown;
      return rep;
    }
    if (*c1 > 0 || *c2 > 0) {
      cofinal = false;
    }
  }
  if (cofinal) {
    rep.verdict = Cofinality::cofinal_at_radius;
  } else {
    // some ball element bounding every power on one side, with slack
    const Word hi_plus = power(up, n_max + 2);
    rep.verdict = Cofinality::unknown;
    for (size_t i = 0; i < ball.size(); ++i) {
      auto above = order_cmp(o, hi_plus, ball.at(i));
      auto below = order_cmp(o, ball.at(i), inverse(hi_plus));
      if (!above || !below) {
        continue;
      }
      if (*above < 0 || *below < 0) {
        rep.verdict = Cofinality::bounded_at_radius;
        rep.bound = ball.at(i);
        break;
      }
    }
  }
  if (action != nullptr && rep.verdict == Cofinality::cofinal_at_radius) {
    // cofinal elements must act freely on the window; the converse needs no
    // check since a window can squash ideal fixed points of bounded elements
    const auto fp = fixed_points(*action, wn);
    rep.consistent_with_action =
        fp.verdict == FixedPointReport::Verdict::fixed_point_free_on_window;
  }
  return rep;
}

BoundaryCofinalityReport boundary_cofinality_report(const OrderOracle& o,
                                                    const PeripheralSubgroup& P, int r,
                                                    int n_max) {
  BoundaryCofinalityReport rep;
  rep.line = slope_of_order(o, P, r);
  // a peripheral element off the detected line (off the whole interval when
  // the line is not exact)
  const std::vector<std::pair<long long, long long>> candidates{
      {1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}, {1, 2}};
  for (auto [a, b] : candidates) {
    const Slope dir = Slope::of_fraction(a, b);
    const bool on_line = rep.line.exact ? dir == rep.line.slope()
                                        : rep.line.interval.contains(dir);
    if (on_line) {
      continue;
    }
    rep.witness = *o.group->normal_form(
        concat(power(P.mu, a), power(P.lambda, b)));
    rep.detail = cofinality_check(o, rep.witness, r, n_max);
    rep.verdict = rep.detail.verdict;
    return rep;
  }
  rep.verdict = Cofinality::unknown;
  return rep;
}

ExclusionOutcome exclusion_search(std::shared_ptr<const GroupBackend> g,
                                  const std::string& peripheral, const Slope& slope, int r,
                                  const SearchOptions& opts) {
  ExclusionOutcome out;
  out.radius = r;
  auto res = search(g, r, {ConeConstraint::line(peripheral, slope)}, opts);
  out.complete = res.complete;
  out.nodes = res.nodes;
  out.cones_seen = res.snapshots.size();
  if (res.unsat) {
    out.excluded = true;
    out.certificate = res.certificate;
  }
  return out;
}

Multislope multislope_of_order(const OrderOracle& o, int r) {
  Multislope m;
  for (const auto& P : o.group->peripherals()) {
    auto est = slope_of_order(o, P, r);
    if (!est.exact) {
      throw InvariantViolation("multislope: torus " + P.name +
                               " has no exact detected slope at radius " +
                               std::to_string(r));
    }
    m.slopes.push_back(est.slope());
  }
  return m;
}

}  // namespace ordlab
