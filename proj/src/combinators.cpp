#include "ordlab/combinators.hpp"

namespace ordlab {

OrderOracle opposite(const OrderOracle& o) {
  auto base = o.sign_nf;
  return OrderOracle{o.group,
                     [base](const Word& nf) -> MaybeSign {
                       auto s = base(nf);
                       if (!s) {
                         return std::nullopt;
                       }
                       return flip(*s);
                     },
                     "op(" + o.provenance + ")"};
}

OrderOracle conjugate(const OrderOracle& o, const Word& g) {
  auto base = o.sign_nf;
  auto group = o.group;
  auto gnf = group->normal_form(g);
  if (!gnf) {
    throw UnknownValue("conjugate: conjugator has no normal form");
  }
  const Word conj = *gnf;
  const Word conj_inv = inverse(conj);
  return OrderOracle{group,
                     [base, group, conj, conj_inv](const Word& nf) -> MaybeSign {
                       auto m = group->normal_form(concat(concat(conj_inv, nf), conj));
                       if (!m) {
                         return std::nullopt;
                       }
                       return base(*m);
                     },
                     "conj[" + format_word(conj, group->gen_names()) + "](" + o.provenance + ")"};
}

std::optional<ConvexityRefutation> refute_convexity(const OrderOracle& o,
                                                    const ConvexWitness& c,
                                                    const Ball& ball) {
  for (size_t i = 0; i < ball.size(); ++i) {
    const Word& g = ball.at(i);
    if (g.empty()) {
      continue;
    }
    auto in_c = c.contains(g);
    if (!in_c) {
      throw UnknownValue("convexity check: membership unknown");
    }
    if (*in_c) {
      continue;
    }
    auto sg = o.sign_nf(g);
    if (!sg) {
      throw UnknownValue("convexity check: sign unknown");
    }
    for (size_t j = 0; j < ball.size(); ++j) {
      const Word& h = ball.at(j);
      if (h.empty()) {
        continue;
      }
      auto in_ch = c.contains(h);
      if (!in_ch) {
        throw UnknownValue("convexity check: membership unknown");
      }
      if (!*in_ch) {
        continue;
      }
      auto gh = o.group->mult(inverse(g), h);
      if (!gh || gh->empty()) {
        continue;
      }
      auto s2 = o.sign_nf(*gh);
      if (!s2) {
        throw UnknownValue("convexity check: sign unknown");
      }
      if (*s2 == *sg) {
        return ConvexityRefutation{g, h};
      }
    }
  }
  return std::nullopt;
}

OrderOracle convex_swap(const OrderOracle& o, const ConvexWitness& c, int working_radius) {
  Ball ball(o.group, working_radius);
  if (auto r = refute_convexity(o, c, ball)) {
    throw ConvexityRefuted(*r);
  }
  auto base = o.sign_nf;
  auto contains = c.contains;
  return OrderOracle{o.group,
                     [base, contains](const Word& nf) -> MaybeSign {
                       auto in_c = contains(nf);
                       if (!in_c) {
                         return std::nullopt;
                       }
                       auto s = base(nf);
                       if (!s) {
                         return std::nullopt;
                       }
                       return *in_c ? flip(*s) : *s;
                     },
                     "swap[" + c.desc + "](" + o.provenance + ")"};
}

OrderOracle lex_extend(const OrderOracle& kernel_order, const OrderOracle& quotient_order,
                       const Projection& proj) {
  auto group = kernel_order.group;
  auto ksign = kernel_order.sign_nf;
  auto qsign = quotient_order.sign_nf;
  auto target = proj.target;
  auto map = proj.map;
  return OrderOracle{
      group,
      [ksign, qsign, target, map](const Word& nf) -> MaybeSign {
        auto img = target->normal_form(map(nf));
        if (!img) {
          return std::nullopt;
        }
        if (!img->empty()) {
          return qsign(*img);
        }
        return ksign(nf);
      },
      "lex[" + proj.name + "](" + quotient_order.provenance + "; " + kernel_order.provenance +
          ")"};
}

CosetOrder quotient_order(const OrderOracle& o, const ConvexWitness& c, int working_radius) {
  Ball ball(o.group, working_radius);
  if (auto r = refute_convexity(o, c, ball)) {
    throw ConvexityRefuted(*r);
  }
  auto group = o.group;
  auto sign = o.sign_nf;
  auto contains = c.contains;
  return CosetOrder{
      group, c,
      [group, sign, contains](const Word& g, const Word& h) -> std::optional<int> {
        auto d = group->mult(inverse(g), h);
        if (!d) {
          return std::nullopt;
        }
        if (d->empty()) {
          return 0;
        }
        auto in_c = contains(*d);
        if (!in_c) {
          return std::nullopt;
        }
        if (*in_c) {
          return 0;
        }
        auto s = sign(*d);
        if (!s) {
          return std::nullopt;
        }
        return *s == Sign::plus ? -1 : 1;  // gC < hC iff g < h iff sign(g^-1 h) = +
      },
      "quot[" + c.desc + "](" + o.provenance + ")"};
}

OrderOracle order_from_action(const ActionOnR& action, const Rat& x,
                              const OrderOracle* stab_order) {
  auto apply = action.apply;
  std::optional<OrderOracle> stab;
  if (stab_order != nullptr) {
    stab = *stab_order;
  }
  return OrderOracle{
      action.group,
      [apply, x, stab](const Word& nf) -> MaybeSign {
        auto gx = apply(nf, x);
        if (!gx) {
          return std::nullopt;
        }
        if (*gx > x) {
          return Sign::plus;
        }
        if (*gx < x) {
          return Sign::minus;
        }
        if (!stab) {
          return std::nullopt;
        }
        return stab->sign_nf(nf);
      },
      "action[" + action.desc + " @ " + x.str() + "]"};
}

std::optional<std::string> check_action_order_preserving(const ActionOnR& action,
                                                         const OrderOracle& ox,
                                                         const Ball& ball, const Rat& x) {
  // g1 <= g2 must imply g1.x <= g2.x for an order built from the action.
  for (size_t i = 0; i < ball.size(); ++i) {
    for (size_t j = 0; j < ball.size(); ++j) {
      if (i == j) {
        continue;
      }
      auto cmp = order_cmp(ox, ball.at(i), ball.at(j));
      if (!cmp) {
        throw UnknownValue("action check: order unknown");
      }
      if (*cmp > 0) {
        continue;
      }
      auto xi = action.apply(ball.at(i), x);
      auto xj = action.apply(ball.at(j), x);
      if (!xi || !xj) {
        throw UnknownValue("action check: action unknown");
      }
      if (*xi > *xj) {
        return format_word(ball.at(i), ball.group().gen_names()) + " <= " +
               format_word(ball.at(j), ball.group().gen_names()) + " but images reversed";
      }
    }
  }
  return std::nullopt;
}

ConvexWitness stabiliser_witness(const ActionOnR& action, const Rat& x) {
  auto apply = action.apply;
  return ConvexWitness{[apply, x](const Word& nf) -> std::optional<bool> {
                         auto gx = apply(nf, x);
                         if (!gx) {
                           return std::nullopt;
                         }
                         return *gx == x;
                       },
                       "stab(" + x.str() + ")"};
}

}  // namespace ordlab
