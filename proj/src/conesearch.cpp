#include "ordlab/conesearch.hpp"

#include <algorithm>
#include <deque>

namespace ordlab {

namespace {

struct Coupling {
  size_t a, b;
  bool same;
  std::string note;
};

struct Instantiated {
  std::vector<std::pair<size_t, Sign>> unary;
  std::vector<std::string> unary_notes;
  std::vector<Coupling> couplings;
};

Instantiated instantiate(const Ball& ball, const std::vector<ConeConstraint>& cs) {
  Instantiated out;
  const auto& g = ball.group();
  for (const auto& c : cs) {
    switch (c.kind) {
      case ConeConstraint::Kind::prescribed_sign: {
        auto nf = g.normal_form(c.element);
        if (!nf) {
          throw UnknownValue("constraint element has no normal form");
        }
        const int idx = ball.index_of(*nf);
        if (idx < 0 || nf->empty()) {
          throw std::invalid_argument("prescribed element is not a nontrivial ball element");
        }
        out.unary.emplace_back(static_cast<size_t>(idx), c.sign);
        out.unary_notes.push_back("prescribed sign of " +
                                  format_word(*nf, g.gen_names()));
        break;
      }
      case ConeConstraint::Kind::peripheral_line: {
        const auto& P = g.peripheral(c.peripheral);
        size_t anchor = SIZE_MAX;
        int anchor_side = 0;
        for (size_t i = 1; i < ball.size(); ++i) {
          auto coords = g.peripheral_coords(P, ball.at(i));
          if (coords.status == CoordsResult::Status::unknown) {
            throw UnknownValue("peripheral membership unknown in the ball");
          }
          if (coords.status != CoordsResult::Status::member) {
            continue;
          }
          int side;
          if (c.slope.rational) {
            const __int128 cr =
                __int128(coords.a) * c.slope.q - __int128(coords.b) * c.slope.p;
            side = cr > 0 ? 1 : (cr < 0 ? -1 : 0);
          } else {
            // (a, b) against the direction [s : 1]: side of a - s b
            side = quad_sign(coords.a * c.slope.c - c.slope.a * coords.b,
                             -c.slope.b * coords.b, c.slope.d);
          }
          if (side == 0) {
            continue;  // the L_0 tie points stay free
          }
          if (anchor == SIZE_MAX) {
            anchor = i;
            anchor_side = side;
            continue;
          }
          out.couplings.push_back(Coupling{anchor, i, side == anchor_side,
                                           "peripheral line " + c.slope.str()});
        }
        break;
      }
      case ConeConstraint::Kind::convex_subgroup: {
        for (size_t i = 1; i < ball.size(); ++i) {
          auto in_i = c.subgroup.contains(ball.at(i));
          if (!in_i) {
            throw UnknownValue("convexity constraint: membership unknown");
          }
          if (*in_i) {
            continue;
          }
          for (size_t j = 1; j < ball.size(); ++j) {
            if (i == j) {
              continue;
            }
            auto in_j = c.subgroup.contains(ball.at(j));
            if (!in_j) {
              throw UnknownValue("convexity constraint: membership unknown");
            }
            if (!*in_j) {
              continue;
            }
            auto d = ball.group().mult(inverse(ball.at(i)), ball.at(j));
            if (!d || d->empty()) {
              continue;
            }
            const int di = ball.index_of(*d);
            if (di < 0) {
              continue;
            }
            // g off C, h in C: sign(g) = sign(g^-1 h) would refute convexity
            out.couplings.push_back(Coupling{i, static_cast<size_t>(di), false,
                                             "convexity of " + c.subgroup.desc});
          }
        }
        break;
      }
    }
  }
  return out;
}

struct Engine {
  const Ball& ball;
  const Instantiated& inst;
  const SearchOptions& opts;
  size_t n;
  std::vector<int> state;
  struct Rule {
    size_t a, b, ab;
  };
  std::vector<Rule> rules;
  std::vector<std::vector<size_t>> rules_by_elem;
  std::vector<std::vector<size_t>> coup_by_elem;
  std::vector<size_t> reps;
  size_t nodes = 0;
  size_t solutions = 0;
  bool complete = true;
  std::vector<ConeSnapshot> found;

  Engine(const Ball& b, const Instantiated& i, const SearchOptions& o)
      : ball(b), inst(i), opts(o), n(b.size()) {
    state.assign(n, 0);
    rules_by_elem.assign(n, {});
    coup_by_elem.assign(n, {});
    for (size_t x = 1; x < n; ++x) {
      for (size_t y = 1; y < n; ++y) {
        auto prod = ball.group().mult(ball.at(x), ball.at(y));
        if (!prod) {
          throw UnknownValue("search: product unknown");
        }
        if (prod->empty()) {
          continue;
        }
        const int k = ball.index_of(*prod);
        if (k < 0) {
          continue;
        }
        const size_t r = rules.size();
        rules.push_back(Rule{x, y, static_cast<size_t>(k)});
        rules_by_elem[x].push_back(r);
        if (y != x) {
          rules_by_elem[y].push_back(r);
        }
      }
    }
    for (size_t ci = 0; ci < inst.couplings.size(); ++ci) {
      coup_by_elem[inst.couplings[ci].a].push_back(ci);
      coup_by_elem[inst.couplings[ci].b].push_back(ci);
    }
    for (size_t x = 1; x < n; ++x) {
      if (ball.inverse_index(x) >= x) {
        reps.push_back(x);
      }
    }
  }

  // Assigns elem := s with the given justification, propagating closure and
  // couplings.  Returns false on contradiction (the clashing step stays in
  // the log as its last entry).
  bool assign(size_t elem, Sign s, CertStep step, std::vector<CertStep>& log,
              std::vector<size_t>& touched) {
    step.elem = elem;
    step.sign = s;
    const int want = s == Sign::plus ? 1 : -1;
    if (state[elem] == want) {
      return true;  // already known
    }
    log.push_back(step);
    if (state[elem] == -want) {
      return false;
    }
    state[elem] = want;
    touched.push_back(elem);

    const size_t ie = ball.inverse_index(elem);
    if (ie == elem) {
      CertStep self;
      self.by = CertStep::By::self_inverse;
      self.elem = elem;
      self.src_a = elem;
      log.push_back(self);
      return false;  // g = g^-1 nontrivial: no consistent sign
    }
    {
      CertStep inv_step;
      inv_step.by = CertStep::By::inversion;
      inv_step.src_a = elem;
      if (!assign(ie, flip(s), inv_step, log, touched)) {
        return false;
      }
    }

    for (size_t ri : rules_by_elem[elem]) {
      const Rule& r = rules[ri];
      if (state[r.a] == 1 && state[r.b] == 1 && state[r.ab] != 1) {
        CertStep cl;
        cl.by = CertStep::By::closure;
        cl.src_a = r.a;
        cl.src_b = r.b;
        if (!assign(r.ab, Sign::plus, cl, log, touched)) {
          return false;
        }
      }
    }
    for (size_t ci : coup_by_elem[elem]) {
      const Coupling& c = inst.couplings[ci];
      const size_t other = c.a == elem ? c.b : c.a;
      const Sign forced = c.same ? s : flip(s);
      if (state[other] != (forced == Sign::plus ? 1 : -1)) {
        CertStep cp;
        cp.by = CertStep::By::coupling;
        cp.src_a = elem;
        cp.coupling_same = c.same;
        cp.note = c.note;
        if (!assign(other, forced, cp, log, touched)) {
          return false;
        }
      }
    }
    return true;
  }

  void undo(const std::vector<size_t>& touched) {
    for (size_t e : touched) {
      state[e] = 0;
    }
  }

  void record_solution() {
    ConeSnapshot s;
    s.group = ball.group_ptr();
    s.radius = ball.radius();
    for (size_t i = 1; i < n; ++i) {
      s.signs.emplace_back(ball.at(i), state[i] > 0 ? Sign::plus : Sign::minus);
      s.dist.push_back(ball.distance(i));
    }
    found.push_back(std::move(s));
    ++solutions;
  }

  // Returns the refutation of the current node, or nullptr when the subtree
  // contains a solution or a cap was hit.
  std::unique_ptr<UnsatCert> dfs() {
    if (++nodes > opts.node_cap) {
      complete = false;
      return nullptr;
    }
    size_t next = SIZE_MAX;
    for (size_t v : reps) {
      if (state[v] == 0) {
        next = v;
        break;
      }
    }
    if (next == SIZE_MAX) {
      if (solutions < opts.solution_limit) {
        record_solution();
        if (solutions == opts.solution_limit) {
          complete = false;
        }
      }
      return nullptr;
    }
    std::unique_ptr<UnsatCert> branches[2];
    bool any_solution = false;
    int which = 0;
    for (Sign s : {Sign::plus, Sign::minus}) {
      std::vector<CertStep> sub_log;
      std::vector<size_t> touched;
      CertStep assume;
      assume.by = CertStep::By::assumption;
      const bool ok = assign(next, s, assume, sub_log, touched);
      if (!ok) {
        auto leaf = std::make_unique<UnsatCert>();
        leaf->steps = std::move(sub_log);
        branches[which] = std::move(leaf);
      } else {
        auto sub = dfs();
        if (sub == nullptr) {
          any_solution = true;
        } else {
          sub->steps.insert(sub->steps.begin(), sub_log.begin(), sub_log.end());
          branches[which] = std::move(sub);
        }
      }
      undo(touched);
      ++which;
      if (solutions >= opts.solution_limit || nodes > opts.node_cap) {
        return nullptr;
      }
    }
    if (any_solution || branches[0] == nullptr || branches[1] == nullptr) {
      return nullptr;
    }
    auto node = std::make_unique<UnsatCert>();
    node->branch_elem = next;
    node->pos = std::move(branches[0]);
    node->neg = std::move(branches[1]);
    return node;
  }
};

}  // namespace

SearchOutcome search(std::shared_ptr<const GroupBackend> g, int radius,
                     const std::vector<ConeConstraint>& constraints,
                     const SearchOptions& opts) {
  Ball ball(g, radius, opts.ball_cap);
  const Instantiated inst = instantiate(ball, constraints);
  Engine eng(ball, inst, opts);

  SearchOutcome out;
  std::vector<CertStep> root_log;
  std::vector<size_t> touched;
  bool ok = true;
  for (size_t u = 0; u < inst.unary.size(); ++u) {
    CertStep st;
    st.by = CertStep::By::constraint;
    st.note = inst.unary_notes[u];
    if (!eng.assign(inst.unary[u].first, inst.unary[u].second, st, root_log, touched)) {
      ok = false;
      break;
    }
  }
  std::unique_ptr<UnsatCert> cert;
  if (!ok) {
    cert = std::make_unique<UnsatCert>();
    cert->steps = std::move(root_log);
  } else {
    cert = eng.dfs();
    if (cert != nullptr && !root_log.empty()) {
      cert->steps.insert(cert->steps.begin(), root_log.begin(), root_log.end());
    }
  }
  out.nodes = eng.nodes;
  out.complete = eng.complete;
  out.snapshots = std::move(eng.found);
  if (cert != nullptr && eng.complete && out.snapshots.empty()) {
    out.unsat = true;
    out.certificate = std::shared_ptr<const UnsatCert>(std::move(cert));
  }
  return out;
}

CountOutcome count_classes(std::shared_ptr<const GroupBackend> g, int radius,
                           const std::vector<ConeConstraint>& constraints,
                           const SearchOptions& opts) {
  auto res = search(g, radius, constraints, opts);
  CountOutcome out;
  out.unsat = res.unsat;
  out.count = res.snapshots.size();
  out.complete = res.complete;
  out.certificate = res.certificate;
  return out;
}

std::optional<NonorderabilityCertificate> certify_nonorderable(
    std::shared_ptr<const GroupBackend> g, int r_max, const SearchOptions& opts) {
  SearchOptions fast = opts;
  fast.solution_limit = 1;  // one consistent cone ends this radius
  for (int r = 1; r <= r_max; ++r) {
    auto res = search(g, r, {}, fast);
    if (res.unsat) {
      return NonorderabilityCertificate{r, res.certificate};
    }
  }
  return std::nullopt;
}

namespace {

void render_steps(const UnsatCert& cert, const Ball& ball, std::string& out, int depth,
                  size_t& counter) {
  const auto& names = ball.group().gen_names();
  const std::string pad(static_cast<size_t>(depth) * 2, ' ');
  for (const auto& st : cert.steps) {
    out += pad + "(" + std::to_string(++counter) + ") ";
    switch (st.by) {
      case CertStep::By::assumption:
        out += "assume ";
        break;
      case CertStep::By::self_inverse:
        out += "torsion: ";
        break;
      case CertStep::By::constraint:
        out += "constraint [" + st.note + "]: ";
        break;
      case CertStep::By::inversion:
        out += "inversion of " + format_word(ball.at(st.src_a), names) + ": ";
        break;
      case CertStep::By::closure:
        out += "closure " + format_word(ball.at(st.src_a), names) + " * " +
               format_word(ball.at(st.src_b), names) + ": ";
        break;
      case CertStep::By::coupling:
        out += "coupled (" + std::string(st.coupling_same ? "same" : "opposite") +
               " side, " + st.note + ") with " + format_word(ball.at(st.src_a), names) +
               ": ";
        break;
    }
    if (st.by == CertStep::By::self_inverse) {
      out += format_word(ball.at(st.elem), names) + " equals its own inverse\n";
    } else {
      out += format_word(ball.at(st.elem), names);
      out += st.sign == Sign::plus ? " +" : " -";
      out += "\n";
    }
  }
  if (cert.branch_elem) {
    out += pad + "branch on " + format_word(ball.at(*cert.branch_elem), names) + ":\n";
    render_steps(*cert.pos, ball, out, depth + 1, counter);
    out += pad + "otherwise:\n";
    render_steps(*cert.neg, ball, out, depth + 1, counter);
  } else {
    out += pad + "contradiction.\n";
  }
}

bool replay_node(const UnsatCert& cert, const Ball& ball, const Instantiated& inst,
                 std::vector<int>& state);

bool replay_branch(const UnsatCert& child, size_t branch_elem, Sign s, const Ball& ball,
                   const Instantiated& inst, std::vector<int> state) {
  if (child.steps.empty() || child.steps.front().by != CertStep::By::assumption ||
      child.steps.front().elem != branch_elem || child.steps.front().sign != s) {
    return false;
  }
  return replay_node(child, ball, inst, state);
}

bool replay_node(const UnsatCert& cert, const Ball& ball, const Instantiated& inst,
                 std::vector<int>& state) {
  bool contradiction = false;
  for (const auto& st : cert.steps) {
    if (contradiction) {
      return false;
    }
    switch (st.by) {
      case CertStep::By::assumption:
        break;
      case CertStep::By::self_inverse:
        if (ball.inverse_index(st.elem) != st.elem || ball.at(st.elem).empty()) {
          return false;
        }
        contradiction = true;
        continue;
      case CertStep::By::constraint: {
        bool found = false;
        for (size_t u = 0; u < inst.unary.size(); ++u) {
          if (inst.unary[u].first == st.elem && inst.unary[u].second == st.sign) {
            found = true;
          }
        }
        if (!found) {
          return false;
        }
        break;
      }
      case CertStep::By::inversion: {
        if (st.src_a >= ball.size() || ball.inverse_index(st.src_a) != st.elem) {
          return false;
        }
        const int sa = state[st.src_a];
        if (sa == 0 || (st.sign == Sign::plus ? 1 : -1) != -sa) {
          return false;
        }
        break;
      }
      case CertStep::By::closure: {
        if (st.src_a >= ball.size() || st.src_b >= ball.size()) {
          return false;
        }
        if (state[st.src_a] != 1 || state[st.src_b] != 1 || st.sign != Sign::plus) {
          return false;
        }
        auto prod = ball.group().mult(ball.at(st.src_a), ball.at(st.src_b));
        if (!prod || prod->empty()) {
          return false;
        }
        const int k2 = ball.index_of(*prod);
        if (k2 < 0 || static_cast<size_t>(k2) != st.elem) {
          return false;
        }
        break;
      }
      case CertStep::By::coupling: {
        bool found = false;
        for (const auto& c : inst.couplings) {
          const bool fwd = c.a == st.src_a && c.b == st.elem;
          const bool bwd = c.b == st.src_a && c.a == st.elem;
          if ((fwd || bwd) && c.same == st.coupling_same) {
            found = true;
            break;
          }
        }
        const int sa = st.src_a < ball.size() ? state[st.src_a] : 0;
        if (!found || sa == 0) {
          return false;
        }
        const int want = st.sign == Sign::plus ? 1 : -1;
        if (want != (st.coupling_same ? sa : -sa)) {
          return false;
        }
        break;
      }
    }
    const int want = st.sign == Sign::plus ? 1 : -1;
    if (state[st.elem] == -want) {
      contradiction = true;
      continue;
    }
    state[st.elem] = want;
  }
  if (cert.branch_elem) {
    if (contradiction || cert.pos == nullptr || cert.neg == nullptr) {
      return false;
    }
    return replay_branch(*cert.pos, *cert.branch_elem, Sign::plus, ball, inst, state) &&
           replay_branch(*cert.neg, *cert.branch_elem, Sign::minus, ball, inst, state);
  }
  return contradiction;
}

}  // namespace

std::string render_certificate(const UnsatCert& cert, const Ball& ball) {
  std::string out;
  size_t counter = 0;
  render_steps(cert, ball, out, 0, counter);
  return out;
}

bool replay_certificate(const UnsatCert& cert, const Ball& ball,
                        const std::vector<ConeConstraint>& constraints) {
  const Instantiated inst = instantiate(ball, constraints);
  std::vector<int> state(ball.size(), 0);
  return replay_node(cert, ball, inst, state);
}

}  // namespace ordlab
