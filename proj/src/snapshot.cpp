#include "ordlab/snapshot.hpp"

#include <algorithm>
#include <map>

namespace ordlab {

std::optional<Sign> ConeSnapshot::sign_at(const Word& nf) const {
  for (auto& [w, s] : signs) {
    if (w == nf) {
      return s;
    }
  }
  return std::nullopt;
}

std::string ConeSnapshot::serialise() const {
  std::string out;
  for (auto& [w, s] : signs) {
    out += format_word(w, group->gen_names());
    out += ' ';
    out += sign_char(s);
    out += '\n';
  }
  return out;
}

ConeSnapshot snapshot(const OrderOracle& o, const Ball& ball) {
  ConeSnapshot s;
  s.group = ball.group_ptr();
  s.radius = ball.radius();
  for (size_t i = 0; i < ball.size(); ++i) {
    if (ball.at(i).empty()) {
      continue;
    }
    auto sg = o.sign_nf(ball.at(i));
    if (!sg) {
      throw UnknownValue("snapshot: oracle returned unknown on " +
                         format_word(ball.at(i), ball.group().gen_names()));
    }
    s.signs.emplace_back(ball.at(i), *sg);
    s.dist.push_back(ball.distance(i));
  }
  return s;
}

ConeSnapshot snapshot(const OrderOracle& o, int radius) {
  Ball ball(o.group, radius);
  return snapshot(o, ball);
}

Rat sikora_distance(const ConeSnapshot& a, const ConeSnapshot& b) {
  if (a.radius != b.radius || a.signs.size() != b.signs.size()) {
    throw std::invalid_argument("sikora_distance: radius mismatch");
  }
  int m = -1;
  for (size_t i = 0; i < a.signs.size(); ++i) {
    if (a.signs[i].first != b.signs[i].first) {
      throw std::invalid_argument("sikora_distance: snapshots on different balls");
    }
    if (a.signs[i].second != b.signs[i].second) {
      m = a.dist[i];
      break;
    }
  }
  if (m < 0) {
    return Rat(0);
  }
  Rat d(1);
  for (int i = 0; i < m; ++i) {
    d /= 2;
  }
  return d;
}

std::string ConeViolation::describe(const std::vector<std::string>& gen_names) const {
  if (kind == Kind::antisymmetry) {
    return "antisymmetry fails at " + format_word(g, gen_names);
  }
  return "closure fails: " + format_word(g, gen_names) + " * " + format_word(h, gen_names) +
         " = " + format_word(gh, gen_names);
}

std::optional<ConeViolation> validate_cone(const ConeSnapshot& s, const Ball& ball) {
  std::map<std::string, Sign> table;
  for (auto& [w, sg] : s.signs) {
    table.emplace(word_key(w), sg);
  }
  auto look = [&](const Word& nf) -> std::optional<Sign> {
    auto it = table.find(word_key(nf));
    if (it == table.end()) {
      return std::nullopt;
    }
    return it->second;
  };

  for (auto& [w, sg] : s.signs) {
    auto winv = ball.group().inv(w);
    if (!winv) {
      return ConeViolation{ConeViolation::Kind::antisymmetry, w, {}, {}};
    }
    auto si = look(*winv);
    if (!si || *si != flip(sg)) {
      return ConeViolation{ConeViolation::Kind::antisymmetry, w, {}, {}};
    }
  }
  for (auto& [g, sg] : s.signs) {
    for (auto& [h, sh] : s.signs) {
      if (sg != Sign::plus || sh != Sign::plus) {
        continue;
      }
      auto gh = ball.group().mult(g, h);
      if (!gh || gh->empty()) {
        continue;
      }
      auto sp = look(*gh);
      if (sp && *sp != Sign::plus) {
        return ConeViolation{ConeViolation::Kind::closure, g, h, *gh};
      }
    }
  }
  return std::nullopt;
}

}  // namespace ordlab
