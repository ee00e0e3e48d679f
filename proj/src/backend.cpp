#include "ordlab/backend.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace ordlab {

std::string family_name(Family f) {
  switch (f) {
    case Family::abelian: return "abelian";
    case Family::free_group: return "free";
    case Family::klein_bottle: return "klein_bottle";
    case Family::torus_knot: return "torus_knot";
    case Family::finite_table: return "finite";
    case Family::amalgam: return "amalgam";
  }
  return "?";
}

const PeripheralSubgroup& GroupBackend::peripheral(const std::string& name) const {
  for (auto& p : peripherals_) {
    if (p.name == name) {
      return p;
    }
  }
  throw std::out_of_range("no peripheral named '" + name + "'");
}

void GroupBackend::check_word(const Word& w) const {
  for (auto& [g, e] : w.syls) {
    if (g < 0 || g >= num_gens()) {
      throw std::out_of_range("word uses generator index " + std::to_string(g) +
                              " outside the presentation");
    }
    if (e == 0) {
      throw std::invalid_argument("zero exponent in word");
    }
  }
}

std::optional<Word> GroupBackend::normal_form(const Word& w) const {
  check_word(w);
  return normal_form_impl(w);
}

std::optional<bool> GroupBackend::is_trivial(const Word& w) const {
  auto nf = normal_form(w);
  if (!nf) {
    return std::nullopt;
  }
  return nf->empty();
}

CoordsResult GroupBackend::peripheral_coords(const PeripheralSubgroup&, const Word&) const {
  throw std::logic_error("this backend carries no peripheral subgroups");
}

std::vector<long long> GroupBackend::exponent_sums(const Word& w) const {
  std::vector<long long> out(static_cast<size_t>(num_gens()), 0);
  for (auto& [g, e] : w.syls) {
    out[static_cast<size_t>(g)] += e;
  }
  return out;
}

namespace {

// ---------------------------------------------------------------------------
// Abelian (free abelian of rank n)

class AbelianBackend : public GroupBackend {
 public:
  explicit AbelianBackend(Presentation p)
      : GroupBackend(std::move(p), Family::abelian) {}

  std::optional<Word> normal_form_impl(const Word& w) const override {
    auto v = exponent_sums(w);
    Word out;
    for (int g = 0; g < num_gens(); ++g) {
      out.push_syllable(g, v[static_cast<size_t>(g)]);
    }
    return out;
  }

  CoordsResult peripheral_coords(const PeripheralSubgroup& p, const Word& w) const override {
    return solve_in_lattice(exponent_sums(p.mu), exponent_sums(p.lambda), exponent_sums(w));
  }

  std::optional<long long> ab_z(const Word& w) const override {
    if (num_gens() == 1) {
      return exponent_sums(w)[0];
    }
    return std::nullopt;
  }

  // Solves v = a*m + b*l over the integers; the basis is known to be
  // independent (verified when the peripheral was attached).
  static CoordsResult solve_in_lattice(const std::vector<long long>& m,
                                       const std::vector<long long>& l,
                                       const std::vector<long long>& v) {
    const size_t n = m.size();
    long long det = 0;
    size_t ri = 0, rj = 0;
    for (size_t i = 0; i < n && det == 0; ++i) {
      for (size_t j = i + 1; j < n && det == 0; ++j) {
        const long long d = m[i] * l[j] - m[j] * l[i];
        if (d != 0) {
          det = d;
          ri = i;
          rj = j;
        }
      }
    }
    if (det == 0) {
      throw InvariantViolation("peripheral basis not independent");
    }
    const long long na = v[ri] * l[rj] - v[rj] * l[ri];
    const long long nb = m[ri] * v[rj] - m[rj] * v[ri];
    if (na % det != 0 || nb % det != 0) {
      return CoordsResult::non_member();
    }
    const long long a = na / det, b = nb / det;
    for (size_t i = 0; i < n; ++i) {
      if (a * m[i] + b * l[i] != v[i]) {
        return CoordsResult::non_member();
      }
    }
    return CoordsResult::member(a, b);
  }
};

// ---------------------------------------------------------------------------
// Free groups

class FreeBackend : public GroupBackend {
 public:
  explicit FreeBackend(Presentation p)
      : GroupBackend(std::move(p), Family::free_group) {}

  std::optional<Word> normal_form_impl(const Word& w) const override {
    Word out;
    for (auto& [g, e] : w.syls) {
      out.push_syllable(g, e);
    }
    return out;
  }

  std::optional<long long> ab_z(const Word& w) const override {
    if (num_gens() == 1) {
      return exponent_sums(w)[0];
    }
    return std::nullopt;
  }
};

// ---------------------------------------------------------------------------
// Klein bottle group <x, y | x y x^-1 = y^-1>, normal form x^a y^b.
// Conjugation by x (or x^-1) inverts y, so y^b x^e = x^e y^{b (-1)^e}.

class KleinBackend : public GroupBackend {
 public:
  KleinBackend(Presentation p, int x_idx, int y_idx)
      : GroupBackend(std::move(p), Family::klein_bottle), data_{x_idx, y_idx} {}

  std::pair<long long, long long> coords_of(const Word& w) const {
    long long a = 0, b = 0;
    for (auto& [g, e] : w.syls) {
      if (g == data_.x_idx) {
        if (e % 2 != 0) {
          b = -b;
        }
        a += e;
      } else {
        b += e;
      }
    }
    return {a, b};
  }

  Word word_of(long long a, long long b) const {
    Word out;
    out.push_syllable(data_.x_idx, a);
    out.push_syllable(data_.y_idx, b);
    return out;
  }

  std::optional<Word> normal_form_impl(const Word& w) const override {
    auto [a, b] = coords_of(w);
    return word_of(a, b);
  }

  CoordsResult peripheral_coords(const PeripheralSubgroup& p, const Word& w) const override {
    // Every Z^2 subgroup lies in the index-two subgroup H = <x^2, y> (any
    // element with odd x-exponent inverts y under conjugation, so its
    // centraliser is cyclic).  H is free abelian with coordinates
    // x^{2m} y^n -> (m, n); solve the 2x2 system there.
    auto h_coords = [&](const Word& u) -> std::optional<std::array<long long, 2>> {
      auto [a, b] = coords_of(u);
      if (a % 2 != 0) {
        return std::nullopt;
      }
      return std::array<long long, 2>{a / 2, b};
    };
    auto hm = h_coords(p.mu), hl = h_coords(p.lambda), hv = h_coords(w);
    if (!hm || !hl) {
      throw InvariantViolation("Klein peripheral basis outside <x^2, y>");
    }
    if (!hv) {
      return CoordsResult::non_member();
    }
    return AbelianBackend::solve_in_lattice({(*hm)[0], (*hm)[1]}, {(*hl)[0], (*hl)[1]},
                                            {(*hv)[0], (*hv)[1]});
  }

  std::optional<long long> ab_z(const Word& w) const override {
    long long a = 0;
    for (auto& [g, e] : w.syls) {
      if (g == data_.x_idx) {
        a += e;
      }
    }
    return a;
  }

  const KleinData& data() const { return data_; }

 private:
  KleinData data_;
};

// ---------------------------------------------------------------------------
// Torus-knot groups <u, v | u^p = v^q>.  The centre is <z>, z = u^p = v^q,
// and G/<z> = Z/p * Z/q; elements carry the amalgamated normal form
// z^k s_1 s_2 ... s_m with alternating syllables s_i in {u^a : 0<a<p} or
// {v^b : 0<b<q}.

class TorusKnotBackend : public GroupBackend {
 public:
  struct Elem {
    long long k = 0;
    std::vector<std::pair<char, int>> syls;  // ('u', e) or ('v', e)
    bool operator==(const Elem& o) const { return k == o.k && syls == o.syls; }
  };

  TorusKnotBackend(Presentation p, int u_idx, int v_idx, int pp, int qq)
      : GroupBackend(std::move(p), Family::torus_knot) {
    data_.p = pp;
    data_.q = qq;
    u_idx_ = u_idx;
    v_idx_ = v_idx;
    data_.u = Word{{{u_idx, 1}}};
    data_.v = Word{{{v_idx, 1}}};
    data_.z = Word{{{u_idx, pp}}};
    // mu = u^a v^b with a q + b p = 1 and 0 <= a < p; lambda = z mu^{-pq}.
    long long a = 0, b = 0;
    ext_gcd(qq, pp, a, b);  // a*q + b*p = 1
    while (a < 0) {
      a += pp;
      b -= qq;
    }
    while (a >= pp) {
      a -= pp;
      b += qq;
    }
    Word mu;
    mu.push_syllable(u_idx, a);
    mu.push_syllable(v_idx, b);
    data_.mu = *normal_form_impl(mu);
    data_.lambda = *normal_form_impl(concat(data_.z, power(data_.mu, -(long long)pp * qq)));
  }

  Elem elem_of(const Word& w) const {
    Elem e;
    for (auto& [g, exp] : w.syls) {
      push_syl(e, g == u_idx_ ? 'u' : 'v', exp);
    }
    return e;
  }

  Word word_of(const Elem& e) const {
    Word out;
    if (e.syls.empty()) {
      out.push_syllable(u_idx_, e.k * data_.p);
      return out;
    }
    auto [ch0, e0] = e.syls[0];
    if (ch0 == 'u') {
      out.push_syllable(u_idx_, e.k * data_.p + e0);
    } else {
      out.push_syllable(v_idx_, e.k * data_.q + e0);
    }
    for (size_t i = 1; i < e.syls.size(); ++i) {
      out.push_syllable(e.syls[i].first == 'u' ? u_idx_ : v_idx_, e.syls[i].second);
    }
    return out;
  }

  std::optional<Word> normal_form_impl(const Word& w) const override {
    return word_of(elem_of(w));
  }

  CoordsResult peripheral_coords(const PeripheralSubgroup& p, const Word& w) const override {
    auto can = canonical_coords(w);
    if (!can) {
      return CoordsResult::non_member();
    }
    if (p.mu == data_.mu && p.lambda == data_.lambda) {
      return CoordsResult::member((*can)[0], (*can)[1]);
    }
    auto cm = canonical_coords(p.mu), cl = canonical_coords(p.lambda);
    if (!cm || !cl) {
      throw InvariantViolation("peripheral basis outside the canonical torus");
    }
    return AbelianBackend::solve_in_lattice({(*cm)[0], (*cm)[1]}, {(*cl)[0], (*cl)[1]},
                                            {(*can)[0], (*can)[1]});
  }

  std::optional<long long> ab_z(const Word& w) const override {
    // H_1 = Z via u -> q, v -> p.
    long long s = 0;
    for (auto& [g, e] : w.syls) {
      s += e * (g == u_idx_ ? data_.q : data_.p);
    }
    return s;
  }

  const TorusKnotData& data() const { return data_; }

 private:
  // Coordinates in the canonical peripheral basis (mu, lambda), or nullopt if
  // w is not in <mu, z>.  The image of mu in Z/p * Z/q is cyclically reduced
  // with two syllables, so mu^m has exactly 2|m| syllables; the candidate
  // exponent is read off and verified exactly.
  std::optional<std::array<long long, 2>> canonical_coords(const Word& w) const {
    const Elem e = elem_of(w);
    long long m = 0;
    if (!e.syls.empty()) {
      if (e.syls.size() % 2 != 0) {
        return std::nullopt;
      }
      const long long half = static_cast<long long>(e.syls.size()) / 2;
      for (long long cand : {half, -half}) {
        const Elem mu_pow = elem_of(power(data_.mu, cand));
        if (mu_pow.syls == e.syls) {
          m = cand;
          const long long k = e.k - mu_pow.k;
          // mu^m z^k = mu^{m + pq k} lambda^k
          return std::array<long long, 2>{m + (long long)data_.p * data_.q * k, k};
        }
      }
      return std::nullopt;
    }
    // pure central element z^k
    return std::array<long long, 2>{(long long)data_.p * data_.q * e.k, e.k};
  }

  void push_syl(Elem& e, char ch, long long exp) const {
    if (exp == 0) {
      return;
    }
    const long long P = ch == 'u' ? data_.p : data_.q;
    if (!e.syls.empty() && e.syls.back().first == ch) {
      exp += e.syls.back().second;
      e.syls.pop_back();
    }
    const long long m = ((exp % P) + P) % P;
    e.k += (exp - m) / P;
    if (m != 0) {
      e.syls.emplace_back(ch, static_cast<int>(m));
    }
  }

  static void ext_gcd(long long x, long long y, long long& a, long long& b) {
    if (y == 0) {
      a = 1;
      b = 0;
      return;
    }
    long long a1 = 0, b1 = 0;
    ext_gcd(y, x % y, a1, b1);
    a = b1;
    b = a1 - (x / y) * b1;
  }

  TorusKnotData data_;
  int u_idx_, v_idx_;
};

// ---------------------------------------------------------------------------
// Finite groups via coset enumeration over the trivial subgroup (HLT with
// coincidence handling), giving the regular representation and BFS normal
// forms.

class ToddCoxeter {
 public:
  ToddCoxeter(int ngens, const std::vector<Word>& relators, int cap)
      : ngens_(ngens), cap_(cap) {
    for (auto& r : relators) {
      std::vector<int> ls;
      for (auto [g, e] : letters(r)) {
        ls.push_back(e > 0 ? 2 * g : 2 * g + 1);
      }
      if (!ls.empty()) {
        rels_.push_back(std::move(ls));
      }
    }
    new_coset();
  }

  // Runs to completion; throws ResourceLimit if the cap is hit.
  void run() {
    for (size_t c = 0; c < table_.size(); ++c) {
      if (rep(static_cast<int>(c)) != static_cast<int>(c)) {
        continue;
      }
      for (auto& r : rels_) {
        scan_and_fill(static_cast<int>(c), r);
        if (rep(static_cast<int>(c)) != static_cast<int>(c)) {
          break;
        }
      }
      if (rep(static_cast<int>(c)) != static_cast<int>(c)) {
        continue;
      }
      for (int l = 0; l < 2 * ngens_; ++l) {
        if (entry(static_cast<int>(c), l) < 0) {
          define(static_cast<int>(c), l);
        }
      }
    }
    compress();
  }

  int order() const { return static_cast<int>(final_table_.size()); }
  int trace(int coset, const std::vector<int>& ls) const {
    for (int l : ls) {
      coset = final_table_[static_cast<size_t>(coset)][static_cast<size_t>(l)];
    }
    return coset;
  }
  int apply(int coset, int gen, int sign) const {
    return final_table_[static_cast<size_t>(coset)]
                       [static_cast<size_t>(sign > 0 ? 2 * gen : 2 * gen + 1)];
  }
  const std::vector<std::vector<int>>& rep_letters() const { return rep_letters_; }

 private:
  static int inv_letter(int l) { return l ^ 1; }

  int new_coset() {
    if (static_cast<int>(table_.size()) >= cap_) {
      throw ResourceLimit("coset enumeration exceeded cap of " + std::to_string(cap_));
    }
    table_.emplace_back(static_cast<size_t>(2 * ngens_), -1);
    parent_.push_back(static_cast<int>(table_.size()) - 1);
    return static_cast<int>(table_.size()) - 1;
  }

  int rep(int c) {
    while (parent_[static_cast<size_t>(c)] != c) {
      parent_[static_cast<size_t>(c)] = parent_[static_cast<size_t>(parent_[static_cast<size_t>(c)])];
      c = parent_[static_cast<size_t>(c)];
    }
    return c;
  }

  int entry(int c, int l) const { return table_[static_cast<size_t>(c)][static_cast<size_t>(l)]; }
  void set_entry(int c, int l, int d) { table_[static_cast<size_t>(c)][static_cast<size_t>(l)] = d; }

  void define(int c, int l) {
    const int n = new_coset();
    set_entry(c, l, n);
    set_entry(n, inv_letter(l), c);
  }

  void merge(int a, int b, std::deque<int>& q) {
    a = rep(a);
    b = rep(b);
    if (a == b) {
      return;
    }
    const int lo = std::min(a, b), hi = std::max(a, b);
    parent_[static_cast<size_t>(hi)] = lo;
    q.push_back(hi);
  }

  void coincidence(int a, int b) {
    std::deque<int> q;
    merge(a, b, q);
    while (!q.empty()) {
      const int e = q.front();
      q.pop_front();
      for (int l = 0; l < 2 * ngens_; ++l) {
        const int d = entry(e, l);
        if (d < 0) {
          continue;
        }
        set_entry(d, inv_letter(l), -1);
        const int mu = rep(e), nu = rep(d);
        if (entry(mu, l) >= 0) {
          merge(nu, entry(mu, l), q);
        } else if (entry(nu, inv_letter(l)) >= 0) {
          merge(mu, entry(nu, inv_letter(l)), q);
        } else {
          set_entry(mu, l, nu);
          set_entry(nu, inv_letter(l), mu);
        }
      }
    }
  }

  void scan_and_fill(int c, const std::vector<int>& w) {
    int f = c, i = 0;
    int b = c, j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && entry(f, w[static_cast<size_t>(i)]) >= 0) {
        f = entry(f, w[static_cast<size_t>(i)]);
        ++i;
      }
      if (i > j) {
        if (f != b) {
          coincidence(f, b);
        }
        return;
      }
      while (j >= i && entry(b, inv_letter(w[static_cast<size_t>(j)])) >= 0) {
        b = entry(b, inv_letter(w[static_cast<size_t>(j)]));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (j == i) {
        set_entry(f, w[static_cast<size_t>(i)], b);
        set_entry(b, inv_letter(w[static_cast<size_t>(i)]), f);
        return;
      }
      define(f, w[static_cast<size_t>(i)]);
    }
  }

  void compress() {
    std::vector<int> newid(table_.size(), -1);
    int n = 0;
    for (size_t c = 0; c < table_.size(); ++c) {
      if (rep(static_cast<int>(c)) == static_cast<int>(c)) {
        newid[c] = n++;
      }
    }
    final_table_.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(2 * ngens_), -1));
    for (size_t c = 0; c < table_.size(); ++c) {
      if (newid[c] < 0) {
        continue;
      }
      for (int l = 0; l < 2 * ngens_; ++l) {
        const int d = entry(static_cast<int>(c), l);
        if (d < 0) {
          throw InvariantViolation("incomplete coset table after enumeration");
        }
        final_table_[static_cast<size_t>(newid[c])][static_cast<size_t>(l)] =
            newid[static_cast<size_t>(rep(d))];
      }
    }
    // BFS representative words from the identity coset, letters in a fixed
    // order so normal forms are reproducible.
    rep_letters_.assign(static_cast<size_t>(n), {});
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::deque<int> bfs{0};
    seen[0] = true;
    while (!bfs.empty()) {
      const int c = bfs.front();
      bfs.pop_front();
      for (int l = 0; l < 2 * ngens_; ++l) {
        const int d = final_table_[static_cast<size_t>(c)][static_cast<size_t>(l)];
        if (!seen[static_cast<size_t>(d)]) {
          seen[static_cast<size_t>(d)] = true;
          rep_letters_[static_cast<size_t>(d)] = rep_letters_[static_cast<size_t>(c)];
          rep_letters_[static_cast<size_t>(d)].push_back(l);
          bfs.push_back(d);
        }
      }
    }
    table_.clear();
    parent_.clear();
  }

  int ngens_;
  int cap_;
  std::vector<std::vector<int>> rels_;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> final_table_;
  std::vector<std::vector<int>> rep_letters_;
};

class FiniteTableBackend : public GroupBackend {
 public:
  FiniteTableBackend(Presentation p, int cap)
      : GroupBackend(std::move(p), Family::finite_table),
        tc_(num_gens(), pres_.relators, cap) {
    tc_.run();
  }

  int order() const { return tc_.order(); }

  std::optional<Word> normal_form_impl(const Word& w) const override {
    int c = 0;
    for (auto [g, e] : letters(w)) {
      c = tc_.apply(c, g, e);
    }
    Word out;
    for (int l : tc_.rep_letters()[static_cast<size_t>(c)]) {
      out.push_syllable(l / 2, l % 2 == 0 ? 1 : -1);
    }
    return out;
  }

 private:
  ToddCoxeter tc_;
};

// ---------------------------------------------------------------------------
// Family detection

Word cyclic_reduce_letters(const Word& w) {
  auto ls = letters(w);
  while (ls.size() >= 2 && ls.front().first == ls.back().first &&
         ls.front().second == -ls.back().second) {
    ls.erase(ls.begin());
    ls.pop_back();
  }
  Word out;
  for (auto [g, e] : ls) {
    out.push_syllable(g, e);
  }
  return out;
}

struct PatternInfo {
  bool is_commutator = false;
  bool is_klein = false;
  int klein_x = -1, klein_y = -1;
  int gen_a = -1, gen_b = -1;
};

PatternInfo classify_length4(const Word& r) {
  PatternInfo info;
  const auto ls = letters(r);
  if (ls.size() != 4) {
    return info;
  }
  if (ls[0].first != ls[2].first || ls[1].first != ls[3].first ||
      ls[0].first == ls[1].first) {
    return info;
  }
  const int a = ls[0].first, b = ls[1].first;
  const int sum_a = ls[0].second + ls[2].second;
  const int sum_b = ls[1].second + ls[3].second;
  info.gen_a = a;
  info.gen_b = b;
  if (sum_a == 0 && sum_b == 0) {
    info.is_commutator = true;
  } else if (sum_a == 0 && (sum_b == 2 || sum_b == -2)) {
    info.is_klein = true;
    info.klein_x = a;
    info.klein_y = b;
  } else if (sum_b == 0 && (sum_a == 2 || sum_a == -2)) {
    info.is_klein = true;
    info.klein_x = b;
    info.klein_y = a;
  }
  return info;
}

void verify_and_attach(GroupBackend& g, const std::vector<PeripheralDecl>& decls,
                       std::vector<PeripheralSubgroup>& out, int bound) {
  for (auto& d : decls) {
    auto mu = g.normal_form(d.mu);
    auto lam = g.normal_form(d.lambda);
    if (!mu || !lam) {
      throw UnknownValue("peripheral basis not resolvable");
    }
    if (mu->empty() || lam->empty()) {
      throw InvariantViolation("peripheral '" + d.name + "': basis element is trivial");
    }
    // commutation
    auto comm = g.normal_form(
        concat(concat(*mu, *lam), concat(inverse(*mu), inverse(*lam))));
    if (!comm || !comm->empty()) {
      throw InvariantViolation("peripheral '" + d.name + "': basis does not commute");
    }
    // no relation mu^a lambda^b = 1 for small nonzero (a, b)
    for (int a = -bound; a <= bound; ++a) {
      for (int b = -bound; b <= bound; ++b) {
        if (a == 0 && b == 0) {
          continue;
        }
        auto w = g.normal_form(concat(power(*mu, a), power(*lam, b)));
        if (w && w->empty()) {
          throw InvariantViolation("peripheral '" + d.name + "': relation mu^" +
                                   std::to_string(a) + " lambda^" + std::to_string(b) +
                                   " = 1");
        }
      }
    }
    out.push_back(PeripheralSubgroup{d.name, *mu, *lam});
  }
}

template <typename BackendT, typename... Args>
std::shared_ptr<const GroupBackend> finish(const Presentation& p, const BackendOptions& opts,
                                           Args&&... args) {
  auto g = std::make_shared<BackendT>(p, std::forward<Args>(args)...);
  std::vector<PeripheralDecl> decls = p.peripherals;
  if (decls.empty() && opts.auto_peripheral) {
    if constexpr (std::is_same_v<BackendT, KleinBackend>) {
      const auto& kd = g->data();
      Word mu;
      mu.push_syllable(kd.x_idx, 2);
      Word lam;
      lam.push_syllable(kd.y_idx, 1);
      decls.push_back(PeripheralDecl{"T", mu, lam});
    } else if constexpr (std::is_same_v<BackendT, TorusKnotBackend>) {
      decls.push_back(PeripheralDecl{"T", g->data().mu, g->data().lambda});
    }
  }
  std::vector<PeripheralSubgroup> ps;
  verify_and_attach(*g, decls, ps, opts.peripheral_check_bound);
  g->install_peripherals(std::move(ps));
  return g;
}

}  // namespace

std::shared_ptr<const GroupBackend> make_backend(const Presentation& p,
                                                 const BackendOptions& opts) {
  if (p.gens.empty()) {
    throw UnsupportedPresentation("presentation has no generators");
  }
  std::vector<Word> reduced;
  for (auto& r : p.relators) {
    Word w;
    for (auto& [g, e] : r.syls) {
      if (g < 0 || static_cast<size_t>(g) >= p.gens.size()) {
        throw UnsupportedPresentation("relator uses undeclared generator");
      }
      w.push_syllable(g, e);
    }
    if (!w.empty()) {
      reduced.push_back(std::move(w));
    }
  }

  if (reduced.empty()) {
    return finish<FreeBackend>(p, opts);
  }

  if (p.gens.size() == 2 && reduced.size() == 1) {
    const Word r = cyclic_reduce_letters(reduced[0]);
    if (r.syls.size() == 2 && r.syls[0].first != r.syls[1].first) {
      const long long e0 = r.syls[0].second, e1 = r.syls[1].second;
      if (((e0 >= 2 && e1 <= -2) || (e0 <= -2 && e1 >= 2))) {
        const int u = e0 > 0 ? r.syls[0].first : r.syls[1].first;
        const int v = e0 > 0 ? r.syls[1].first : r.syls[0].first;
        const long long pp = e0 > 0 ? e0 : e1;
        const long long qq = e0 > 0 ? -e1 : -e0;
        return finish<TorusKnotBackend>(p, opts, u, v, static_cast<int>(pp),
                                        static_cast<int>(qq));
      }
    }
    const auto info = classify_length4(r);
    if (info.is_commutator) {
      return finish<AbelianBackend>(p, opts);
    }
    if (info.is_klein) {
      return finish<KleinBackend>(p, opts, info.klein_x, info.klein_y);
    }
  }

  // free abelian: every relator a commutator and all pairs covered
  {
    bool all_comm = true;
    std::set<std::pair<int, int>> pairs;
    for (auto& r : reduced) {
      const auto info = classify_length4(cyclic_reduce_letters(r));
      if (!info.is_commutator) {
        all_comm = false;
        break;
      }
      pairs.insert({std::min(info.gen_a, info.gen_b), std::max(info.gen_a, info.gen_b)});
    }
    const size_t need = p.gens.size() * (p.gens.size() - 1) / 2;
    if (all_comm && pairs.size() == need && need > 0) {
      return finish<AbelianBackend>(p, opts);
    }
  }

  return finish<FiniteTableBackend>(p, opts, opts.coset_cap);
}

std::shared_ptr<const GroupBackend> make_z_backend() {
  return make_backend(parse_presentation("gens a;"));
}

std::shared_ptr<const GroupBackend> make_z2_backend() {
  return make_backend(parse_presentation("gens a b; rel a b a^-1 b^-1; peripheral T = a , b;"));
}

std::shared_ptr<const GroupBackend> make_klein_backend() {
  return make_backend(parse_presentation("gens x y; rel x y x^-1 y;"));
}

std::shared_ptr<const GroupBackend> make_torus_knot_backend(int p, int q) {
  return make_backend(parse_presentation("gens u v; rel u^" + std::to_string(p) + " v^-" +
                                         std::to_string(q) + ";"));
}

const TorusKnotData* torus_knot_data(const GroupBackend& g) {
  auto* tk = dynamic_cast<const TorusKnotBackend*>(&g);
  return tk ? &tk->data() : nullptr;
}

const KleinData* klein_data(const GroupBackend& g) {
  auto* kb = dynamic_cast<const KleinBackend*>(&g);
  return kb ? &kb->data() : nullptr;
}

}  // namespace ordlab
