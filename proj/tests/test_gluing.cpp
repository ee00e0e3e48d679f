#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "ordlab/amalgam.hpp"
#include "ordlab/gluing.hpp"

using namespace ordlab;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(ORDLAB_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

GluingGraph load_graph(const std::string& name) {
  return parse_gluing_graph(fixture(name), [](const std::string& f) {
    return make_backend(parse_presentation(fixture(f)));
  });
}

const Mat2 kId{{{1, 0}, {0, 1}}};
const Mat2 kSwap{{{0, 1}, {1, 0}}};

}  // namespace

TEST_CASE("normal families validate their closure tags") {
  auto klein = make_klein_backend();
  auto fam = klein_four_family(klein);
  CHECK(fam.opposite_closed);
  CHECK(fam.conjugate_closed_at_3);
  CHECK(fam.members.size() == 4);

  auto tk = make_torus_knot_backend(2, 3);
  auto tfam = torus_knot_ablex_family(tk);
  CHECK(tfam.conjugate_closed_at_3);

  // dropping a member breaks opposite-closure
  std::vector<OrderOracle> broken{klein_lex_order(klein, true, true),
                                  klein_lex_order(klein, true, false),
                                  klein_lex_order(klein, false, true)};
  CHECK_THROWS_AS(make_normal_family(klein, broken), InvariantViolation);
}

TEST_CASE("Bludov-Glass: identity gluing of two Klein bottles is compatible") {
  auto klein = make_klein_backend();
  auto n1 = klein_four_family(klein);
  auto n2 = klein_four_family(klein);
  auto rep = bludov_glass_check(n1, n2, GluingMap{"T", "T", kId}, 3);
  CHECK(rep.verdict == Compatibility::compatible);
  CHECK(rep.restrictions_1 == 4);
  CHECK(rep.restrictions_2 == 4);
  CHECK_FALSE(rep.interpretation.empty());
}

TEST_CASE("Bludov-Glass: the basis swap is incompatible") {
  auto klein = make_klein_backend();
  auto n1 = klein_four_family(klein);
  auto n2 = klein_four_family(klein);
  auto rep = bludov_glass_check(n1, n2, GluingMap{"T", "T", kSwap}, 3);
  CHECK(rep.verdict == Compatibility::incompatible);
  CHECK_FALSE(rep.reason.empty());
}

TEST_CASE("Bludov-Glass: trefoil lex family against the Klein family at slope 0") {
  auto tk = make_torus_knot_backend(2, 3);
  auto klein = make_klein_backend();
  auto rep = bludov_glass_check(torus_knot_ablex_family(tk), klein_four_family(klein),
                                GluingMap{"T", "T", kId}, 3);
  CHECK(rep.verdict == Compatibility::compatible);
}

TEST_CASE("Bludov-Glass is symmetric under swapping the sides") {
  auto tk = make_torus_knot_backend(2, 3);
  auto klein = make_klein_backend();
  auto n1 = torus_knot_ablex_family(tk);
  auto n2 = klein_four_family(klein);
  for (const Mat2& m : {kId, kSwap}) {
    auto fwd = bludov_glass_check(n1, n2, GluingMap{"T", "T", m}, 3);
    auto bwd = bludov_glass_check(n2, n1, GluingMap{"T", "T", m.inverse_unimodular()}, 3);
    CHECK(fwd.verdict == bwd.verdict);
  }
}

TEST_CASE("restriction surjectivity: the Klein family restricts onto the four line orders") {
  // compare through the public check against the Z^2 family of the four
  // orders realising the longitude line, at every radius up to 4
  auto klein = make_klein_backend();
  auto z2 = make_z2_backend();
  // peripheral points mu^a lambda^b on the longitude line have a = 0; in the
  // exponent plane of Z^2 that line is vertical
  auto z2_family = make_normal_family(
      z2, classify_line_orders(LatticeLine{Slope::infinity(), +1}, z2));
  auto n1 = klein_four_family(klein);
  for (int r = 1; r <= 4; ++r) {
    auto rep = bludov_glass_check(n1, z2_family, GluingMap{"T", "T", kId}, r);
    CHECK(rep.verdict == Compatibility::compatible);
    CHECK(rep.restrictions_1 == 4);
  }
}

TEST_CASE("irrational identified slopes work end-to-end with two-member families") {
  auto z2 = make_z2_backend();
  const Slope s2 = Slope::quadratic(0, 1, 2, 2);  // exponent-plane line of sqrt-2 type
  auto fam1 = make_normal_family(z2, classify_line_orders(LatticeLine{s2, +1}, z2));
  CHECK(fam1.members.size() == 2);
  auto fam2 = make_normal_family(z2, classify_line_orders(LatticeLine{s2, +1}, z2));
  auto rep = bludov_glass_check(fam1, fam2, GluingMap{"T", "T", kId}, 3);
  CHECK(rep.verdict == Compatibility::compatible);
  CHECK(rep.restrictions_1 == 2);
}

TEST_CASE("gluing graphs parse and reject malformed input") {
  auto graph = load_graph("graph_klein_klein.glue");
  CHECK(graph.vertices.size() == 2);
  CHECK(graph.edges.size() == 1);
  CHECK(graph.edges[0].matrix.det() == 1);

  auto load = [](const std::string&) { return make_klein_backend(); };
  CHECK_THROWS_AS(parse_gluing_graph("vertex A k\nvertex A k\n", load), ParseError);
  CHECK_THROWS_AS(parse_gluing_graph("vertex A k\nedge A.T A.T [[1,0],[0,1]]\n", load),
                  ParseError);
  CHECK_THROWS_AS(
      parse_gluing_graph("vertex A k\nvertex B k\nedge A.T B.T [[2,0],[0,1]]\n", load),
      ParseError);
  CHECK_THROWS_AS(parse_gluing_graph("blah\n", load), ParseError);
}

TEST_CASE("coherence: identity Klein graph passes with the longitude assignment") {
  auto graph = load_graph("graph_klein_klein.glue");
  SlopeAssignment assign{{"A.T", Slope::of_fraction(0, 1)}, {"B.T", Slope::of_fraction(0, 1)}};
  auto rep = coherence_check(graph, assign);
  CHECK(rep.passed);
  REQUIRE(rep.edges.size() == 1);
  CHECK(rep.edges[0].ok);
  for (auto& v : rep.vertices) {
    CHECK(v.witnessed);
  }
}

TEST_CASE("coherence: a transport mismatch names the edge") {
  auto graph = load_graph("graph_klein_klein.glue");
  SlopeAssignment assign{{"A.T", Slope::of_fraction(0, 1)}, {"B.T", Slope::infinity()}};
  auto rep = coherence_check(graph, assign);
  CHECK_FALSE(rep.passed);
  REQUIRE_FALSE(rep.failures.empty());
  CHECK(rep.failures[0].find("edge") != std::string::npos);
}

TEST_CASE("coherence: the swap gluing fails with longitude assignments") {
  auto graph = load_graph("graph_klein_swap.glue");
  SlopeAssignment assign{{"A.T", Slope::of_fraction(0, 1)}, {"B.T", Slope::of_fraction(0, 1)}};
  auto rep = coherence_check(graph, assign);
  CHECK_FALSE(rep.passed);
}

TEST_CASE("coherence: a missing witness names the vertex") {
  auto graph = load_graph("graph_klein_klein.glue");
  // the x^2 direction is not detected on a Klein piece
  SlopeAssignment assign{{"A.T", Slope::infinity()}, {"B.T", Slope::infinity()}};
  auto rep = coherence_check(graph, assign);
  CHECK_FALSE(rep.passed);
  bool vertex_named = false;
  for (auto& f : rep.failures) {
    if (f.find("vertex") != std::string::npos) {
      vertex_named = true;
    }
  }
  CHECK(vertex_named);
}

TEST_CASE("coherence: trefoil against Klein at slope zero passes") {
  auto graph = load_graph("graph_trefoil_klein.glue");
  SlopeAssignment assign{{"M.T", Slope::of_fraction(0, 1)}, {"N.T", Slope::of_fraction(0, 1)}};
  auto rep = coherence_check(graph, assign);
  CHECK(rep.passed);
}

TEST_CASE("amalgams reject a factor equal to the edge group") {
  auto z2 = make_z2_backend();
  AmalgamSpec spec;
  spec.g1 = z2;
  spec.g2 = z2;
  spec.identification = GluingMap{"T", "T", kId};
  try {
    build_amalgam(spec);
    FAIL("expected a rejection");
  } catch (const UnsupportedPresentation& e) {
    CHECK(std::string(e.what()).find("factor equals edge group") != std::string::npos);
  }
}

TEST_CASE("Klein-union-Klein: x1 x2 has unbounded normal forms") {
  auto klein = make_klein_backend();
  AmalgamSpec spec;
  spec.g1 = klein;
  spec.g2 = klein;
  spec.identification = GluingMap{"T", "T", kId};
  spec.certified_radius = 5;
  auto amalgam = build_amalgam(spec);
  CHECK(amalgam->num_gens() == 4);

  Word x1x2;
  x1x2.push_syllable(0, 1);
  x1x2.push_syllable(2, 1);
  long long prev_len = 0;
  for (int k = 1; k <= 4; ++k) {
    auto nf = amalgam->normal_form(power(x1x2, k));
    REQUIRE(nf.has_value());
    CHECK_FALSE(nf->empty());
    CHECK(nf->letter_length() > prev_len);
    prev_len = nf->letter_length();
  }
}

TEST_CASE("amalgam factor embedding within the certified radius") {
  auto klein = make_klein_backend();
  AmalgamSpec spec;
  spec.g1 = klein;
  spec.g2 = klein;
  spec.identification = GluingMap{"T", "T", kId};
  auto amalgam = build_amalgam(spec);
  Ball b3(klein, 3);
  for (size_t i = 0; i < b3.size(); ++i) {
    for (size_t j = 0; j < b3.size(); ++j) {
      // factor-one words keep their generator indices in the amalgam
      auto lhs = amalgam->normal_form(b3.at(i));
      auto rhs = amalgam->normal_form(b3.at(j));
      REQUIRE(lhs.has_value());
      REQUIRE(rhs.has_value());
      CHECK((*lhs == *rhs) == (b3.at(i) == b3.at(j)));
    }
  }
}

TEST_CASE("edge identifications hold in the amalgam") {
  auto klein = make_klein_backend();
  AmalgamSpec spec;
  spec.g1 = klein;
  spec.g2 = klein;
  spec.identification = GluingMap{"T", "T", kId};
  auto amalgam = build_amalgam(spec);
  // x1^2 = x2^2 and y1 = y2 under the identity identification of (x^2, y)
  Word lhs1 = parse_word("x1^2", amalgam->presentation());
  Word rhs1 = parse_word("x2^2", amalgam->presentation());
  CHECK(*amalgam->normal_form(lhs1) == *amalgam->normal_form(rhs1));
  Word lhs2 = parse_word("y1", amalgam->presentation());
  Word rhs2 = parse_word("y2", amalgam->presentation());
  CHECK(*amalgam->normal_form(lhs2) == *amalgam->normal_form(rhs2));
  // and the normal form is idempotent on mixed words
  Word mixed = parse_word("x1 y2 x2 y1^-1", amalgam->presentation());
  auto nf = *amalgam->normal_form(mixed);
  CHECK(*amalgam->normal_form(nf) == nf);
}

TEST_CASE("trefoil-union-Klein: distinct-coset syllables survive") {
  auto tk = make_torus_knot_backend(2, 3);
  auto klein = make_klein_backend();
  AmalgamSpec spec;
  spec.g1 = tk;
  spec.g2 = klein;
  spec.identification = GluingMap{"T", "T", kId};
  auto amalgam = build_amalgam(spec);
  // mu_1 x_2: mu lies in the edge subgroup, x_2 does not; the product
  // converts to a one-syllable factor-two word times the edge part
  Word mu_shift = torus_knot_data(*tk)->mu;  // generator indices 0, 1 survive
  Word w = concat(mu_shift, parse_word("x2", amalgam->presentation()));
  auto nf = amalgam->normal_form(w);
  REQUIRE(nf.has_value());
  CHECK_FALSE(nf->empty());
  // u x2 has syllables in both factors and is not an edge element
  Word w2 = parse_word("u1 x2 u1 x2", amalgam->presentation());
  auto nf2 = amalgam->normal_form(w2);
  REQUIRE(nf2.has_value());
  auto sq = amalgam->mult(*nf2, *nf2);
  REQUIRE(sq.has_value());
  CHECK(sq->letter_length() > nf2->letter_length());
}

TEST_CASE("amalgam balls enumerate and inverses work") {
  auto klein = make_klein_backend();
  AmalgamSpec spec;
  spec.g1 = klein;
  spec.g2 = klein;
  spec.identification = GluingMap{"T", "T", kId};
  auto amalgam = build_amalgam(spec);
  Ball b2(amalgam, 2);
  CHECK(b2.size() > 10);
  for (size_t i = 0; i < b2.size(); ++i) {
    CHECK(amalgam->mult(b2.at(i), *amalgam->inv(b2.at(i)))->empty());
  }
}
