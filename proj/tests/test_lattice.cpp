#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <set>

#include "ordlab/lattice.hpp"
#include "ordlab/snapshot.hpp"

using namespace ordlab;

namespace {

OrderOracle line_order(std::shared_ptr<const GroupBackend> z2, const Slope& s, int which = 0) {
  return classify_line_orders(LatticeLine{s, +1}, z2)[static_cast<size_t>(which)];
}

}  // namespace

TEST_CASE("slope normalisation and printing") {
  CHECK(Slope::of_fraction(2, -4) == Slope::of_fraction(-1, 2));
  CHECK(Slope::of_fraction(-3, 0) == Slope::infinity());
  CHECK(Slope::of_fraction(0, 7).str() == "0/1");
  CHECK(Slope::infinity().str() == "∞");
  CHECK(Slope::quadratic(0, 1, 1, 8) == Slope::quadratic(0, 2, 1, 2));  // sqrt 8 = 2 sqrt 2
  CHECK(Slope::quadratic(0, 2, 2, 2) == Slope::quadratic(0, 1, 1, 2));
  CHECK(Slope::quadratic(1, 1, 2, 2).str() == "(1+√2)/2");
  CHECK(Slope::quadratic(0, 3, 1, 4) == Slope::of_fraction(6, 1));  // sqrt 4 collapses
  CHECK_THROWS(Slope::of_fraction(0, 0));
}

TEST_CASE("slope parsing") {
  CHECK(*parse_slope("0/1") == Slope::of_fraction(0, 1));
  CHECK(*parse_slope("-2/3") == Slope::of_fraction(-2, 3));
  CHECK(*parse_slope("inf") == Slope::infinity());
  CHECK(*parse_slope("l") == Slope::of_fraction(0, 1));
  CHECK(*parse_slope("m") == Slope::infinity());
  CHECK(*parse_slope("5") == Slope::of_fraction(5, 1));
  CHECK(*parse_slope("sqrt(2)") == Slope::quadratic(0, 1, 1, 2));
  CHECK(*parse_slope("(1+1*sqrt(2))/1") == Slope::quadratic(1, 1, 1, 2));
  CHECK(*parse_slope("(-1+2*sqrt(3))/5") == Slope::quadratic(-1, 2, 5, 3));
  CHECK_FALSE(parse_slope("0/0").has_value());
  CHECK_FALSE(parse_slope("bogus").has_value());
}

TEST_CASE("quadratic sign analysis is exact") {
  CHECK(quad_sign(0, 0, 2) == 0);
  CHECK(quad_sign(3, -2, 2) == 1);   // 3 > 2 sqrt 2 = 2.828
  CHECK(quad_sign(-3, 2, 2) == -1);
  CHECK(quad_sign(2, -2, 2) == -1);  // 2 < 2 sqrt 2
  CHECK(quad_sign(-7, 5, 2) == 1);   // 5 sqrt 2 = 7.07 > 7
  CHECK(slope_cmp_affine(Slope::of_fraction(7, 5), Slope::quadratic(0, 1, 1, 2)) < 0);
  CHECK(slope_cmp_affine(Slope::of_fraction(3, 2), Slope::quadratic(0, 1, 1, 2)) > 0);
  CHECK(slope_cmp_affine(Slope::quadratic(0, 1, 1, 2), Slope::infinity()) < 0);
}

TEST_CASE("slope transport under gluing matrices") {
  const Mat2 id{{{1, 0}, {0, 1}}};
  const Mat2 swp{{{0, 1}, {1, 0}}};
  const Mat2 shear{{{1, 1}, {0, 1}}};
  CHECK(transport_slope(id, Slope::of_fraction(3, 7)) == Slope::of_fraction(3, 7));
  CHECK(transport_slope(swp, Slope::of_fraction(0, 1)) == Slope::infinity());
  CHECK(transport_slope(shear, Slope::quadratic(0, 1, 1, 2)) ==
        Slope::quadratic(1, 1, 1, 2));  // sqrt 2 -> sqrt 2 + 1

  // projective action laws: composition and inversion, on a slope sample
  const std::vector<Slope> sample{Slope::of_fraction(0, 1), Slope::of_fraction(-5, 3),
                                  Slope::infinity(), Slope::quadratic(1, -2, 3, 5)};
  const std::vector<Mat2> mats{swp, shear, Mat2{{{2, 1}, {1, 1}}},
                               Mat2{{{1, -2}, {0, -1}}}};
  for (auto& m : mats) {
    CHECK((m.det() == 1 || m.det() == -1));
    for (auto& s : sample) {
      CHECK(transport_slope(m.inverse_unimodular(), transport_slope(m, s)) == s);
      for (auto& m2 : mats) {
        const Mat2 comp{{{m.m[0][0] * m2.m[0][0] + m.m[0][1] * m2.m[1][0],
                          m.m[0][0] * m2.m[0][1] + m.m[0][1] * m2.m[1][1]},
                         {m.m[1][0] * m2.m[0][0] + m.m[1][1] * m2.m[1][0],
                          m.m[1][0] * m2.m[0][1] + m.m[1][1] * m2.m[1][1]}}};
        CHECK(transport_slope(comp, s) == transport_slope(m, transport_slope(m2, s)));
      }
    }
  }
}

TEST_CASE("line_of_cone on the x-axis order: snapshot interval vs oracle exactness") {
  auto z2 = make_z2_backend();
  auto o = line_order(z2, Slope::of_fraction(0, 1));

  // snapshot route: the interval contains the true slope
  auto interval = line_of_cone(snapshot(o, 4));
  CHECK(interval.contains(Slope::of_fraction(0, 1)));

  // oracle route: rival witnessed lines are refuted, leaving the exact slope
  auto table = table_of_oracle(o, 4);
  auto queries = oracle_queries(o);
  auto est = line_of_table(table, &queries, 18);
  CHECK(est.exact);
  CHECK(est.lo == Slope::of_fraction(0, 1));
}

TEST_CASE("snapshot intervals narrow with the radius") {
  auto z2 = make_z2_backend();
  auto o = line_order(z2, Slope::of_fraction(0, 1));
  auto i2 = line_of_cone(snapshot(o, 2));
  auto i3 = line_of_cone(snapshot(o, 3));
  auto i4 = line_of_cone(snapshot(o, 4));
  CHECK(i2.contains(i3.lo));
  CHECK(i2.contains(i3.hi));
  CHECK(i3.contains(i4.lo));
  CHECK(i3.contains(i4.hi));
}

TEST_CASE("sqrt-2 order at window 5: interval with rational endpoints around sqrt 2") {
  auto z2 = make_z2_backend();
  const Slope s2 = Slope::quadratic(0, 1, 1, 2);
  auto o = line_order(z2, s2);
  auto table = table_of_oracle(o, 5);
  auto queries = oracle_queries(o);
  auto est = line_of_table(table, &queries, 15);
  CHECK_FALSE(est.exact);
  CHECK(est.contains(s2));
  CHECK(est.lo.rational);
  CHECK(est.hi.rational);
  // best rational approximations with |coordinates| <= 5: 4/3 < sqrt 2 < 3/2
  CHECK(est.lo == Slope::of_fraction(4, 3));
  CHECK(est.hi == Slope::of_fraction(3, 2));
}

TEST_CASE("inconsistent signs have no separating line") {
  LatticeSignTable t;
  t.radius = 2;
  t.pts = {{1, 0, Sign::plus},   {-2, 1, Sign::plus},  {1, 1, Sign::minus},
           {-1, 0, Sign::minus}, {2, -1, Sign::minus}, {-1, -1, Sign::plus}};
  CHECK_THROWS_AS(line_of_table(t), NoSeparatingLine);
}

TEST_CASE("classify_line_orders: 4 rational / 2 irrational, realising the line") {
  auto z2 = make_z2_backend();
  for (auto s : {Slope::of_fraction(0, 1), Slope::infinity(), Slope::of_fraction(1, 2),
                 Slope::of_fraction(-3, 4)}) {
    auto orders = classify_line_orders(LatticeLine{s, +1}, z2);
    REQUIRE(orders.size() == 4);
    // the tie pair differs only on L_0, so distinctness needs the ball to
    // reach the primitive direction
    const int r = std::max<long long>(2, std::llabs(s.p) + std::llabs(s.q));
    Ball ball(z2, r);
    std::set<std::string> distinct;
    for (auto& o : orders) {
      distinct.insert(snapshot(o, ball).serialise());
      auto table = table_of_oracle(o, 6);
      auto queries = oracle_queries(o);
      auto est = line_of_table(table, &queries, 18);
      CHECK(est.exact);
      CHECK(est.lo == s);
    }
    CHECK(distinct.size() == 4);
  }
  for (auto s : {Slope::quadratic(0, 1, 1, 2), Slope::quadratic(0, 1, 1, 3)}) {
    auto orders = classify_line_orders(LatticeLine{s, +1}, z2);
    REQUIRE(orders.size() == 2);
    Ball b2(z2, 2);
    std::set<std::string> distinct;
    for (auto& o : orders) {
      distinct.insert(snapshot(o, b2).serialise());
      auto est = line_of_table(table_of_oracle(o, 5));
      CHECK(est.contains(s));
    }
    CHECK(distinct.size() == 2);
  }
}

TEST_CASE("round trip: slopes with small coordinates are recovered exactly") {
  auto z2 = make_z2_backend();
  for (long long p = -5; p <= 5; ++p) {
    for (long long q = 0; q <= 5; ++q) {
      if ((p == 0 && q == 0) || std::gcd(p < 0 ? -p : p, q) != 1) {
        continue;
      }
      const Slope s = Slope::of_fraction(p, q);
      auto orders = classify_line_orders(LatticeLine{s, +1}, z2);
      for (int which : {0, 2}) {
        auto table = table_of_oracle(orders[static_cast<size_t>(which)], 6);
        auto queries = oracle_queries(orders[static_cast<size_t>(which)]);
        auto est = line_of_table(table, &queries, 18);
        CHECK(est.exact);
        CHECK(est.lo == s);
      }
    }
  }
}

TEST_CASE("the two orders agreeing off a rational line differ exactly on it") {
  auto z2 = make_z2_backend();
  auto orders = classify_line_orders(LatticeLine{Slope::of_fraction(0, 1), +1}, z2);
  Ball b3(z2, 3);
  // orders[0] is o, orders[2] is o*: P(o*) \ L_0 = P(o) \ L_0
  for (size_t i = 1; i < b3.size(); ++i) {
    auto [x, y] = z2_coords(*z2, b3.at(i));
    (void)x;
    const bool on_axis = (y == 0);
    const bool differ = *orders[0].sign_nf(b3.at(i)) != *orders[2].sign_nf(b3.at(i));
    CHECK(differ == on_axis);
  }
}

TEST_CASE("cofinal elements are the off-line ball points") {
  auto z2 = make_z2_backend();
  SUBCASE("slope 0/1, r = 1") {
    Ball b1(z2, 1);
    auto cof = cofinal_elements(LatticeLine{Slope::of_fraction(0, 1), +1}, b1);
    REQUIRE(cof.size() == 2);
    for (auto& v : cof) {
      auto [x, y] = z2_coords(*z2, v);
      CHECK(x == 0);
      CHECK((y == 1 || y == -1));
    }
  }
  SUBCASE("irrational slope misses the lattice: all 12 nonzero points of B_2") {
    Ball b2(z2, 2);
    auto cof = cofinal_elements(LatticeLine{Slope::quadratic(0, 1, 1, 2), +1}, b2);
    CHECK(cof.size() == 12);
  }
  SUBCASE("slope 1/2, r = 2: independent membership count") {
    Ball b2(z2, 2);
    const LatticeLine line{Slope::of_fraction(1, 2), +1};
    auto cof = cofinal_elements(line, b2);
    size_t expect = 0;
    for (size_t i = 0; i < b2.size(); ++i) {
      auto [x, y] = z2_coords(*z2, b2.at(i));
      if (x * 1 != y * 2) {  // off the line through (2, 1)
        ++expect;
      }
    }
    CHECK(cof.size() == expect);
    CHECK(cof.size() == 12);  // B_2 has 13 points; only the origin is on the line
  }
}

TEST_CASE("cofinality coherence: off-line elements dominate the on-line subgroup") {
  auto z2 = make_z2_backend();
  const LatticeLine line{Slope::of_fraction(0, 1), +1};
  auto orders = classify_line_orders(line, z2);
  Ball b6(z2, 6);
  for (auto& o : orders) {
    for (auto& v : cofinal_elements(line, b6)) {
      Word vp = *o.sign_nf(v) == Sign::plus ? v : inverse(v);
      for (int k = -6; k <= 6; ++k) {
        Word axis;
        axis.push_syllable(0, k);
        if (axis.empty()) {
          continue;
        }
        CHECK(*order_cmp(o, axis, vp) < 0);
      }
    }
  }
}
