#include "doctest.h"

#include "support.hpp"

#include <algorithm>
#include <set>

using namespace bruhat;
using namespace bruhat::a2;
using testing::a2_ball;

namespace {

std::vector<Elt> dominant_up_to(int len) {
  std::vector<Elt> out;
  for (Elt z : ball(len))
    if (is_dominant(z)) out.push_back(z);
  return out;
}

std::vector<Elt> sorted(std::vector<Elt> v) {
  sort_elements(v);
  return v;
}

std::set<Elt> as_set(const std::vector<Elt>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("normal forms") {
  const NormalForm w0 = normal_form(parse("121"));
  CHECK(w0.family == a2::Family::Theta);
  CHECK(w0.g == GElt{});
  CHECK(w0.m == 0);
  CHECK(w0.n == 0);

  const NormalForm x2 = normal_form(parse("12"));
  CHECK(x2.family == a2::Family::X);
  CHECK(x2.k == 2);
  CHECK(length(parse("12")) == 2);
  CHECK(normal_form(parse("e")).family == a2::Family::Id);
  CHECK(parse("") == kId);
  CHECK(parse("3") == parse("0"));
}

TEST_CASE("family lengths and centers") {
  for (Int m = 0; m <= 4; ++m)
    for (Int n = 0; n <= 4; ++n) {
      CHECK(length(theta(m, n)) == 2 * m + 2 * n + 3);
      CHECK(length(theta_s(m, n)) == 2 * m + 2 * n + 4);
      CHECK(length(s0theta_s(m, n)) == 2 * m + 2 * n + 5);
      CHECK(theta(m, n) == Pt{2, 2} + m * lattice::varpi1 + n * lattice::varpi2);
      CHECK(theta_s(m, n) == theta(m, n) + Pt{2, 2});
    }
  for (Int k = 0; k <= 12; ++k) CHECK(length(x(k)) == k);
  CHECK(x(5) == parse("12312"));
}

TEST_CASE("normal form round trip over the ball") {
  for (Elt z : ball(12)) {
    const NormalForm nf = normal_form(z);
    CHECK(apply(nf.g, representative(nf)) == z);
    const Word w = normal_word(z);
    CHECK(static_cast<int>(w.size()) == length(z));
    CHECK(from_word(w) == z);
    CHECK(parse_element(word_string(z)) == z);
    CHECK(up_oriented(z) == (length(z) % 2 == 0));
  }
}

TEST_CASE("parse_element") {
  CHECK(parse_element("theta 1 2") == theta(1, 2));
  CHECK(parse_element("theta-s(0, 1)") == theta_s(0, 1));
  CHECK(parse_element("s0theta-s 1 1") == s0theta_s(1, 1));
  CHECK(parse_element("x 5") == x(5));
  CHECK(parse_element("1213") == parse("1213"));
  CHECK_THROWS(parse_element("theta 1"));
}

TEST_CASE("the group G") {
  const auto& G = group_G();
  CHECK(G.size() == 12);
  CHECK(G[0] == GElt{});
  const GElt sigma{0, true, false}, iota{0, false, true}, delta{1, false, false};
  CHECK(apply(sigma, theta(3, 4)) == theta(4, 3));
  CHECK(apply(iota, parse("12")) == parse("21"));
  CHECK(apply(delta, parse("12")) == parse("23"));
  for (const GElt& g : G) {
    CHECK(apply_inverse(g, apply(g, parse("12313"))) == parse("12313"));
    CHECK(from_word(apply_word(g, parse_word("1231", 3))) == apply(g, parse("1231")));
  }
}

TEST_CASE("G preserves the order") {
  const auto b = ball(7);
  for (const GElt& g : group_G())
    for (Elt u : b)
      for (Elt v : b) REQUIRE(leq_lower(u, v) == leq_lower(apply(g, u), apply(g, v)));
}

TEST_CASE("lower polygons") {
  std::vector<Pt> orbit;
  for (Wf w : kWf) orbit.push_back(apply(w, theta(0, 0)));
  const Polygon h = c_polygon(theta(0, 0));
  CHECK(h == Polygon::hull(orbit));
  CHECK(h.size() == 6);
  CHECK(c_polygon(kId).size() == 1);
  const Elt x4 = x(4);
  CHECK(c_polygon(x4) ==
        Polygon::hull({x4, left_mul(1, x4), left_mul(2, left_mul(1, x4)), left_mul(1, left_mul(2, left_mul(1, x4)))}));
  CHECK_FALSE(h.member(parse("3")));
}

TEST_CASE("lower cardinalities") {
  CHECK(lower_cardinality(theta(1, 1)) == 42);
  CHECK(lower_cardinality(s0theta_s(0, 0)) == 22);
  CHECK(lower_cardinality(x(5)) == 22);
  CHECK(lower_cardinality(x(4)) == 14);
  CHECK(interval_geom(kId, theta(1, 1)).size() == 42);
}

TEST_CASE("lower cardinalities equal oracle counts") {
  const Ball b(testing::a2_spec(), 14);
  auto oracle = [&](Elt y) { return static_cast<Int>(b.downset(testing::index(b, y)).count()); };
  for (Int m = 0; m <= 4; ++m)
    for (Int n = 0; m + n <= 4; ++n)
      for (Elt y : {theta(m, n), theta_s(m, n), s0theta_s(m, n)}) {
        CHECK(lower_cardinality(y) == oracle(y));
        for (const GElt& g : group_G()) CHECK(lower_cardinality(apply(g, y)) == oracle(y));
      }
  for (Int k = 0; k <= 10; ++k) CHECK(lower_cardinality(x(k)) == oracle(x(k)));
}

TEST_CASE("stars") {
  const Elt x = theta(2, 1);
  const Star st = star(x);
  REQUIRE(st.inner.size() == 6);
  CHECK(st.inner[0] == x);
  CHECK(st.inner[1] == reflect(Root::A1, -1, x));
  CHECK(zone_of(st.inner[1]) == Wf::S1);
  CHECK(st.outer.size() == 6);
  CHECK_FALSE(st.interior(x));
  CHECK(st.interior(kId));
  for (Pt u : st.outer) CHECK_FALSE(st.interior(u));

  const Elt s0 = parse("3");
  CHECK(s0 == Pt{-4, -4});
  const Star t = star(s0);
  CHECK((t.t1.member(s0) || t.t2.member(s0)));
  CHECK_FALSE(t.interior(s0));
  CHECK(t.interior(Pt{0, 0}));

  CHECK_THROWS_AS(star(kId), UndefinedStarError);
}

TEST_CASE("geometric order") {
  CHECK(geq_geom(theta(0, 0), theta(0, 0)));
  CHECK_FALSE(geq_geom(theta(0, 0), parse("3")));
  CHECK(geq_geom(theta(0, 0), theta(1, 0)));
  CHECK(geq_geom(kId, parse("3")));
}

TEST_CASE("geometric order equals the oracle order") {
  const Ball& b = a2_ball(8);
  for (std::size_t i = 0; i < b.size(); ++i) {
    const Elt xi = testing::elt(b, i);
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Elt zj = testing::elt(b, j);
      REQUIRE(geq_geom(xi, zj) == b.leq(i, j));
      REQUIRE(leq_lower(xi, zj) == b.leq(i, j));
    }
  }
}

TEST_CASE("geometric intervals") {
  const Elt y = parse("1213");
  for (Elt c : lower_covers(y)) CHECK(interval_geom(c, y) == sorted({c, y}));
  CHECK(interval_geom(theta(0, 0), theta_s(0, 0)) == sorted({theta(0, 0), theta_s(0, 0)}));
  CHECK(interval_geom(parse("3"), parse("121")).empty());
}

TEST_CASE("zones") {
  for (Int m = 0; m < 4; ++m)
    for (Int n = 0; n < 4; ++n) CHECK(zone_of(theta(m, n)) == Wf::Id);
  for (Int k = 1; k < 10; ++k) CHECK(zone_of(x(k)) == Wf::Id);
  CHECK(zone_of(parse("3")) == Wf::W0);
  // Every center lies in exactly one closed zone system member.
  for (Elt z : ball(10)) {
    int hits = 0;
    for (Wf w : kWf) {
      bool in = true;
      for (const auto& h : zone_closure(w)) in = in && h.contains(z);
      hits += in;
      if (in) CHECK(zone_of(z) == w);
    }
    CHECK(hits == 1);
  }
}

TEST_CASE("cone criterion in the dominant zone") {
  std::vector<Elt> zid;
  for (Elt z : ball(11))
    if (zone_of(z) == Wf::Id) zid.push_back(z);
  for (Elt z : zid)
    for (Elt z2 : zid)
      CHECK(leq_lower(z, z2) == (pair_w18(1, z2 - z) >= 0 && pair_w18(2, z2 - z) >= 0));
}

TEST_CASE("adjacent chains are covers") {
  std::vector<Elt> zid;
  for (Elt z : ball(11))
    if (zone_of(z) == Wf::Id) zid.push_back(z);
  for (Elt z : zid)
    for (Elt z2 : zid) {
      const Pt d = z2 - z;
      const bool along = (cross(d, lattice::alpha1) == 0 && d.u > 0) || (cross(d, lattice::alpha2) == 0 && d.v > 0);
      if (!along) continue;
      const auto a = vertices(z), c = vertices(z2);
      bool touch = false;
      for (Pt p : a)
        for (Pt q : c) touch = touch || p == q;
      if (!touch) continue;
      CHECK(leq_lower(z, z2));
      CHECK(length(z2) == length(z) + 1);
    }
}

TEST_CASE("covers from reflections match the oracle") {
  const Ball& b = a2_ball(12);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b.length(i) >= 12) continue;
    const Elt z = testing::elt(b, i);
    CHECK(sorted(lower_covers(z)) == testing::elts(b, b.lower_covers(i)));
    CHECK(sorted(upper_covers(z)) == testing::elts(b, b.upper_covers(i)));
  }
}

TEST_CASE("closed cover formulas") {
  const Int m = 2, n = 3;
  const CoverSets c = covers_closed(theta(m, n));
  CHECK(c.lower_closed);
  CHECK(as_set(c.lower) == std::set<Elt>{left_mul(1, theta(m, n)), left_mul(2, theta(m, n)), theta_s(m - 1, n), theta_s(m, n - 1)});
  CHECK(c.upper.size() == 6);
  const Elt y = theta_s(1, 2);
  std::vector<Elt> want{y};
  for (Elt z : covers_closed(y).lower) want.push_back(left_mul(0, z));
  CHECK(as_set(covers_closed(left_mul(0, y)).lower) == as_set(want));

  for (Elt z : ball(11)) {
    const bool dom = is_dominant(z), s0dom = is_dominant(left_mul(0, z));
    if (!dom && !s0dom && normal_form(z).family != a2::Family::X) continue;
    const CoverSets cs = covers_closed(z);
    CHECK(as_set(cs.lower) == as_set(lower_covers(z)));
    CHECK(as_set(cs.upper) == as_set(upper_covers(z)));
    if (dom) CHECK(cs.lower_closed);
  }
}

TEST_CASE("interval polygons") {
  const Elt x0 = theta(0, 0), y0 = theta(2, 2);
  CHECK(par(x0, y0, Wf::Id) == Polygon::hull({x0, y0, x0 + 2 * lattice::alpha1, x0 + 2 * lattice::alpha2}));
  CHECK(pgn(x0, x0).size() == 1);
  CHECK(interval_type(x0, x0).shape == Shape::Parallelogram);
  CHECK(interval_type(theta_s(1, 0), theta_s(3, 1)).shape == Shape::Parallelogram);
  CHECK(interval_type(theta(0, 0), theta(4, 4)).shape == Shape::Hexagon);
  CHECK(pgn(theta(1, 1), theta(0, 0)).empty());
}

TEST_CASE("zone fibers partition dominant intervals") {
  const Ball& b = a2_ball(12);
  const auto dom = dominant_up_to(12);
  for (Elt x0 : dom)
    for (Elt y0 : dom) {
      const int i = testing::index(b, x0), j = testing::index(b, y0);
      if (!b.leq(i, j)) {
        CHECK(interval_geom(x0, y0).empty());
        continue;
      }
      const auto want = testing::elts(b, b.interval_elements(i, j));
      REQUIRE(interval_geom(x0, y0) == want);
      std::vector<Elt> fibers;
      for (Wf w : kWf) {
        const Polygon p = pgn(x0, y0, w);
        for (Pt c : p.lattice_centers()) fibers.push_back(c);
      }
      CHECK(sorted(fibers) == want);
    }
}

TEST_CASE("corner data and thickness") {
  const Elt x0 = theta(1, 1), y0 = theta(5, 5);
  const CornerData cd = corner_data(x0, y0);
  REQUIRE(cd.v_x[0]);
  const Pt d = *cd.v_x[0] - x0;
  CHECK(cross(d, lattice::alpha1) == 0);
  CHECK(d.u > 2 * lattice::alpha1.u);
  CHECK(is_thick(x0, y0));
  CHECK(is_thick_cone(x0, y0));
  CHECK_FALSE(is_thick(x0, x0));
  CHECK_FALSE(is_thick(theta(0, 0), theta_s(0, 0)));
  CHECK_FALSE(is_thick(y0, x0));

  const SideLengths s = side_lengths(x0, y0);
  CHECK(s.formula == s.geometric);
  CHECK_THROWS_AS(side_lengths(parse("3"), y0), UnsupportedIntervalError);
}

TEST_CASE("corner data relative position") {
  const auto dom = dominant_up_to(12);
  for (Elt x0 : dom)
    for (Elt y0 : dom) {
      if (!leq_lower(x0, y0) || x0 == y0) continue;
      const CornerData cd = corner_data(x0, y0);
      for (int i = 0; i < 2; ++i) {
        const int j = 1 - i;
        if (!cd.z_x[i] || !cd.z_y[j] || !cd.v_x[i] || !cd.v_y[j]) continue;
        if (*cd.z_x[i] == *cd.z_y[j] && *cd.v_x[i] == *cd.z_x[i]) CHECK(*cd.v_y[j] == *cd.v_x[i]);
      }
    }
}

TEST_CASE("side length formulas on full dominant intervals") {
  const auto dom = dominant_up_to(20);
  int checked = 0;
  for (Elt x0 : dom) {
    if (length(x0) > 12) continue;
    for (Elt y0 : dom) {
      if (length(y0) - length(x0) > 8 || !is_full(x0, y0)) continue;
      SideLengths s;
      try {
        s = side_lengths(x0, y0);
      } catch (const UnsupportedIntervalError&) {
        continue;
      }
      CHECK_MESSAGE(s.formula == s.geometric, word_string(x0), " ", word_string(y0));
      ++checked;
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("thick intervals are full and contain x + rho, y - rho") {
  const auto dom = dominant_up_to(20);
  int thick = 0;
  for (Elt x0 : dom)
    for (Elt y0 : dom) {
      if (length(x0) > 12 || length(y0) - length(x0) > 10) continue;
      CHECK(is_thick(x0, y0) == is_thick_cone(x0, y0));
      if (!is_thick(x0, y0)) continue;
      ++thick;
      CHECK(is_full(x0, y0));
      CHECK(leq_lower(x0 + lattice::rho, y0));
      CHECK(geq_geom(x0, x0 + lattice::rho));
      CHECK(leq_lower(y0 - lattice::rho, y0));
      CHECK(geq_geom(x0, y0 - lattice::rho));
    }
  CHECK(thick > 0);
}

TEST_CASE("dihedral set listings") {
  std::set<Elt> listed;
  for (const char* w : {"121", "123", "213", "312", "313", "321", "323"}) listed.insert(parse(w));
  CHECK(as_set(dihedral_below(s0theta_s(0, 0))) == listed);
  CHECK(dihedral_below(theta_s(0, 1)).size() == 8);
  CHECK(dihedral_below(theta_s(1, 0)).size() == 8);
  CHECK(dihedral_below(x(6)).size() == 9);
  CHECK(dihedral_below(theta(1, 1)).size() == 10);
  CHECK(dihedral_below(x(7)).size() == 12);
  CHECK(dihedral_below(x(5)).size() == 8);
}

TEST_CASE("closed dihedral sets equal brute force") {
  for (Elt y0 : dominant_up_to(11)) {
    const auto up = dihedral_upper(y0);
    CHECK(up == dihedral_upper_brute(y0));
    for (Elt z : up) {
      if (length(y0) - length(z) < 4) continue;
      const bool on = Polygon::hull({y0, left_mul(1, y0)}).member(z) || Polygon::hull({y0, left_mul(2, y0)}).member(z);
      CHECK(on);
    }
    CHECK(dihedral_lower(y0) == dihedral_lower_brute(y0, length(y0) + 10));
  }
}

TEST_CASE("full intervals") {
  CHECK_FALSE(is_full(kId, parse("12")));
  CHECK(is_full(theta(0, 0), theta(1, 1)) == a2_ball(12).is_full(testing::index(a2_ball(12), theta(0, 0)),
                                                                   testing::index(a2_ball(12), theta(1, 1))));
}
