#include "doctest.h"

#include "bruhat/geometry.hpp"

#include <random>

using namespace bruhat;
using lattice::alpha1;
using lattice::alpha2;
using lattice::rho;
using lattice::varpi1;
using lattice::varpi2;

TEST_CASE("pairings are exact") {
  CHECK(pairing(Root::A1, lattice::origin) == Rat(0));
  CHECK(pairing(Root::Rho, {-2, -2}) == Rat(-2, 3));
  // Weight-basis coordinates: (alpha_2, p) = v / 6.
  CHECK(pairing(Root::A2, {26, -10}) == Rat(-5, 3));
  CHECK(pairing(Root::A1, alpha1) == Rat(2));
  CHECK(pairing(Root::A2, alpha1) == Rat(-1));
  CHECK(pairing(Root::Rho, rho) == Rat(2));
  CHECK(pairing_weight(1, alpha1) == Rat(1));
  CHECK(pairing_weight(2, alpha1) == Rat(0));
  CHECK(pairing_weight(1, varpi1) == Rat(2, 3));
  CHECK(pairing_weight(1, varpi2) == Rat(1, 3));
}

TEST_CASE("distance normalization") {
  CHECK(dist_sq({-2, -2}, {0, 0}) == Rat(1));         // center to vertex
  CHECK(dist_sq({0, 0}, {-3, -3}) == Rat(9, 4));      // alcove height
  CHECK(dist_sq(lattice::origin, alpha1) == Rat(9));  // root length 3
}

TEST_CASE("cone membership") {
  const Pt apex{2, 2};
  CHECK(cone_member(apex, apex, alpha1, alpha2));
  CHECK_FALSE(cone_member(apex, apex, alpha1, alpha2, true));
  CHECK(cone_member({8, 2}, apex, alpha1, alpha2));
  CHECK_FALSE(cone_member({-2, -2}, apex, alpha1, alpha2));
  CHECK(cone_member(apex + 3 * alpha1, apex, alpha1, alpha2));
  CHECK_FALSE(cone_member(apex + 3 * alpha1, apex, alpha1, alpha2, true));
}

TEST_CASE("hull and membership") {
  const Polygon one = Polygon::hull({{4, 4}});
  REQUIRE(one.size() == 1);
  CHECK(one.member({4, 4}));
  CHECK_FALSE(one.member({4, 4}, true));

  const Polygon tri = Polygon::hull({{0, 0}, {6, 0}, {0, 6}, {2, 2}});
  CHECK(tri.size() == 3);
  CHECK(tri.member({2, 2}, true));
  CHECK(tri.member({3, 3}));
  CHECK_FALSE(tri.member({3, 3}, true));

  std::vector<Pt> hex;
  for (Pt p : {Pt{2, 2}, Pt{-2, 4}, Pt{4, -2}, Pt{-4, 2}, Pt{2, -4}, Pt{-2, -2}}) hex.push_back(p);
  const Polygon h = Polygon::hull(hex);
  CHECK(h.size() == 6);
  CHECK_FALSE(h.member({-4, -4}));

  const Polygon seg = Polygon::hull({{0, 0}, {12, -6}, {6, -3}});
  CHECK(seg.size() == 2);
  CHECK(seg.member({6, -3}));
  CHECK_FALSE(seg.member({6, -3}, true));
}

TEST_CASE("hull vertices are convex and counterclockwise") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-30, 30);
  for (int t = 0; t < 200; ++t) {
    std::vector<Pt> pts;
    for (int k = 0; k < 12; ++k) pts.push_back({d(rng), d(rng)});
    const Polygon p = Polygon::hull(pts);
    const auto& v = p.vertices();
    if (v.size() < 3) continue;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Pt a = v[i], b = v[(i + 1) % v.size()], c = v[(i + 2) % v.size()];
      CHECK(cross(b - a, c - b) > 0);
    }
    for (Pt q : pts) CHECK(p.member(q));
  }
}

TEST_CASE("clipping by half-planes") {
  const Polygon sq = Polygon::hull({{0, 0}, {12, 0}, {12, 12}, {0, 12}});
  const Polygon half = sq.clipped({HalfPlane{-1, 0, 6, false}});  // u <= 6
  CHECK(half == Polygon::hull({{0, 0}, {6, 0}, {6, 12}, {0, 12}}));
  CHECK(sq.clipped({HalfPlane{1, 0, -24, false}}).empty());
}

TEST_CASE("translation and flip congruence") {
  const Polygon p = Polygon::hull({{2, 2}, {14, -4}, {20, 8}, {8, 14}});
  const auto t = congruent_mod_flip(p, p.translated(varpi1));
  REQUIRE(t);
  CHECK_FALSE(t->flipped);
  CHECK(t->shift == varpi1);

  const auto f = congruent_mod_flip(p, p.mapped(flip));
  REQUIRE(f);
  CHECK(f->flipped);
  CHECK(f->shift == Pt{});

  const Polygon a = Polygon::hull({{0, 0}, {12, -6}});
  const Polygon b = Polygon::hull({{0, 0}, {12, 12}});
  CHECK_FALSE(congruent_mod_flip(a, b));
  const auto s = congruent_mod_flip(p, p.translated({2, 2}));
  REQUIRE(s);
  CHECK_FALSE(is_weight(s->shift));
}

TEST_CASE("lattice centers inside a polygon") {
  // The hexagon W_f (rho/3) holds the six alcoves around the origin.
  const Polygon h = Polygon::hull({{2, 2}, {-2, 4}, {4, -2}, {-4, 2}, {2, -4}, {-2, -2}});
  CHECK(h.lattice_centers().size() == 6);
  CHECK(h.lattice_centers(true).empty());
}
