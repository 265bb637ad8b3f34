#include "doctest.h"

#include "support.hpp"
#include "bruhat/translations.hpp"

#include <set>

using namespace bruhat;
using namespace bruhat::a2;

namespace {

std::vector<Elt> dominant_up_to(int len) {
  std::vector<Elt> out;
  for (Elt z : ball(len))
    if (is_dominant(z)) out.push_back(z);
  return out;
}

}  // namespace

TEST_CASE("piecewise translations") {
  for (Int m = 0; m < 4; ++m)
    for (Int n = 0; n < 4; ++n) {
      CHECK(tau(theta(m, n), 1) == theta(m + 1, n));
      CHECK(tau(theta(m, n), 2) == theta(m, n + 1));
    }
  CHECK(tau(x(2), 1) == x(4));
  const Elt s0 = parse("3");
  CHECK(tau(s0, 2) == s0 - lattice::varpi1);
  CHECK(tau_lambda(theta(0, 0), {2, 1}) == theta(2, 1));
  CHECK(to_string(Weight{5, 1}) == "5w1+1w2");
}

TEST_CASE("translations are injective, keep zones and commute") {
  const auto b = ball(10);
  for (Weight l : {Weight{1, 0}, Weight{0, 1}, Weight{2, 1}}) {
    std::set<Elt> images;
    for (Elt z : b) {
      const Elt t = tau_lambda(z, l);
      CHECK(is_center(t));
      CHECK(zone_of(t) == zone_of(z));
      images.insert(t);
    }
    CHECK(images.size() == b.size());
  }
  for (Elt z : b) CHECK(tau(tau(z, 1), 2) == tau(tau(z, 2), 1));
}

TEST_CASE("translated intervals") {
  const TranslationReport fig = translate_interval(theta_s(1, 0), theta_s(3, 1), {5, 1});
  CHECK(fig.is_poset_iso);
  CHECK(fig.card_source == fig.card_target);

  const TranslationReport zero = translate_interval(theta(0, 0), theta(2, 1), {0, 0});
  CHECK(zero.is_poset_iso);

  const TranslationReport hex = translate_interval(theta(0, 0), theta(4, 4), {1, 0});
  CHECK(hex.card_target > hex.card_source);
  CHECK_FALSE(hex.is_poset_iso);
  CHECK(hex.image_inside);
}

TEST_CASE("polygon translation law") {
  CHECK(pgn_translation_law(theta_s(1, 0), theta_s(3, 1), {5, 1}));
  CHECK_FALSE(pgn_translation_law(theta(0, 0), theta(4, 4), {1, 0}));
  CHECK(pgn_translation_law(theta(0, 0), theta(4, 4), {0, 0}));
}

TEST_CASE("translation laws over dominant pairs") {
  const auto dom = dominant_up_to(12);
  int instances = 0, pentagons = 0;
  for (Elt x0 : dom)
    for (Elt y0 : dom) {
      if (x0 == y0 || !leq_lower(x0, y0)) continue;
      const IntervalType t = interval_type(x0, y0);
      for (Weight l : {Weight{1, 0}, Weight{0, 1}, Weight{1, 1}}) {
        const TranslationReport r = translate_interval(x0, y0, l);
        ++instances;
        CHECK(r.image_inside);
        CHECK(r.card_source <= r.card_target);
        const bool law = pgn_translation_law(x0, y0, l);
        CHECK(law == (r.card_source == r.card_target));
        if (r.card_source == r.card_target) CHECK(r.is_poset_iso);
        if (t.shape == Shape::Parallelogram) CHECK(r.is_poset_iso);
        if (t.shape == Shape::Hexagon) CHECK_FALSE(law);
      }
      if (t.shape == Shape::Pentagon && t.i0 != 0) {
        ++pentagons;
        const Weight along = t.i0 == 1 ? Weight{1, 0} : Weight{0, 1};
        const Weight across = t.i0 == 1 ? Weight{0, 1} : Weight{1, 0};
        CHECK(translate_interval(x0, y0, along).is_poset_iso);
        CHECK_FALSE(pgn_translation_law(x0, y0, across));
      }
    }
  CHECK(instances >= 50);
  CHECK(pentagons > 0);
}

TEST_CASE("comparability witnesses") {
  const auto self = comparable(theta(0, 0), theta(2, 1), theta(0, 0), theta(2, 1));
  REQUIRE(self);
  CHECK(self->u == theta(0, 0));
  CHECK(self->v == theta(2, 1));
  CHECK(self->lambda.is_zero());
  CHECK(self->lambda2.is_zero());

  const Elt x0 = theta_s(1, 0), y0 = theta_s(3, 1);
  CHECK(comparable(x0, y0, shift(x0, {5, 1}), shift(y0, {5, 1})));
  CHECK_FALSE(comparable(theta(0, 0), theta(4, 4), theta(0, 0), theta(3, 4)));
}
