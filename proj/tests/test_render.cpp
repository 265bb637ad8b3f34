#include "doctest.h"

#include "bruhat/render.hpp"

#include <regex>

using namespace bruhat;
using namespace bruhat::render;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

// Text of the <g> element with the given id.
std::string group(const std::string& svg, const std::string& id) {
  const auto a = svg.find("<g id=\"" + id + "\"");
  if (a == std::string::npos) return {};
  return svg.substr(a, svg.find("</g>", a) - a);
}

}  // namespace

TEST_CASE("grid is a single path") {
  Scene s;
  s.lo = {-12, -12};
  s.hi = {12, 12};
  s.grid();
  const std::string svg = render_svg(s);
  CHECK(count(svg, "<g id=") == 1);
  CHECK(count(group(svg, "grid"), "<path") == 1);
  CHECK(svg.rfind("</svg>") != std::string::npos);
}

TEST_CASE("lower polygon of theta(0,0) is a hexagon") {
  const Scene s = lower_scene(a2::theta(0, 0));
  const std::string svg = render_svg(s);
  const std::string poly = group(svg, "c_y");
  const std::regex cmd("[ML]");
  CHECK(std::distance(std::sregex_iterator(poly.begin(), poly.end(), cmd), std::sregex_iterator()) == 6);
  CHECK(count(group(svg, "lower"), "<path") == 6);
}

TEST_CASE("interval shading has one triangle per element") {
  const a2::Elt x = a2::theta(0, 0), y = a2::theta(2, 2);
  const std::string svg = render_svg(interval_scene(x, y));
  CHECK(count(group(svg, "interval"), "<path") == a2::interval_geom(x, y).size());
  CHECK(count(group(svg, "ends"), "<path") == 2);
  CHECK_FALSE(group(svg, "pgn").empty());
}

TEST_CASE("stars and zones") {
  const std::string st = render_svg(star_scene(a2::theta(2, 1)));
  CHECK(count(group(st, "outer"), "<circle") == 6);
  CHECK(count(group(st, "inner"), "<circle") == 6);
  const std::string z = render_svg(zones_scene(12));
  for (a2::Wf w : a2::kWf) CHECK_FALSE(group(z, std::string("zone-") + a2::name(w)).empty());
  CHECK_THROWS_AS(star_scene(a2::kId), a2::UndefinedStarError);
}

TEST_CASE("rendering is deterministic") {
  const Scene s = interval_scene(a2::theta(1, 0), a2::theta(3, 2));
  CHECK(render_svg(s) == render_svg(s));
  CHECK(render_svg(interval_scene(a2::theta(1, 0), a2::theta(3, 2))) == render_svg(s));
}

TEST_CASE("degenerate scenes") {
  Scene s;
  CHECK_THROWS_AS(render_svg(s), DegenerateSceneError);
  s.lo = {0, 0};
  s.hi = {6, 6};
  CHECK_THROWS_AS(render_svg(s), DegenerateSceneError);
}

TEST_CASE("plane coordinates") {
  const auto [x, y] = to_plane({6, 0});
  CHECK(x == doctest::Approx(6.0));
  CHECK(y == doctest::Approx(0.0));
  const auto [x2, y2] = to_plane({0, 6});
  CHECK(x2 == doctest::Approx(3.0));
  CHECK(y2 == doctest::Approx(3.0 * std::sqrt(3.0)));
}
