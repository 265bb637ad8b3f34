#include "bruhat/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace bruhat::render {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string style_attrs(const Style& s) {
  return "fill=\"" + escape(s.fill) + "\" stroke=\"" + escape(s.stroke) + "\" stroke-width=\"" +
         num(s.stroke_width) + "\" opacity=\"" + num(s.opacity) + "\"";
}

struct Frame {
  double x0, y1, scale;
  std::string xy(Pt p) const {
    const auto [x, y] = to_plane(p);
    return num((x - x0) * scale) + "," + num((y1 - y) * scale);
  }
};

std::string closed_path(const Frame& f, const std::vector<Pt>& vs) {
  std::string d;
  for (std::size_t i = 0; i < vs.size(); ++i) d += (i ? " L" : "M") + f.xy(vs[i]);
  return d + " Z";
}

std::vector<Pt> triangle(a2::Elt z) {
  const auto v = a2::vertices(z);
  return {v[0], v[1], v[2]};
}

Int round_down6(Int a) { return a >= 0 ? a / 6 * 6 : -((-a + 5) / 6 * 6); }

}  // namespace

std::pair<double, double> to_plane(Pt p) {
  // Gram matrix of w1, w2 is proportional to [[2, 1], [1, 2]].
  return {static_cast<double>(p.u) + static_cast<double>(p.v) / 2.0, std::sqrt(3.0) / 2.0 * static_cast<double>(p.v)};
}

Scene Scene::around(const std::vector<Pt>& pts, Int margin) {
  Scene s;
  if (pts.empty()) return s;
  s.lo = s.hi = pts.front();
  for (Pt p : pts) {
    s.lo = {std::min(s.lo.u, p.u), std::min(s.lo.v, p.v)};
    s.hi = {std::max(s.hi.u, p.u), std::max(s.hi.v, p.v)};
  }
  s.lo = {round_down6(s.lo.u - margin), round_down6(s.lo.v - margin)};
  s.hi = {-round_down6(-(s.hi.u + margin)), -round_down6(-(s.hi.v + margin))};
  return s;
}

Scene& Scene::grid() {
  Layer l;
  l.kind = LayerKind::Grid;
  l.tag = "grid";
  l.style.stroke = "#b0b0b0";
  l.style.stroke_width = 0.5;
  layers.push_back(std::move(l));
  return *this;
}

Scene& Scene::cells(const std::string& tag, std::vector<a2::Elt> elems, Style s) {
  Layer l;
  l.kind = LayerKind::Cells;
  l.tag = tag;
  l.style = std::move(s);
  l.cells = std::move(elems);
  layers.push_back(std::move(l));
  return *this;
}

Scene& Scene::polygon(const std::string& tag, const Polygon& p, Style s) {
  Layer l;
  l.kind = LayerKind::Polygon;
  l.tag = tag;
  l.style = std::move(s);
  l.polygon = p;
  layers.push_back(std::move(l));
  return *this;
}

Scene& Scene::points(const std::string& tag, std::vector<Pt> pts, Style s) {
  Layer l;
  l.kind = LayerKind::Points;
  l.tag = tag;
  l.style = std::move(s);
  l.points = std::move(pts);
  layers.push_back(std::move(l));
  return *this;
}

std::string render_svg(const Scene& scene) {
  if (scene.lo.u >= scene.hi.u || scene.lo.v >= scene.hi.v || scene.layers.empty())
    throw DegenerateSceneError("empty viewport");
  // Bounding box of the viewport parallelogram in the plane.
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (Pt c : {scene.lo, scene.hi, Pt{scene.lo.u, scene.hi.v}, Pt{scene.hi.u, scene.lo.v}}) {
    const auto [x, y] = to_plane(c);
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  const Frame f{xmin, ymax, scene.scale};
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num((xmax - xmin) * scene.scale)
     << "\" height=\"" << num((ymax - ymin) * scene.scale) << "\" viewBox=\"0 0 " << num((xmax - xmin) * scene.scale)
     << " " << num((ymax - ymin) * scene.scale) << "\">\n";
  for (const Layer& l : scene.layers) {
    os << "<g id=\"" << escape(l.tag) << "\" " << style_attrs(l.style) << ">\n";
    switch (l.kind) {
      case LayerKind::Grid: {
        std::string d;
        for (Int u = scene.lo.u; u <= scene.hi.u; ++u)
          for (Int v = scene.lo.v; v <= scene.hi.v; ++v)
            if (a2::is_center({u, v})) d += (d.empty() ? "" : " ") + closed_path(f, triangle({u, v}));
        os << "<path d=\"" << d << "\"/>\n";
        break;
      }
      case LayerKind::Cells:
        for (a2::Elt z : l.cells) os << "<path d=\"" << closed_path(f, triangle(z)) << "\"/>\n";
        break;
      case LayerKind::Polygon:
        if (!l.polygon.empty()) os << "<path d=\"" << closed_path(f, l.polygon.vertices()) << "\"/>\n";
        break;
      case LayerKind::Points:
        for (Pt p : l.points) {
          const auto [x, y] = to_plane(p);
          os << "<circle cx=\"" << num((x - f.x0) * f.scale) << "\" cy=\"" << num((f.y1 - y) * f.scale)
             << "\" r=\"" << num(2.5) << "\"/>\n";
        }
        break;
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

namespace {

Style filled(const std::string& colour, double opacity = 0.6) {
  Style s;
  s.fill = colour;
  s.stroke = "#404040";
  s.stroke_width = 0.5;
  s.opacity = opacity;
  return s;
}

Style outline(const std::string& colour, double width = 2.0) {
  Style s;
  s.stroke = colour;
  s.stroke_width = width;
  return s;
}

}  // namespace

Scene star_scene(a2::Elt x) {
  const a2::Star st = a2::star(x);
  std::vector<Pt> pts = st.outer;
  pts.push_back(x);
  Scene s = Scene::around(pts);
  s.grid();
  s.polygon("t1", st.t1, filled("#9ecae1", 0.4));
  s.polygon("t2", st.t2, filled("#fdae6b", 0.4));
  s.cells("x", {x}, filled("#d62728", 0.9));
  s.points("outer", st.outer, filled("#000000", 1.0));
  if (!st.inner.empty()) s.points("inner", st.inner, filled("#555555", 1.0));
  return s;
}

Scene lower_scene(a2::Elt y) {
  const Polygon c = a2::c_polygon(y);
  std::vector<Pt> pts = c.vertices();
  pts.push_back(y);
  Scene s = Scene::around(pts);
  s.grid();
  s.cells("lower", a2::interval_geom(a2::kId, y), filled("#74c476", 0.5));
  s.polygon("c_y", c, outline("#000000"));
  return s;
}

Scene interval_scene(a2::Elt x, a2::Elt y) {
  const auto elems = a2::interval_geom(x, y);
  std::vector<Pt> pts(elems.begin(), elems.end());
  Scene s = Scene::around(pts);
  s.grid();
  s.cells("interval", elems, filled("#6baed6", 0.5));
  if (a2::is_dominant(x) && a2::is_dominant(y)) s.polygon("pgn", a2::pgn(x, y), outline("#d62728"));
  s.cells("ends", {x, y}, filled("#08306b", 0.9));
  return s;
}

Scene zones_scene(Int radius) {
  Scene s;
  s.lo = {-radius, -radius};
  s.hi = {radius, radius};
  s.grid();
  const char* colours[] = {"#fbb4ae", "#b3cde3", "#ccebc5", "#decbe4", "#fed9a6", "#ffffcc"};
  for (std::size_t k = 0; k < a2::kWf.size(); ++k) {
    std::vector<a2::Elt> cells;
    for (Int u = -radius; u <= radius; ++u)
      for (Int v = -radius; v <= radius; ++v)
        if (a2::is_center({u, v}) && a2::zone_of({u, v}) == a2::kWf[k]) cells.push_back({u, v});
    s.cells(std::string("zone-") + a2::name(a2::kWf[k]), cells, filled(colours[k], 0.8));
  }
  return s;
}

}  // namespace bruhat::render
