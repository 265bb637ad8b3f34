#pragma once

// SVG pictures of the A2 alcove tiling: alcoves, polygons and marked points.
// Coordinates stay exact until serialization.

#include "bruhat/a2.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace bruhat::render {

class DegenerateSceneError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Style {
  std::string fill = "none";
  std::string stroke = "#000000";
  double stroke_width = 1.0;
  double opacity = 1.0;
};

enum class LayerKind { Grid, Cells, Polygon, Points };

struct Layer {
  LayerKind kind = LayerKind::Grid;
  std::string tag;
  Style style;
  std::vector<a2::Elt> cells;  // Cells
  Polygon polygon;             // Polygon
  std::vector<Pt> points;      // Points
};

struct Scene {
  Pt lo, hi;           // viewport corners in lattice coordinates
  double scale = 8.0;  // pixels per lattice unit
  std::vector<Layer> layers;

  // Viewport covering pts with a margin, in lattice units.
  static Scene around(const std::vector<Pt>& pts, Int margin = 12);

  Scene& grid();
  Scene& cells(const std::string& tag, std::vector<a2::Elt> elems, Style s);
  Scene& polygon(const std::string& tag, const Polygon& p, Style s);
  Scene& points(const std::string& tag, std::vector<Pt> pts, Style s);
};

// Plane coordinates of a lattice point (orthonormal frame, y up).
std::pair<double, double> to_plane(Pt p);

std::string render_svg(const Scene& scene);

// Ready-made pictures.
Scene star_scene(a2::Elt x);
Scene lower_scene(a2::Elt y);
Scene interval_scene(a2::Elt x, a2::Elt y);
Scene zones_scene(Int radius = 36);

}  // namespace bruhat::render
