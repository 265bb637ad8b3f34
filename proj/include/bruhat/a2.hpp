#pragma once

// The alcove model of the affine Weyl group of type A2.  An element is
// identified with the center of its alcove, a Pt with u == v (mod 6) and
// u mod 6 in {2, 4}.  Generator 0 is s0 and is printed as 3 in words.

#include "bruhat/coxeter.hpp"
#include "bruhat/geometry.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace bruhat::a2 {

using Elt = Pt;

// ------------------------------------------------------------ alcoves

bool is_center(Pt p);
int length(Elt z);
inline bool up_oriented(Elt z) { return ((z.u % 6) + 6) % 6 == 4; }

inline constexpr Elt kId{-2, -2};

// Alcove vertex of the type belonging to generator s (the vertex opposite
// the wall crossed by right multiplication with s).
Pt vertex(Elt z, int s);
std::array<Pt, 3> vertices(Elt z);

Elt right_mul(Elt z, int s);
Elt left_mul(int s, Elt z);
// Affine reflection s_{alpha,k}, alpha in {A1, A2, Rho}.
Pt reflect(Root r, Int k, Pt p);
Elt inverse(Elt z);

Elt from_word(const Word& w);
Elt parse(const std::string& s);  // digits, 0 or 3 for s0, "e" for id
// A word, or "theta m n", "theta-s m n", "s0theta m n", "s0theta-s m n", "x k"
// (parentheses and commas allowed).
Elt parse_element(const std::string& s);
// Reduced word obtained by peeling the smallest right descent.
Word reduced_word(Elt z);

// ------------------------------------------------------------ finite Weyl group

enum class Wf { Id, S1, S2, S1S2, S2S1, W0 };
inline constexpr std::array<Wf, 6> kWf{Wf::Id, Wf::S1, Wf::S2, Wf::S1S2, Wf::S2S1, Wf::W0};

Pt apply(Wf w, Pt p);
Wf inverse(Wf w);
const char* name(Wf w);

// ------------------------------------------------------------ the group G

// g(z) = delta^k sigma^s iota^i (z).
struct GElt {
  int k = 0;
  bool s = false;
  bool i = false;
  auto operator<=>(const GElt&) const = default;
};

// All twelve elements, identity first.
const std::array<GElt, 12>& group_G();
Elt apply(GElt g, Elt z);
Elt apply_inverse(GElt g, Elt z);
Word apply_word(GElt g, const Word& w);
std::string name(GElt g);

// delta and sigma act on the plane by isometries.
Pt delta_pt(Pt p);
Pt delta_inv_pt(Pt p);

// ------------------------------------------------------------ normal forms

enum class Family { Id, X, Theta, ThetaS, SThetaS };

Elt theta(Int m, Int n);
Elt theta_s(Int m, Int n);
Elt s0theta(Int m, Int n);
Elt s0theta_s(Int m, Int n);
Elt x(Int k);

struct NormalForm {
  Family family = Family::Id;
  GElt g;
  Int m = 0, n = 0, k = 0;
};

// Representative r of the family with z = g(r); identity g preferred.
NormalForm normal_form(Elt z);
Elt representative(const NormalForm& nf);
Word representative_word(const NormalForm& nf);
Word normal_word(Elt z);
std::string word_string(Elt z);  // normal word in digits 1,2,3
std::string describe(const NormalForm& nf);

bool is_dominant(Elt z);
// Dominant parameters (theta or theta_s, m, n) when z is dominant.
struct DomParams {
  bool s = false;
  Int m = 0, n = 0;
};
std::optional<DomParams> dominant_params(Elt z);

// Sort key: length, then normal word.
bool word_order(Elt a, Elt b);
void sort_elements(std::vector<Elt>& v);

// ------------------------------------------------------------ lower intervals

Polygon c_polygon(Elt y);
Int lower_cardinality(Elt y);
bool leq_lower(Elt z, Elt y);  // cen z in C_y

// ------------------------------------------------------------ zones and stars

Wf zone_of(Pt p);
std::vector<HalfPlane> zone_closure(Wf w);

class UndefinedStarError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Star {
  std::vector<Pt> inner;  // x_1..x_6 when available
  std::vector<Pt> outer;  // u_1..u_6
  Polygon t1, t2;
  bool interior(Pt p) const { return t1.member(p, true) || t2.member(p, true); }
};

Star star(Elt x);
bool geq_geom(Elt x, Elt z);  // z >= x
bool leq_geom(Elt x, Elt y);
std::vector<Elt> interval_geom(Elt x, Elt y);

// ------------------------------------------------------------ covers

std::vector<Elt> lower_covers(Elt z);
std::vector<Elt> upper_covers(Elt z);

struct CoverSets {
  std::vector<Elt> lower, upper;
  bool lower_closed = false;  // false: computed from reflections
  bool upper_closed = false;
};
CoverSets covers_closed(Elt z);

bool is_dihedral(Elt x, Elt y);

// ------------------------------------------------------------ interval polygons

Polygon par(Elt x, Elt y, Wf w);
Polygon pgn(Elt x, Elt y, Wf w);
inline Polygon pgn(Elt x, Elt y) { return pgn(x, y, Wf::Id); }

enum class Shape { Parallelogram, Pentagon, Hexagon };
struct IntervalType {
  Shape shape = Shape::Parallelogram;
  int i0 = 0;  // pentagon wall direction
};
IntervalType interval_type(Elt x, Elt y);
const char* name(Shape s);

struct CornerData {
  std::array<std::optional<Pt>, 2> v_x, v_y;
  std::array<std::optional<Elt>, 2> z_x, z_y;
};
CornerData corner_data(Elt x, Elt y);

class UnsupportedIntervalError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// dist^2 of the six sides of Pgn_{x,y}: y-v_i(y), v_j(y)-v_i(x), v_i(x)-x for
// i = 1, 2 (j the other index), by closed formula and by direct distance.
struct SideLengths {
  std::array<Rat, 6> formula;
  std::array<Rat, 6> geometric;
};
SideLengths side_lengths(Elt x, Elt y);

// U(x) and L(y) inside [x, y].
bool is_full(Elt x, Elt y);
bool is_thick(Elt x, Elt y);
bool is_thick_cone(Elt x, Elt y);

// ------------------------------------------------------------ dihedral sets

std::vector<Elt> dihedral_upper(Elt y);  // closed form, y dominant
std::vector<Elt> dihedral_lower(Elt x);  // closed form, x dominant
std::vector<Elt> dihedral_upper_brute(Elt y);
std::vector<Elt> dihedral_lower_brute(Elt x, int max_len);
// {z <= u : l(z,u) >= 2, [z,u] dihedral}
std::vector<Elt> dihedral_below(Elt u);

// ------------------------------------------------------------ posets

IntervalPoset interval_poset(Elt x, Elt y, std::vector<Elt>* elements = nullptr);

// Elements of length <= L sorted by (length, word).
std::vector<Elt> ball(int max_len);

}  // namespace bruhat::a2
