#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <vector>

namespace bruhat {

using Int = std::int64_t;
using Rat = boost::rational<Int>;

// The point (u/6)w1 + (v/6)w2 of the A2 weight plane.  The factor 6 makes
// alcove centers, alcove vertices and edge midpoints integral.
struct Pt {
  Int u = 0;
  Int v = 0;

  constexpr Pt() = default;
  constexpr Pt(Int u_, Int v_) : u(u_), v(v_) {}

  constexpr Pt operator+(Pt o) const { return {u + o.u, v + o.v}; }
  constexpr Pt operator-(Pt o) const { return {u - o.u, v - o.v}; }
  constexpr Pt operator-() const { return {-u, -v}; }
  constexpr Pt& operator+=(Pt o) { u += o.u; v += o.v; return *this; }
  constexpr Pt& operator-=(Pt o) { u -= o.u; v -= o.v; return *this; }
  friend constexpr Pt operator*(Int k, Pt p) { return {k * p.u, k * p.v}; }

  constexpr auto operator<=>(const Pt&) const = default;
};

std::ostream& operator<<(std::ostream& os, Pt p);

struct PtHash {
  std::size_t operator()(Pt p) const noexcept {
    auto h = static_cast<std::uint64_t>(p.u) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(p.v) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

namespace lattice {
inline constexpr Pt origin{0, 0};
inline constexpr Pt alpha1{12, -6};
inline constexpr Pt alpha2{-6, 12};
inline constexpr Pt rho{6, 6};
inline constexpr Pt varpi1{6, 0};
inline constexpr Pt varpi2{0, 6};
}  // namespace lattice

enum class Root { A1, A2, Rho };

// 6 * (root, p); always an integer.
constexpr Int pair6(Root r, Pt p) {
  switch (r) {
    case Root::A1: return p.u;
    case Root::A2: return p.v;
    case Root::Rho: return p.u + p.v;
  }
  return 0;
}

Rat pairing(Root r, Pt p);

// 18 * (w_i, p) for i in {1, 2}.
constexpr Int pair_w18(int i, Pt p) { return i == 1 ? 2 * p.u + p.v : p.u + 2 * p.v; }
Rat pairing_weight(int i, Pt p);

// dist(a,b)^2 in the normalization where alcove vertices sit at distance 1
// from the center.
Rat dist_sq(Pt a, Pt b);

constexpr Int cross(Pt a, Pt b) { return a.u * b.v - a.v * b.u; }

// Rotations by +-60 degrees and the swap of weight coordinates.
constexpr Pt rot60(Pt d) { return {-d.v, d.u + d.v}; }
constexpr Pt rot_m60(Pt d) { return {d.u + d.v, -d.u}; }
constexpr Pt flip(Pt p) { return {p.v, p.u}; }

constexpr bool is_weight(Pt p) { return p.u % 6 == 0 && p.v % 6 == 0; }

// p - apex = a*d1 + b*d2 with a, b >= 0 (> 0 when strict).
bool cone_member(Pt p, Pt apex, Pt d1, Pt d2, bool strict = false);

// Closed half-plane a*u + b*v + c >= 0 (or > 0 when strict).
struct HalfPlane {
  Int a = 0;
  Int b = 0;
  Int c = 0;
  bool strict = false;

  Int eval(Pt p) const { return a * p.u + b * p.v + c; }
  bool contains(Pt p) const { return strict ? eval(p) > 0 : eval(p) >= 0; }
  HalfPlane closure() const { return {a, b, c, false}; }
};

// Convex lattice polygon, counterclockwise, possibly a segment or a point.
class Polygon {
 public:
  Polygon() = default;

  static Polygon hull(std::vector<Pt> pts);

  const std::vector<Pt>& vertices() const { return vs_; }
  std::size_t size() const { return vs_.size(); }
  bool empty() const { return vs_.empty(); }

  bool member(Pt p, bool strict = false) const;
  Polygon translated(Pt d) const;
  Polygon mapped(const std::function<Pt(Pt)>& f) const;

  // All points with u == v mod 6 and u mod 6 in {2, 4} (alcove centers) inside.
  std::vector<Pt> lattice_centers(bool strict = false) const;

  // min/max of u and v over vertices.
  Pt lo() const;
  Pt hi() const;

  // Intersect with closed half-planes.  Vertices that are not integral in
  // scaled coordinates raise std::logic_error.
  Polygon clipped(const std::vector<HalfPlane>& hps) const;

  friend bool operator==(const Polygon& a, const Polygon& b);

 private:
  std::vector<Pt> vs_;
};

std::ostream& operator<<(std::ostream& os, const Polygon& p);

struct Congruence {
  bool flipped = false;  // g = sigma when true
  Pt shift;              // g(P) + shift = Q
};

// Congruence by {id, sigma} followed by a translation; identity preferred.
std::optional<Congruence> congruent_mod_flip(const Polygon& p, const Polygon& q);

}  // namespace bruhat
