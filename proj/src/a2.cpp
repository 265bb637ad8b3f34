#include "bruhat/a2.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace bruhat::a2 {

namespace {

Int mod(Int a, Int m) { return ((a % m) + m) % m; }

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Class of the weight (u/6, v/6) modulo the root lattice.
int weight_class(Pt p) { return static_cast<int>(mod(p.u / 6 - p.v / 6, 3)); }

// Generator attached to each vertex class.
constexpr std::array<int, 3> kGenOfClass{0, 2, 1};

constexpr std::array<Pt, 3> kUpOffsets{Pt{2, 2}, Pt{-4, 2}, Pt{2, -4}};

Pt root_dir(Root r) {
  switch (r) {
    case Root::A1: return {2, -1};
    case Root::A2: return {-1, 2};
    case Root::Rho: return {1, 1};
  }
  return {};
}

constexpr std::array<Root, 3> kRoots{Root::A1, Root::A2, Root::Rho};

void dedup(std::vector<Elt>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Centers on the closed segment [a, b].
std::vector<Elt> segment_centers(Pt a, Pt b) {
  std::vector<Elt> out;
  const Pt d = b - a;
  const Int g = std::gcd(std::abs(d.u), std::abs(d.v));
  if (g == 0) {
    if (is_center(a)) out.push_back(a);
    return out;
  }
  const Pt step{d.u / g, d.v / g};
  for (Int t = 0; t <= g; ++t) {
    const Pt p = a + t * step;
    if (is_center(p)) out.push_back(p);
  }
  return out;
}

bool is_x_center(Pt r, Int* k) {
  if (r.v == -2 && r.u >= 4 && mod(r.u, 6) == 4) {
    if (k) *k = 2 + 2 * (r.u - 4) / 6;
    return true;
  }
  if (r.v == -4 && r.u >= 2 && mod(r.u, 6) == 2) {
    if (k) *k = 1 + 2 * (r.u - 2) / 6;
    return true;
  }
  return false;
}

// Elements of <delta, sigma>, identity first.
std::vector<GElt> rotation_group() {
  std::vector<GElt> out;
  for (const auto& g : group_G())
    if (!g.i) out.push_back(g);
  return out;
}

Pt apply_pt(GElt g, Pt p) {
  if (g.s) p = flip(p);
  for (int j = 0; j < g.k; ++j) p = delta_pt(p);
  return p;
}

Pt apply_inverse_pt(GElt g, Pt p) {
  for (int j = 0; j < g.k; ++j) p = delta_inv_pt(p);
  if (g.s) p = flip(p);
  return p;
}

}  // namespace

// ------------------------------------------------------------ alcoves

bool is_center(Pt p) {
  const Int a = mod(p.u, 6);
  return a == mod(p.v, 6) && (a == 2 || a == 4);
}

int length(Elt z) {
  Int total = 0;
  for (Root r : kRoots) total += std::abs(floor_div(pair6(r, z), 6) + 1);
  return static_cast<int>(total);
}

std::array<Pt, 3> vertices(Elt z) {
  std::array<Pt, 3> out{};
  const bool up = up_oriented(z);
  for (Pt off : kUpOffsets) {
    const Pt p = up ? z + off : z - off;
    out[kGenOfClass[weight_class(p)]] = p;
  }
  return out;
}

Pt vertex(Elt z, int s) { return vertices(z)[s]; }

Elt right_mul(Elt z, int s) { return 2 * z - vertex(z, s); }

Elt left_mul(int s, Elt z) {
  switch (s) {
    case 0: return {-z.v - 6, -z.u - 6};
    case 1: return {-z.u, z.u + z.v};
    case 2: return {z.u + z.v, -z.v};
  }
  throw std::invalid_argument("generator out of range");
}

Pt reflect(Root r, Int k, Pt p) { return p - (pair6(r, p) - 6 * k) * root_dir(r); }

Elt inverse(Elt z) {
  const auto v = vertices(z);
  const Pt m1 = v[0] - v[1];  // image of w1
  const Pt m2 = v[0] - v[2];  // image of w2
  for (Wf w : kWf) {
    if (apply(w, lattice::varpi1) == m1 && apply(w, lattice::varpi2) == m2)
      return apply(inverse(w), kId - v[0]);
  }
  throw std::logic_error("alcove vertices do not match a finite Weyl group element");
}

Elt from_word(const Word& w) {
  Elt z = kId;
  for (int s : w) z = right_mul(z, s);
  return z;
}

Elt parse(const std::string& s) { return from_word(parse_word(s, 3)); }

Elt parse_element(const std::string& text) {
  std::string t = text;
  for (char& c : t)
    if (c == '(' || c == ')' || c == ',' || c == ':') c = ' ';
  std::istringstream is(t);
  std::vector<std::string> tok;
  for (std::string w; is >> w;) tok.push_back(w);
  if (tok.empty()) throw std::invalid_argument("empty element");
  auto ints = [&](std::size_t k) {
    if (tok.size() != k + 1) throw std::invalid_argument("expected " + std::to_string(k) + " integers after " + tok[0]);
    std::vector<Int> v;
    for (std::size_t i = 1; i <= k; ++i) v.push_back(std::stoll(tok[i]));
    return v;
  };
  const std::string& h = tok[0];
  if (h == "theta") { auto v = ints(2); return theta(v[0], v[1]); }
  if (h == "theta-s" || h == "theta_s") { auto v = ints(2); return theta_s(v[0], v[1]); }
  if (h == "s0theta") { auto v = ints(2); return s0theta(v[0], v[1]); }
  if (h == "s0theta-s" || h == "s0theta_s") { auto v = ints(2); return s0theta_s(v[0], v[1]); }
  if (h == "x") { auto v = ints(1); return x(v[0]); }
  if (tok.size() != 1) throw std::invalid_argument("cannot parse element '" + text + "'");
  return parse(h);
}

Word reduced_word(Elt z) {
  Word w;
  int l = length(z);
  while (l > 0) {
    bool found = false;
    for (int s = 0; s < 3 && !found; ++s) {
      const Elt t = right_mul(z, s);
      if (length(t) < l) {
        w.push_back(s);
        z = t;
        --l;
        found = true;
      }
    }
    if (!found) throw std::logic_error("no right descent");
  }
  std::reverse(w.begin(), w.end());
  return w;
}

// ------------------------------------------------------------ finite Weyl group

Pt apply(Wf w, Pt p) {
  switch (w) {
    case Wf::Id: return p;
    case Wf::S1: return {-p.u, p.u + p.v};
    case Wf::S2: return {p.u + p.v, -p.v};
    case Wf::S1S2: return {-p.u - p.v, p.u};
    case Wf::S2S1: return {p.v, -p.u - p.v};
    case Wf::W0: return {-p.v, -p.u};
  }
  return p;
}

Wf inverse(Wf w) {
  if (w == Wf::S1S2) return Wf::S2S1;
  if (w == Wf::S2S1) return Wf::S1S2;
  return w;
}

const char* name(Wf w) {
  switch (w) {
    case Wf::Id: return "id";
    case Wf::S1: return "s1";
    case Wf::S2: return "s2";
    case Wf::S1S2: return "s1s2";
    case Wf::S2S1: return "s2s1";
    case Wf::W0: return "w0";
  }
  return "?";
}

// ------------------------------------------------------------ the group G

const std::array<GElt, 12>& group_G() {
  static const std::array<GElt, 12> g = [] {
    std::array<GElt, 12> out{};
    int j = 0;
    for (bool i : {false, true})
      for (bool s : {false, true})
        for (int k = 0; k < 3; ++k) out[j++] = GElt{k, s, i};
    return out;
  }();
  return g;
}

Pt delta_pt(Pt p) { return {-p.u - p.v - 6, p.u}; }
Pt delta_inv_pt(Pt p) { return {p.v, -p.u - p.v - 6}; }

Elt apply(GElt g, Elt z) {
  if (g.i) z = inverse(z);
  return apply_pt(g, z);
}

Elt apply_inverse(GElt g, Elt z) {
  z = apply_inverse_pt(g, z);
  return g.i ? inverse(z) : z;
}

Word apply_word(GElt g, const Word& w) {
  Word out = w;
  if (g.i) std::reverse(out.begin(), out.end());
  for (int& s : out) {
    if (g.s && s != 0) s = 3 - s;
    s = (s + g.k) % 3;
  }
  return out;
}

std::string name(GElt g) {
  std::string out;
  if (g.k == 1) out += "delta";
  if (g.k == 2) out += "delta^2";
  if (g.s) out += out.empty() ? "sigma" : " sigma";
  if (g.i) out += out.empty() ? "iota" : " iota";
  return out.empty() ? "id" : out;
}

// ------------------------------------------------------------ normal forms

Elt theta(Int m, Int n) { return {2 + 6 * m, 2 + 6 * n}; }
Elt theta_s(Int m, Int n) { return {4 + 6 * m, 4 + 6 * n}; }
Elt s0theta(Int m, Int n) { return left_mul(0, theta(m, n)); }
Elt s0theta_s(Int m, Int n) { return left_mul(0, theta_s(m, n)); }

Elt x(Int k) {
  if (k < 0) throw std::invalid_argument("negative index");
  if (k == 0) return kId;
  if (k % 2 == 0) return {4 + 6 * (k / 2 - 1), -2};
  return {2 + 6 * (k / 2), -4};
}

NormalForm normal_form(Elt z) {
  if (!is_center(z)) throw std::invalid_argument("not an alcove center");
  for (const GElt& g : group_G()) {
    const Elt r = apply_inverse(g, z);
    NormalForm nf;
    nf.g = g;
    if (r == kId) {
      nf.family = Family::Id;
      return nf;
    }
    if (r.u > 0 && r.v > 0) {
      nf.family = mod(r.u, 6) == 2 ? Family::Theta : Family::ThetaS;
      const Int base = nf.family == Family::Theta ? 2 : 4;
      nf.m = (r.u - base) / 6;
      nf.n = (r.v - base) / 6;
      return nf;
    }
    const Elt t = left_mul(0, r);
    if (t.u > 0 && t.v > 0 && mod(t.u, 6) == 4) {
      nf.family = Family::SThetaS;
      nf.m = (t.u - 4) / 6;
      nf.n = (t.v - 4) / 6;
      return nf;
    }
    Int k = 0;
    if (is_x_center(r, &k)) {
      nf.family = Family::X;
      nf.k = k;
      return nf;
    }
  }
  throw std::logic_error("element outside every normal-form family");
}

Elt representative(const NormalForm& nf) {
  switch (nf.family) {
    case Family::Id: return kId;
    case Family::X: return x(nf.k);
    case Family::Theta: return theta(nf.m, nf.n);
    case Family::ThetaS: return theta_s(nf.m, nf.n);
    case Family::SThetaS: return s0theta_s(nf.m, nf.n);
  }
  return kId;
}

namespace {

Word theta_word(Int m, Int n) {
  Word w;
  for (Int i = 1; i <= 2 * m + 2; ++i) w.push_back(static_cast<int>(mod(i, 3)));
  for (Int j = 2 * m + 1; j >= 2 * m + 1 - 2 * n; --j) w.push_back(static_cast<int>(mod(j, 3)));
  return w;
}

Word theta_s_word(Int m, Int n) {
  Word w = theta_word(m, n);
  const Elt t = theta(m, n);
  for (int s = 0; s < 3; ++s) {
    if (right_mul(t, s) == theta_s(m, n)) {
      w.push_back(s);
      return w;
    }
  }
  throw std::logic_error("theta_s is not a right cover of theta");
}

}  // namespace

Word representative_word(const NormalForm& nf) {
  Word w;
  switch (nf.family) {
    case Family::Id: break;
    case Family::X:
      for (Int i = 1; i <= nf.k; ++i) w.push_back(static_cast<int>(mod(i, 3)));
      break;
    case Family::Theta: w = theta_word(nf.m, nf.n); break;
    case Family::ThetaS: w = theta_s_word(nf.m, nf.n); break;
    case Family::SThetaS:
      w = theta_s_word(nf.m, nf.n);
      w.insert(w.begin(), 0);
      break;
  }
  return apply_word(nf.g, w);
}

Word normal_word(Elt z) { return representative_word(normal_form(z)); }

std::string word_string(Elt z) { return format_word(normal_word(z), true); }

std::string describe(const NormalForm& nf) {
  std::string core;
  const std::string mn = "(" + std::to_string(nf.m) + "," + std::to_string(nf.n) + ")";
  switch (nf.family) {
    case Family::Id: core = "id"; break;
    case Family::X: core = "x" + std::to_string(nf.k); break;
    case Family::Theta: core = "theta" + mn; break;
    case Family::ThetaS: core = "theta_s" + mn; break;
    case Family::SThetaS: core = "s0theta_s" + mn; break;
  }
  if (nf.g == GElt{}) return core;
  return name(nf.g) + "(" + core + ")";
}

bool is_dominant(Elt z) { return z.u > 0 && z.v > 0; }

std::optional<DomParams> dominant_params(Elt z) {
  if (!is_dominant(z) || !is_center(z)) return std::nullopt;
  DomParams d;
  d.s = mod(z.u, 6) == 4;
  const Int base = d.s ? 4 : 2;
  d.m = (z.u - base) / 6;
  d.n = (z.v - base) / 6;
  return d;
}

bool word_order(Elt a, Elt b) {
  const int la = length(a), lb = length(b);
  if (la != lb) return la < lb;
  const Word wa = normal_word(a), wb = normal_word(b);
  // Compare in printed digits so that s0 sorts last.
  auto key = [](Word w) {
    for (int& s : w) s = s == 0 ? 3 : s;
    return w;
  };
  return key(wa) < key(wb);
}

void sort_elements(std::vector<Elt>& v) {
  std::vector<std::pair<std::pair<int, Word>, Elt>> keyed;
  keyed.reserve(v.size());
  for (Elt z : v) {
    Word w = normal_word(z);
    for (int& s : w) s = s == 0 ? 3 : s;
    keyed.push_back({{length(z), std::move(w)}, z});
  }
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = keyed[i].second;
}

// ------------------------------------------------------------ lower intervals

Polygon c_polygon(Elt y) {
  for (const GElt& g : rotation_group()) {
    const Elt r = apply_inverse_pt(g, y);
    std::vector<Pt> pts;
    if (r == kId) {
      pts = {kId};
    } else if (is_dominant(r)) {
      for (Wf w : kWf) pts.push_back(apply(w, r));
    } else if (is_dominant(left_mul(0, r))) {
      const Elt z = left_mul(0, r);
      const Elt s1z = left_mul(1, z), s2z = left_mul(2, z);
      pts = {z, s1z, s2z, r, left_mul(0, s1z), left_mul(0, s2z)};
    } else if (Int k = 0; is_x_center(r, &k)) {
      if (k == 1) {
        pts = {kId, r};
      } else {
        const Elt a = left_mul(1, r);
        const Elt b = left_mul(2, a);
        pts = {r, a, b, left_mul(1, b)};
      }
    } else {
      continue;
    }
    for (auto& p : pts) p = apply_pt(g, p);
    return Polygon::hull(std::move(pts));
  }
  throw std::logic_error("no <delta,sigma> normalization for C_y");
}

Int lower_cardinality(Elt y) {
  const NormalForm nf = normal_form(y);
  const Int m = nf.m, n = nf.n, k = nf.k;
  const Int q = 3 * m * m + 3 * n * n + 12 * m * n;
  switch (nf.family) {
    case Family::Id: return 1;
    case Family::Theta: return q + 9 * m + 9 * n + 6;
    case Family::ThetaS: return q + 15 * m + 15 * n + 12;
    case Family::SThetaS: return q + 21 * m + 21 * n + 22;
    case Family::X: {
      if (k == 1) return 2;
      const Int j = k / 2;
      return k % 2 == 0 ? 3 * j * j + j : 3 * j * j + 5 * j;
    }
  }
  return 0;
}

bool leq_lower(Elt z, Elt y) { return c_polygon(y).member(z); }

// ------------------------------------------------------------ zones and stars

Wf zone_of(Pt p) {
  const Int a = p.u, b = p.v, r = p.u + p.v;
  if (r > -6) {
    if (a <= -6) return Wf::S1;
    if (b <= -6) return Wf::S2;
    return Wf::Id;
  }
  if (b > 0) return Wf::S1S2;
  if (a > 0) return Wf::S2S1;
  return Wf::W0;
}

std::vector<HalfPlane> zone_closure(Wf w) {
  switch (w) {
    case Wf::Id: return {{1, 0, 6}, {0, 1, 6}, {1, 1, 6}};
    case Wf::S1: return {{-1, 0, -6}, {1, 1, 6}};
    case Wf::S2: return {{0, -1, -6}, {1, 1, 6}};
    case Wf::S1S2: return {{-1, -1, -6}, {0, 1, 0}};
    case Wf::S2S1: return {{-1, -1, -6}, {1, 0, 0}};
    case Wf::W0: return {{-1, 0, 0}, {0, -1, 0}, {-1, -1, -6}};
  }
  return {};
}

namespace {

Star dominant_star(Elt x) {
  Star st;
  std::array<Pt, 7> xs{};
  xs[0] = x;
  const std::array<std::pair<Root, Int>, 6> refl{{{Root::A1, -1},
                                                   {Root::Rho, -1},
                                                   {Root::A2, 0},
                                                   {Root::A1, 0},
                                                   {Root::Rho, -1},
                                                   {Root::A2, -1}}};
  for (int i = 0; i < 6; ++i) xs[i + 1] = reflect(refl[i].first, refl[i].second, xs[i]);
  if (xs[6] != xs[0]) throw std::logic_error("star reflections do not close up");
  const std::array<Pt, 6> dirs{Pt{0, 1}, Pt{-1, 1}, Pt{-1, 0}, Pt{0, -1}, Pt{1, -1}, Pt{1, 0}};
  std::array<Pt, 6> us{};
  for (int i = 0; i < 6; ++i) {
    const Pt a = xs[i], b = xs[i + 1];
    bool ok = false;
    for (Pt cand : {a + rot60(b - a), a + rot_m60(b - a)}) {
      const Pt w = 2 * cand - a - b;
      if (cross(w, dirs[i]) == 0 && w.u * dirs[i].u + w.v * dirs[i].v > 0) {
        us[(i + 1) % 6] = cand;
        ok = true;
      }
    }
    if (!ok) throw std::logic_error("star apex orientation not found");
  }
  st.inner.assign(xs.begin(), xs.begin() + 6);
  st.outer.assign(us.begin(), us.end());
  st.t1 = Polygon::hull({us[0], us[2], us[4]});
  st.t2 = Polygon::hull({us[1], us[3], us[5]});
  return st;
}

// Two origin-centred triangles {(mu, v) >= min_mu (mu, cen x)} over the orbits
// {w1, w2 - w1, -w2} and {w2, w1 - w2, -w1}.
Star triangle_star(Elt x) {
  const Int f1 = 2 * x.u + x.v, f2 = x.v - x.u, f3 = -(x.u + 2 * x.v);
  const Int g1 = x.u + 2 * x.v, g2 = x.u - x.v, g3 = -(2 * x.u + x.v);
  const Int m1 = std::min({f1, f2, f3});
  const Int m2 = std::min({g1, g2, g3});
  Star st;
  st.t1 = Polygon::hull({{0, m1}, {-m1, 0}, {m1, -m1}});
  st.t2 = Polygon::hull({{m2, 0}, {0, -m2}, {-m2, m2}});
  st.outer = {Pt{0, m1}, Pt{m2, 0}, Pt{-m1, 0}, Pt{0, -m2}, Pt{m1, -m1}, Pt{-m2, m2}};
  return st;
}

struct StarFrame {
  GElt g;      // x = g(r)
  Elt r;       // normalized element
  bool dominant;
};

StarFrame star_frame(Elt x) {
  for (const GElt& g : rotation_group()) {
    const Elt r = apply_inverse_pt(g, x);
    if (is_dominant(r)) return {g, r, true};
    if (is_dominant(left_mul(0, r)) || is_x_center(delta_pt(r), nullptr)) return {g, r, false};
  }
  throw std::logic_error("no <delta,sigma> normalization for the star");
}

}  // namespace

Star star(Elt x) {
  if (x == kId) throw UndefinedStarError("the star of the identity is undefined");
  const StarFrame f = star_frame(x);
  Star st = f.dominant ? dominant_star(f.r) : triangle_star(f.r);
  if (f.g == GElt{}) return st;
  auto map = [&](Pt p) { return apply_pt(f.g, p); };
  for (auto& p : st.inner) p = map(p);
  for (auto& p : st.outer) p = map(p);
  st.t1 = st.t1.mapped(map);
  st.t2 = st.t2.mapped(map);
  return st;
}

bool geq_geom(Elt x, Elt z) {
  if (x == kId) return true;
  const StarFrame f = star_frame(x);
  const Star st = f.dominant ? dominant_star(f.r) : triangle_star(f.r);
  return !st.interior(apply_inverse_pt(f.g, z));
}

bool leq_geom(Elt x, Elt y) { return leq_lower(x, y); }

std::vector<Elt> interval_geom(Elt x, Elt y) {
  std::vector<Elt> out;
  if (!leq_lower(x, y)) return out;
  const Polygon c = c_polygon(y);
  if (x == kId) {
    out = c.lattice_centers();
  } else {
    const StarFrame f = star_frame(x);
    const Star st = f.dominant ? dominant_star(f.r) : triangle_star(f.r);
    for (Elt z : c.lattice_centers())
      if (!st.interior(apply_inverse_pt(f.g, z))) out.push_back(z);
  }
  sort_elements(out);
  return out;
}

// ------------------------------------------------------------ covers

namespace {

std::vector<Elt> reflection_neighbours(Elt z, int target) {
  std::vector<Elt> out;
  const Int l = length(z);
  for (Root r : kRoots) {
    for (Int k = -l - 3; k <= l + 3; ++k) {
      const Elt t = reflect(r, k, z);
      if (length(t) == target) out.push_back(t);
    }
  }
  dedup(out);
  return out;
}

}  // namespace

std::vector<Elt> lower_covers(Elt z) { return reflection_neighbours(z, length(z) - 1); }
std::vector<Elt> upper_covers(Elt z) { return reflection_neighbours(z, length(z) + 1); }

CoverSets covers_closed(Elt z) {
  CoverSets cs;
  auto keep = [](std::vector<Elt>& out, Int m, Int n, Elt (*f)(Int, Int)) {
    if (m >= 0 && n >= 0) out.push_back(f(m, n));
  };
  auto lower_dominant = [&](Elt y, const DomParams& d) {
    std::vector<Elt> out{left_mul(1, y), left_mul(2, y)};
    if (!d.s) {
      keep(out, d.m - 1, d.n, theta_s);
      keep(out, d.m, d.n - 1, theta_s);
    } else {
      out.push_back(theta(d.m, d.n));
      keep(out, d.m - 1, d.n + 1, theta);
      keep(out, d.m + 1, d.n - 1, theta);
    }
    return out;
  };
  if (auto d = dominant_params(z)) {
    cs.lower = lower_dominant(z, *d);
    cs.lower_closed = true;
    if (d->m >= 1 && d->n >= 1) {
      const Int m = d->m, n = d->n;
      if (!d->s) {
        cs.upper = {theta_s(m, n),          theta_s(m + 1, n - 1),
                    theta_s(m - 1, n + 1),  s0theta(m, n),
                    delta_pt(s0theta(m - 1, n + 1)), delta_pt(delta_pt(s0theta(m + 1, n - 1)))};
      } else {
        cs.upper = {theta(m + 1, n), theta(m, n + 1), s0theta_s(m, n), delta_pt(s0theta_s(m - 1, n + 1)),
                    delta_pt(delta_pt(s0theta_s(m + 1, n - 1)))};
      }
      cs.upper_closed = true;
    }
  } else if (auto e = dominant_params(left_mul(0, z))) {
    const Elt y = left_mul(0, z);
    for (Elt c : lower_dominant(y, *e)) cs.lower.push_back(left_mul(0, c));
    cs.lower.push_back(y);
    cs.lower_closed = true;
    if (e->s && e->m >= 1 && e->n >= 1) {
      const Int m = e->m, n = e->n;
      cs.upper = {s0theta(m, n + 1), s0theta(m + 1, n), delta_pt(theta_s(m + 1, n)),
                  delta_pt(delta_pt(theta_s(m, n + 1)))};
      cs.upper_closed = true;
    }
  } else if (Int k = 0; is_x_center(z, &k) && k >= 4) {
    cs.lower = {x(k - 1), left_mul(1, z)};
    if (k % 2 == 0) {
      const Elt t = theta((k - 4) / 2, 0);
      cs.lower.push_back(t);
      cs.lower.push_back(delta_pt(delta_pt(t)));
    } else {
      cs.lower.push_back(delta_pt(s0theta((k - 5) / 2, 0)));
      cs.lower.push_back(delta_pt(delta_pt(theta_s((k - 5) / 2, 0))));
    }
    cs.lower_closed = true;
  }
  if (!cs.lower_closed) cs.lower = lower_covers(z);
  if (!cs.upper_closed) cs.upper = upper_covers(z);
  dedup(cs.lower);
  dedup(cs.upper);
  return cs;
}

bool is_dihedral(Elt x, Elt y) {
  if (!leq_lower(x, y)) throw EmptyIntervalError("empty interval");
  if (length(y) - length(x) <= 1) return true;
  int atoms = 0;
  for (Elt a : upper_covers(x))
    if (leq_lower(a, y)) ++atoms;
  return atoms == 2;
}

// ------------------------------------------------------------ interval polygons

namespace {

Pt v_of(Wf w) {
  switch (w) {
    case Wf::Id: return {};
    case Wf::S1: return lattice::alpha1;
    case Wf::S2: return lattice::alpha2;
    default: return lattice::rho;
  }
}

}  // namespace

Polygon par(Elt x, Elt y, Wf w) {
  const Pt d = y - x - v_of(w);
  const Int c1 = pair_w18(1, d), c2 = pair_w18(2, d);
  if (c1 < 0 || c2 < 0) return {};
  if (c1 % 3 != 0 || c2 % 3 != 0) throw std::logic_error("parallelogram corner off the lattice");
  const Pt a = apply(w, x + v_of(w));
  const Pt b = apply(w, y);
  const Pt e1 = (c1 / 3) * apply(w, Pt{2, -1});
  const Pt e2 = (c2 / 3) * apply(w, Pt{-1, 2});
  return Polygon::hull({a, a + e1, a + e2, b});
}

Polygon pgn(Elt x, Elt y, Wf w) {
  const Polygon p = par(x, y, w);
  if (p.empty()) return p;
  return p.clipped(zone_closure(w));
}

const char* name(Shape s) {
  switch (s) {
    case Shape::Parallelogram: return "parallelogram";
    case Shape::Pentagon: return "pentagon";
    case Shape::Hexagon: return "hexagon";
  }
  return "?";
}

IntervalType interval_type(Elt x, Elt y) {
  const Polygon p = pgn(x, y);
  std::vector<Pt> rest;
  for (Pt v : p.vertices())
    if (v != x && v != y) rest.push_back(v);
  IntervalType t;
  if (rest.size() <= 2) return t;
  if (rest.size() >= 4) {
    t.shape = Shape::Hexagon;
    return t;
  }
  t.shape = Shape::Pentagon;
  int on_a2 = 0, on_a1 = 0;
  for (Pt v : p.vertices()) {
    on_a2 += pair6(Root::A2, v) == -6;
    on_a1 += pair6(Root::A1, v) == -6;
  }
  t.i0 = on_a2 >= 2 ? 1 : (on_a1 >= 2 ? 2 : 0);
  return t;
}

namespace {

bool positive_multiple(Pt d, Pt dir) {
  return d != Pt{} && cross(d, dir) == 0 && d.u * dir.u + d.v * dir.v > 0;
}

}  // namespace

CornerData corner_data(Elt x, Elt y) {
  CornerData cd;
  const Polygon p = pgn(x, y);
  const std::array<Pt, 2> alpha{lattice::alpha1, lattice::alpha2};
  for (int i = 0; i < 2; ++i) {
    for (Pt v : p.vertices()) {
      if (positive_multiple(v - x, alpha[i])) cd.v_x[i] = v;
      if (positive_multiple(y - v, alpha[i])) cd.v_y[i] = v;
    }
    if (cd.v_x[i]) {
      auto cs = segment_centers(x, *cd.v_x[i]);
      if (!cs.empty()) cd.z_x[i] = cs.back();
    }
    if (cd.v_y[i]) {
      auto cs = segment_centers(y, *cd.v_y[i]);
      if (!cs.empty()) cd.z_y[i] = cs.back();
    }
  }
  return cd;
}

bool is_full(Elt x, Elt y) {
  if (!leq_lower(x, y)) return false;
  for (Elt z : upper_covers(x))
    if (!leq_lower(z, y)) return false;
  for (Elt z : lower_covers(y))
    if (!geq_geom(x, z)) return false;
  return true;
}

bool is_thick(Elt x, Elt y) {
  if (!leq_lower(x, y)) return false;
  const CornerData cd = corner_data(x, y);
  for (int i = 0; i < 2; ++i) {
    if (!cd.z_x[i] || !cd.z_y[i]) return false;
    if (length(*cd.z_x[i]) - length(x) < 4) return false;
    if (length(y) - length(*cd.z_y[i]) < 4) return false;
  }
  return true;
}

bool is_thick_cone(Elt x, Elt y) {
  if (!leq_lower(x, y)) return false;
  const CornerData cd = corner_data(x, y);
  const std::array<Pt, 2> alpha{lattice::alpha1, lattice::alpha2};
  for (int i = 0; i < 2; ++i) {
    if (!cd.z_x[i] || !cd.z_y[i]) return false;
    // z - x = t alpha_i with t >= 2, i.e. z - x - 2 alpha_i is a nonnegative multiple.
    const Pt a = *cd.z_x[i] - x - 2 * alpha[i];
    const Pt b = y - *cd.z_y[i] - 2 * alpha[i];
    if (a != Pt{} && !positive_multiple(a, alpha[i])) return false;
    if (b != Pt{} && !positive_multiple(b, alpha[i])) return false;
  }
  return true;
}

SideLengths side_lengths(Elt x, Elt y) {
  const auto dx = dominant_params(x), dy = dominant_params(y);
  if (!dx || !dy) throw UnsupportedIntervalError("side lengths need dominant endpoints");
  const CornerData cd = corner_data(x, y);
  const Rat half(1, 2), three_half(3, 2);
  auto gamma = [&](Elt z) { return length(z) % 2 == 0 ? half : Rat(1); };
  const Rat eps = dy->s ? Rat(1) : half;
  const Rat eta = dx->s ? half : Rat(1);
  SideLengths out;
  for (int i = 0; i < 2; ++i) {
    const int j = 1 - i;
    if (!cd.v_x[i] || !cd.v_y[i] || !cd.z_x[i] || !cd.z_y[i] || !cd.v_y[j] || !cd.z_y[j])
      throw UnsupportedIntervalError("degenerate corner data");
    // y to v_i(y)
    {
      const Elt z = *cd.z_y[i];
      Rat d = three_half * Rat(length(y) - length(z) - 1) + eps;
      d += *cd.v_y[i] == z ? gamma(z) : three_half;
      out.formula[i] = d * d;
      out.geometric[i] = dist_sq(y, *cd.v_y[i]);
    }
    // v_j(y) to v_i(x)
    {
      const Elt zi = *cd.z_x[i], zj = *cd.z_y[j];
      Rat d2(0);
      if (*cd.v_x[i] != zi) {
        const Rat t(length(zj) - length(zi) - 1);
        d2 = Rat(3, 4) * t * t;
      }
      out.formula[2 + i] = d2;
      out.geometric[2 + i] = dist_sq(*cd.v_y[j], *cd.v_x[i]);
    }
    // v_i(x) to x
    {
      const Elt z = *cd.z_x[i];
      Rat d = three_half * Rat(length(z) - length(x) - 1) + eta + three_half;
      if (*cd.v_x[i] == z) d -= gamma(z);
      out.formula[4 + i] = d * d;
      out.geometric[4 + i] = dist_sq(*cd.v_x[i], x);
    }
  }
  return out;
}

// ------------------------------------------------------------ dihedral sets

namespace {

std::vector<Elt> dihedral_rest_left(Elt y, const DomParams& d) {
  const Int m = d.m, n = d.n;
  std::vector<Elt> out{left_mul(1, left_mul(2, y)), left_mul(2, left_mul(1, y)),
                       left_mul(1, left_mul(2, left_mul(1, y)))};
  auto th = [&](Int a, Int b) {
    if (a >= 0 && b >= 0) out.push_back(theta(a, b));
  };
  auto ths = [&](Int a, Int b) {
    if (a >= 0 && b >= 0) out.push_back(theta_s(a, b));
  };
  auto sth = [&](int s, Int a, Int b) {
    if (a >= 0 && b >= 0) out.push_back(left_mul(s, theta(a, b)));
  };
  auto sths = [&](int s, Int a, Int b) {
    if (a >= 0 && b >= 0) out.push_back(left_mul(s, theta_s(a, b)));
  };
  if (!d.s && n == 0) {
    out.push_back(x(2 * m));
    out.push_back(x(2 * m + 1));
    th(m - 1, 0);
  } else if (!d.s) {
    ths(m - 1, n - 1);
    th(m, n - 1);
    th(m - 1, n);
    sths(1, m, n - 1);
    sths(2, m - 1, n);
  } else if (n == 0) {
    out.push_back(x(2 * m + 2));
    ths(m - 1, 0);
    sth(1, m, 0);
    sth(2, m - 1, 1);
  } else {
    th(m, n);
    ths(m, n - 1);
    ths(m - 1, n);
    sth(1, m, n);
    sth(2, m, n);
    sth(2, m - 1, n + 1);
    sth(1, m + 1, n - 1);
  }
  return out;
}

}  // namespace

std::vector<Elt> dihedral_upper(Elt y) {
  const auto d = dominant_params(y);
  if (!d) throw std::invalid_argument("dihedral_upper needs a dominant element");
  std::vector<Elt> out;
  for (Elt z : segment_centers(y, left_mul(1, y))) out.push_back(z);
  for (Elt z : segment_centers(y, left_mul(2, y))) out.push_back(z);
  std::vector<Elt> rest;
  if (d->m >= d->n) {
    rest = dihedral_rest_left(y, *d);
  } else {
    const Elt ys = flip(y);
    for (Elt z : dihedral_rest_left(ys, *dominant_params(ys))) rest.push_back(flip(z));
  }
  out.insert(out.end(), rest.begin(), rest.end());
  const auto l = covers_closed(y).lower;
  out.insert(out.end(), l.begin(), l.end());
  sort_elements(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Elt> dihedral_lower(Elt x) {
  const auto d = dominant_params(x);
  if (!d) throw std::invalid_argument("dihedral_lower needs a dominant element");
  const Star st = star(x);
  const auto& u = st.outer;  // u_1..u_6
  std::vector<Elt> sgm;
  for (Elt z : segment_centers(u[0], u[2]))
    if (geq_geom(x, z)) sgm.push_back(z);
  for (Elt z : segment_centers(u[1], u[5]))
    if (geq_geom(x, z)) sgm.push_back(z);
  dedup(sgm);
  std::vector<Elt> out = sgm;
  // Everything within two steps above x that is not on the segments.
  std::vector<Elt> near{x};
  for (Elt a : upper_covers(x)) {
    near.push_back(a);
    for (Elt b : upper_covers(a)) near.push_back(b);
  }
  dedup(near);
  for (Elt z : near)
    if (!std::binary_search(sgm.begin(), sgm.end(), z)) out.push_back(z);
  if (d->s) out.push_back(theta(d->m + 1, d->n + 1));
  sort_elements(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Elt> dihedral_upper_brute(Elt y) {
  std::vector<Elt> out;
  for (Elt z : interval_geom(kId, y))
    if (is_dihedral(z, y)) out.push_back(z);
  return out;
}

std::vector<Elt> dihedral_lower_brute(Elt x, int max_len) {
  std::vector<Elt> out;
  for (Elt z : ball(max_len))
    if (geq_geom(x, z) && is_dihedral(x, z)) out.push_back(z);
  return out;
}

std::vector<Elt> dihedral_below(Elt u) {
  std::vector<Elt> out;
  const int lu = length(u);
  for (Elt z : interval_geom(kId, u))
    if (lu - length(z) >= 2 && is_dihedral(z, u)) out.push_back(z);
  return out;
}

// ------------------------------------------------------------ posets

IntervalPoset interval_poset(Elt x, Elt y, std::vector<Elt>* elements) {
  std::vector<Elt> elems = interval_geom(x, y);
  if (elems.empty()) throw EmptyIntervalError("empty interval");
  std::unordered_map<Pt, int, PtHash> pos;
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
  IntervalPoset p;
  const int base = length(x);
  p.rank.resize(elems.size());
  p.up.assign(elems.size(), {});
  p.down.assign(elems.size(), {});
  for (std::size_t i = 0; i < elems.size(); ++i) {
    p.rank[i] = length(elems[i]) - base;
    if (i == 0) continue;
    for (Elt c : lower_covers(elems[i])) {
      auto it = pos.find(c);
      if (it == pos.end()) continue;
      p.down[i].push_back(it->second);
      p.up[it->second].push_back(static_cast<int>(i));
    }
  }
  for (auto& v : p.up) std::sort(v.begin(), v.end());
  for (auto& v : p.down) std::sort(v.begin(), v.end());
  if (elements) *elements = std::move(elems);
  return p;
}

std::vector<Elt> ball(int max_len) {
  std::vector<Elt> out{kId};
  std::unordered_set<Pt, PtHash> seen{kId};
  std::size_t begin = 0;
  for (int l = 1; l <= max_len; ++l) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (int s = 0; s < 3; ++s) {
        const Elt t = right_mul(out[i], s);
        if (length(t) == l && seen.insert(t).second) out.push_back(t);
      }
    begin = end;
  }
  sort_elements(out);
  return out;
}

}  // namespace bruhat::a2
