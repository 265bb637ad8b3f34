#include "bruhat/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace bruhat {

std::ostream& operator<<(std::ostream& os, Pt p) { return os << '(' << p.u << ',' << p.v << ')'; }

Rat pairing(Root r, Pt p) { return Rat(pair6(r, p), 6); }

Rat pairing_weight(int i, Pt p) { return Rat(pair_w18(i, p), 18); }

Rat dist_sq(Pt a, Pt b) {
  const Pt d = a - b;
  return Rat(d.u * d.u + d.u * d.v + d.v * d.v, 12);
}

bool cone_member(Pt p, Pt apex, Pt d1, Pt d2, bool strict) {
  const Pt r = p - apex;
  const Int det = cross(d1, d2);
  if (det == 0) {
    // Degenerate: a single ray along d1 (d2 parallel or zero).
    if (cross(d1, r) != 0) return false;
    const Int dot = d1.u * r.u + d1.v * r.v;
    if (r == Pt{}) return !strict;
    return dot > 0;
  }
  // r = a d1 + b d2  =>  a = cross(r, d2)/det, b = cross(d1, r)/det
  Int a = cross(r, d2);
  Int b = cross(d1, r);
  if (det < 0) { a = -a; b = -b; }
  return strict ? (a > 0 && b > 0) : (a >= 0 && b >= 0);
}

namespace {

bool is_center(Pt p) {
  auto m = [](Int x) { return ((x % 6) + 6) % 6; };
  return m(p.u) == m(p.v) && (m(p.u) == 2 || m(p.u) == 4);
}

struct RPt {
  Rat u, v;
};

Rat eval(const HalfPlane& h, const RPt& p) { return Rat(h.a) * p.u + Rat(h.b) * p.v + Rat(h.c); }

}  // namespace

Polygon Polygon::hull(std::vector<Pt> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  Polygon out;
  if (pts.size() <= 1) {
    out.vs_ = std::move(pts);
    return out;
  }
  std::vector<Pt> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() == 2 && h[0] == h[1]) h.resize(1);
  out.vs_ = std::move(h);
  return out;
}

bool Polygon::member(Pt p, bool strict) const {
  if (vs_.empty()) return false;
  if (vs_.size() == 1) return !strict && p == vs_[0];
  if (vs_.size() == 2) {
    if (strict) return false;
    const Pt a = vs_[0], b = vs_[1];
    if (cross(b - a, p - a) != 0) return false;
    return std::min(a.u, b.u) <= p.u && p.u <= std::max(a.u, b.u) && std::min(a.v, b.v) <= p.v &&
           p.v <= std::max(a.v, b.v);
  }
  for (std::size_t i = 0; i < vs_.size(); ++i) {
    const Pt a = vs_[i], b = vs_[(i + 1) % vs_.size()];
    const Int c = cross(b - a, p - a);
    if (strict ? c <= 0 : c < 0) return false;
  }
  return true;
}

Polygon Polygon::translated(Pt d) const {
  Polygon out = *this;
  for (auto& p : out.vs_) p += d;
  return out;
}

Polygon Polygon::mapped(const std::function<Pt(Pt)>& f) const {
  std::vector<Pt> pts;
  pts.reserve(vs_.size());
  for (Pt p : vs_) pts.push_back(f(p));
  return hull(std::move(pts));
}

Pt Polygon::lo() const {
  Pt r = vs_.at(0);
  for (Pt p : vs_) r = {std::min(r.u, p.u), std::min(r.v, p.v)};
  return r;
}

Pt Polygon::hi() const {
  Pt r = vs_.at(0);
  for (Pt p : vs_) r = {std::max(r.u, p.u), std::max(r.v, p.v)};
  return r;
}

std::vector<Pt> Polygon::lattice_centers(bool strict) const {
  std::vector<Pt> out;
  if (vs_.empty()) return out;
  const Pt a = lo(), b = hi();
  for (Int u = a.u; u <= b.u; ++u) {
    for (Int v = a.v; v <= b.v; ++v) {
      const Pt p{u, v};
      if (is_center(p) && member(p, strict)) out.push_back(p);
    }
  }
  return out;
}

Polygon Polygon::clipped(const std::vector<HalfPlane>& hps) const {
  std::vector<RPt> cur;
  for (Pt p : vs_) cur.push_back({Rat(p.u), Rat(p.v)});
  for (const auto& h0 : hps) {
    const HalfPlane h = h0.closure();
    if (cur.empty()) break;
    std::vector<RPt> next;
    if (cur.size() == 1) {
      if (eval(h, cur[0]) >= Rat(0)) next = cur;
      cur = std::move(next);
      continue;
    }
    for (std::size_t i = 0; i < cur.size(); ++i) {
      const RPt& p = cur[i];
      const RPt& q = cur[(i + 1) % cur.size()];
      const Rat fp = eval(h, p), fq = eval(h, q);
      if (fp >= Rat(0)) next.push_back(p);
      const Rat z(0);
      if ((fp > z && fq < z) || (fp < z && fq > z)) {
        const Rat t = fp / (fp - fq);
        next.push_back({p.u + t * (q.u - p.u), p.v + t * (q.v - p.v)});
      }
    }
    cur = std::move(next);
  }
  std::vector<Pt> pts;
  for (const auto& p : cur) {
    if (p.u.denominator() != 1 || p.v.denominator() != 1)
      throw std::logic_error("clipped polygon has a non-lattice vertex");
    pts.push_back({p.u.numerator(), p.v.numerator()});
  }
  return hull(std::move(pts));
}

bool operator==(const Polygon& a, const Polygon& b) {
  auto x = a.vs_, y = b.vs_;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

std::ostream& operator<<(std::ostream& os, const Polygon& p) {
  os << '[';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << p.vertices()[i];
  return os << ']';
}

std::optional<Congruence> congruent_mod_flip(const Polygon& p, const Polygon& q) {
  if (p.size() != q.size() || p.empty()) return std::nullopt;
  auto qs = q.vertices();
  std::sort(qs.begin(), qs.end());
  for (bool flipped : {false, true}) {
    auto ps = p.vertices();
    if (flipped)
      for (auto& v : ps) v = flip(v);
    std::sort(ps.begin(), ps.end());
    const Pt d = qs[0] - ps[0];
    bool ok = true;
    for (std::size_t i = 0; ok && i < ps.size(); ++i) ok = ps[i] + d == qs[i];
    if (ok) return Congruence{flipped, d};
  }
  return std::nullopt;
}

}  // namespace bruhat
