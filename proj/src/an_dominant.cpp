#include "bruhat/an_dominant.hpp"

#include <algorithm>
#include <unordered_set>

namespace bruhat::an {

std::array<Rat, kMaxRank> WeightVec::root_coords() const {
  // Inverse Cartan matrix of A_n: min(i,j) (n+1-max(i,j)) / (n+1), 1-based.
  std::array<Rat, kMaxRank> r{};
  for (int i = 1; i <= n; ++i) {
    Int acc = 0;
    for (int j = 1; j <= n; ++j) acc += std::min(i, j) * (n + 1 - std::max(i, j)) * c[j - 1];
    r[i - 1] = Rat(acc, n + 1);
  }
  return r;
}

bool WeightVec::dominant() const {
  for (int i = 0; i < n; ++i)
    if (c[i] < 0) return false;
  return true;
}

bool WeightVec::in_root_lattice() const {
  const auto r = root_coords();
  for (int i = 0; i < n; ++i)
    if (r[i].denominator() != 1) return false;
  return true;
}

WeightVec WeightVec::operator-(const WeightVec& o) const {
  WeightVec d{n, {}};
  for (int i = 0; i < n; ++i) d.c[i] = c[i] - o.c[i];
  return d;
}

WeightVec WeightVec::operator+(const WeightVec& o) const {
  WeightVec d{n, {}};
  for (int i = 0; i < n; ++i) d.c[i] = c[i] + o.c[i];
  return d;
}

bool cone_leq(const WeightVec& lambda, const WeightVec& mu) {
  const auto r = (mu - lambda).root_coords();
  for (int i = 0; i < lambda.n; ++i)
    if (r[i] < Rat(0)) return false;
  return true;
}

bool dominance_leq(const WeightVec& lambda, const WeightVec& mu) {
  if (!lambda.dominant() || !mu.dominant()) throw DomainError("dominance order needs dominant weights");
  return cone_leq(lambda, mu);
}

void require_type_a(const GroupSpec& g) {
  if (g.family() != Family::A) throw std::invalid_argument("type A required, got " + g.name());
}

DomElt DomElt::make(const GroupSpec& g, const GroupElt& w) {
  const int n = g.rank();
  DomElt d{w, {}};
  for (int i = 0; i <= n; ++i) {
    std::array<Int, kMaxRank> p{};
    if (i > 0) p[i - 1] = -1;
    d.v.push_back({n, w.apply_scaled(p, 1)});
  }
  return d;
}

bool DomElt::dominant() const {
  return std::all_of(v.begin(), v.end(), [](const WeightVec& x) { return x.dominant(); });
}

bool bruhat_leq_dominant(const DomElt& x, const DomElt& y) {
  if (!x.dominant() || !y.dominant()) throw DomainError("vertex criterion needs dominant elements");
  for (std::size_t i = 0; i < x.v.size(); ++i) {
    const WeightVec d = y.v[i] - x.v[i];
    if (!d.in_root_lattice()) throw std::logic_error("vertex difference outside the root lattice");
    if (!cone_leq(x.v[i], y.v[i])) return false;
  }
  return true;
}

bool par_i(const DomElt& x, const DomElt& y, const DomElt& z, int i) {
  return z.v[i].dominant() && cone_leq(x.v[i], z.v[i]) && cone_leq(z.v[i], y.v[i]);
}

namespace {

std::vector<GroupElt> finite_weyl_group(const GroupSpec& g) {
  std::vector<GroupElt> out{GroupElt::identity(g.rank())};
  std::unordered_set<GroupElt, GroupEltHash> seen(out.begin(), out.end());
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int s = 1; s <= g.rank(); ++s) {
      const GroupElt e = out[k] * GroupElt::generator(g, s);
      if (seen.insert(e).second) out.push_back(e);
    }
  return out;
}

DomElt dominant_or_throw(const GroupSpec& g, const GroupElt& w) {
  DomElt d = DomElt::make(g, w);
  if (!d.dominant()) throw DomainError("element is not dominant");
  return d;
}

}  // namespace

std::vector<GroupElt> dominant_interval(const GroupSpec& g, const GroupElt& x, const GroupElt& y) {
  require_type_a(g);
  const int n = g.rank();
  const DomElt X = dominant_or_throw(g, x), Y = dominant_or_throw(g, y);
  if (!bruhat_leq_dominant(X, Y)) return {};
  // A dominant mu below y(0) has root coordinates r_i <= R_i, so its
  // fundamental coordinates 2 r_i - r_{i-1} - r_{i+1} are at most 2 R_i.
  const auto R = Y.v[0].root_coords();
  Coweight hi{};
  for (int i = 0; i < n; ++i) hi[i] = boost::rational_cast<Int>(2 * R[i]) + 1;
  const auto wf = finite_weyl_group(g);
  std::vector<GroupElt> out;
  WeightVec mu{n, {}};
  for (;;) {
    if (mu.in_root_lattice() && cone_leq(mu, Y.v[0]) && cone_leq(X.v[0], mu)) {
      for (const GroupElt& w : wf) {
        GroupElt z = w;
        z.t = mu.c;
        const DomElt Z = DomElt::make(g, z);
        if (!Z.dominant()) continue;
        bool ok = true;
        for (int i = 0; ok && i <= n; ++i) ok = par_i(X, Y, Z, i);
        if (ok) out.push_back(z);
      }
    }
    int k = 0;
    while (k < n && ++mu.c[k] > hi[k]) mu.c[k++] = 0;
    if (k == n) break;
  }
  std::vector<std::pair<int, std::size_t>> key;
  for (std::size_t i = 0; i < out.size(); ++i) key.emplace_back(geometric_length(g, out[i]), i);
  std::sort(key.begin(), key.end());
  std::vector<GroupElt> sorted;
  for (auto [l, i] : key) sorted.push_back(out[i]);
  return sorted;
}

std::vector<int> wall_index_set(const GroupSpec& g, const GroupElt& x, const GroupElt& y) {
  std::vector<char> hit(g.rank() + 1, 0);
  for (const GroupElt& z : dominant_interval(g, x, y)) {
    const DomElt Z = DomElt::make(g, z);
    for (const auto& v : Z.v)
      for (int i = 1; i <= g.rank(); ++i)
        if (v.c[i - 1] == 0) hit[i] = 1;
  }
  std::vector<int> out;
  for (int i = 1; i <= g.rank(); ++i)
    if (hit[i]) out.push_back(i);
  return out;
}

TranslateReport dominant_translate_iso(const GroupSpec& g, const GroupElt& x, const GroupElt& y,
                                       const WeightVec& lambda) {
  const auto walls = wall_index_set(g, x, y);
  if (!lambda.in_root_lattice() || !lambda.dominant()) throw InadmissibleShiftError("shift must be dominant in the root lattice");
  for (int i : walls)
    if (lambda.c[i - 1] != 0) throw InadmissibleShiftError("shift moves along a wall met by the interval");
  const auto S = dominant_interval(g, x, y);
  const auto T = dominant_interval(g, translate(x, lambda), translate(y, lambda));
  TranslateReport r;
  r.size = S.size();
  std::unordered_set<GroupElt, GroupEltHash> target(T.begin(), T.end());
  r.bijection = S.size() == T.size();
  for (const auto& z : S) r.bijection = r.bijection && target.count(translate(z, lambda));
  std::vector<DomElt> a, b;
  for (const auto& z : S) {
    a.push_back(DomElt::make(g, z));
    b.push_back(DomElt::make(g, translate(z, lambda)));
  }
  r.order_preserved = true;
  for (std::size_t i = 0; r.order_preserved && i < S.size(); ++i)
    for (std::size_t j = 0; j < S.size(); ++j)
      if (bruhat_leq_dominant(a[i], a[j]) != bruhat_leq_dominant(b[i], b[j])) {
        r.order_preserved = false;
        break;
      }
  return r;
}

}  // namespace bruhat::an
