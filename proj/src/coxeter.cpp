#include "bruhat/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

namespace bruhat {

namespace {

using Vec = std::array<Int, kMaxRank>;

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

// ---------------------------------------------------------------- GroupSpec

GroupSpec GroupSpec::affine(Family f, int rank) {
  GroupSpec g;
  g.family_ = f;
  g.n_ = rank;
  if (rank < 2 || rank > kMaxRank) throw std::invalid_argument("unsupported rank");
  if (f == Family::G && rank != 2) throw std::invalid_argument("G requires rank 2");
  auto& a = g.cartan_;
  for (int i = 0; i < rank; ++i) {
    a[i][i] = 2;
    if (i + 1 < rank) a[i][i + 1] = a[i + 1][i] = -1;
  }
  // Long/short data: d_i = (alpha_i, alpha_i) / 2 up to a common factor.
  Vec d{};
  for (int i = 0; i < rank; ++i) d[i] = 1;
  switch (f) {
    case Family::A:
      for (int i = 0; i < rank; ++i) g.theta_[i] = 1;
      break;
    case Family::B:
      a[rank - 1][rank - 2] = -2;
      for (int i = 0; i < rank; ++i) { g.theta_[i] = i == 0 ? 1 : 2; d[i] = 2; }
      d[rank - 1] = 1;
      break;
    case Family::C:
      a[rank - 2][rank - 1] = -2;
      for (int i = 0; i < rank; ++i) { g.theta_[i] = i == rank - 1 ? 1 : 2; d[i] = 1; }
      d[rank - 1] = 2;
      break;
    case Family::G:
      a[0][1] = -3;
      g.theta_ = {3, 2};
      d[0] = 1;
      d[1] = 3;
      break;
  }
  const Int dtheta = *std::max_element(d.begin(), d.begin() + rank);
  for (int k = 0; k < rank; ++k) {
    Int s = 0;
    for (int j = 0; j < rank; ++j) s += g.theta_[j] * a[k][j] * d[k];
    if (s % dtheta != 0) throw std::logic_error("non-integral highest coroot");
    g.theta_coroot_[k] = s / dtheta;
  }
  Int check = 0;
  for (int k = 0; k < rank; ++k) check += g.theta_[k] * g.theta_coroot_[k];
  if (check != 2) throw std::logic_error("highest root/coroot pairing is not 2");
  g.finish();
  return g;
}

GroupSpec GroupSpec::parse(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  for (const std::string suffix : {"AFF", "~"})
    if (s.size() > suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0)
      s.resize(s.size() - suffix.size());
  if (s.size() < 2) throw std::invalid_argument("unknown group: " + raw);
  Family f;
  switch (s[0]) {
    case 'A': f = Family::A; break;
    case 'B': f = Family::B; break;
    case 'C': f = Family::C; break;
    case 'G': f = Family::G; break;
    default: throw std::invalid_argument("unknown group: " + raw);
  }
  int n = 0;
  try {
    n = std::stoi(s.substr(1));
  } catch (const std::exception&) {
    throw std::invalid_argument("unknown group: " + raw);
  }
  return affine(f, n);
}

std::string GroupSpec::name() const {
  const char* letters = "ABCG";
  return std::string(1, letters[static_cast<int>(family_)]) + std::to_string(n_) + "aff";
}

void GroupSpec::finish() {
  const int n = n_;
  // Positive roots by closure under simple reflections.
  std::vector<Vec> roots;
  for (int i = 0; i < n; ++i) {
    Vec r{};
    r[i] = 1;
    roots.push_back(r);
  }
  for (std::size_t k = 0; k < roots.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      Vec r = roots[k];
      Int c = 0;
      for (int j = 0; j < n; ++j) c += r[j] * cartan_[i][j];
      r[i] -= c;
      bool pos = true, nonzero = false;
      for (int j = 0; j < n; ++j) {
        pos = pos && r[j] >= 0;
        nonzero = nonzero || r[j] != 0;
      }
      if (pos && nonzero && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
  }
  pos_roots_ = roots;
  auto height = [n](const Vec& r) { return std::accumulate(r.begin(), r.begin() + n, Int{0}); };
  const auto top = *std::max_element(roots.begin(), roots.end(),
                                     [&](const Vec& x, const Vec& y) { return height(x) < height(y); });
  if (top != theta_) throw std::logic_error("highest root table mismatch for " + name());

  const int gens = n + 1;
  std::vector<GroupElt> s;
  for (int i = 0; i < gens; ++i) s.push_back(GroupElt::generator(*this, i));
  const GroupElt e = GroupElt::identity(n);
  m_.assign(gens, std::vector<int>(gens, 1));
  for (int i = 0; i < gens; ++i) {
    if (!(s[i] * s[i] == e)) throw std::logic_error("generator is not an involution");
    for (int j = 0; j < gens; ++j) {
      if (i == j) continue;
      const GroupElt p = s[i] * s[j];
      GroupElt q = p;
      int k = 1;
      while (!(q == e) && k <= 12) { q = q * p; ++k; }
      if (k > 12) throw std::logic_error("infinite braid order; rank too small");
      m_[i][j] = k;
    }
  }
  std::vector<int> perm(gens);
  std::iota(perm.begin(), perm.end(), 0);
  autos_.clear();
  do {
    bool ok = true;
    for (int i = 0; ok && i < gens; ++i)
      for (int j = 0; ok && j < gens; ++j) ok = m_[perm[i]][perm[j]] == m_[i][j];
    if (ok) autos_.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

// ---------------------------------------------------------------- GroupElt

GroupElt GroupElt::identity(int n) {
  GroupElt e;
  e.n = n;
  for (int i = 0; i < n; ++i) e.m[i * kMaxRank + i] = 1;
  return e;
}

GroupElt GroupElt::generator(const GroupSpec& g, int i) {
  const int n = g.rank();
  GroupElt e = identity(n);
  if (i == 0) {
    const auto& th = g.highest_root();
    const auto& tc = g.highest_coroot();
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) e.m[r * kMaxRank + c] -= tc[r] * th[c];
      e.t[r] = -tc[r];
    }
  } else {
    for (int r = 0; r < n; ++r) e.m[r * kMaxRank + (i - 1)] -= g.cartan(i - 1, r);
  }
  return e;
}

GroupElt GroupElt::operator*(const GroupElt& o) const {
  GroupElt r;
  r.n = n;
  for (int i = 0; i < n; ++i) {
    Int acc = t[i];
    for (int k = 0; k < n; ++k) acc += m[i * kMaxRank + k] * o.t[k];
    r.t[i] = acc;
    for (int j = 0; j < n; ++j) {
      Int s = 0;
      for (int k = 0; k < n; ++k) s += m[i * kMaxRank + k] * o.m[k * kMaxRank + j];
      r.m[i * kMaxRank + j] = s;
    }
  }
  return r;
}

GroupElt GroupElt::inverse() const {
  // Integer Gauss-Jordan; the linear part is unimodular.
  std::array<std::array<Rat, 2 * kMaxRank>, kMaxRank> a{};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rat(m[i * kMaxRank + j]);
    for (int j = 0; j < n; ++j) a[i][n + j] = Rat(i == j ? 1 : 0);
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a[piv][col] == Rat(0)) ++piv;
    if (piv == n) throw std::logic_error("singular linear part");
    std::swap(a[piv], a[col]);
    const Rat p = a[col][col];
    for (int j = 0; j < 2 * n; ++j) a[col][j] /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == Rat(0)) continue;
      const Rat f = a[r][col];
      for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  GroupElt inv;
  inv.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rat x = a[i][n + j];
      if (x.denominator() != 1) throw std::logic_error("non-integral inverse");
      inv.m[i * kMaxRank + j] = x.numerator();
    }
  for (int i = 0; i < n; ++i) {
    Int acc = 0;
    for (int k = 0; k < n; ++k) acc -= inv.m[i * kMaxRank + k] * t[k];
    inv.t[i] = acc;
  }
  return inv;
}

Vec GroupElt::apply_scaled(const Vec& p, Int denom) const {
  Vec r{};
  for (int i = 0; i < n; ++i) {
    Int acc = denom * t[i];
    for (int k = 0; k < n; ++k) acc += m[i * kMaxRank + k] * p[k];
    r[i] = acc;
  }
  return r;
}

std::size_t GroupEltHash::operator()(const GroupElt& e) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](Int x) {
    h ^= static_cast<std::uint64_t>(x) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  };
  for (int i = 0; i < e.n; ++i) {
    mix(e.t[i]);
    for (int j = 0; j < e.n; ++j) mix(e.m[i * kMaxRank + j]);
  }
  return static_cast<std::size_t>(h);
}

namespace {

// Barycenter of the fundamental alcove scaled by denom.
Vec scaled_barycenter(const GroupSpec& g, Int& denom) {
  const int n = g.rank();
  const auto& th = g.highest_root();
  Int l = 1;
  for (int i = 0; i < n; ++i) l = std::lcm(l, th[i]);
  denom = (n + 1) * l;
  Vec b{};
  for (int i = 0; i < n; ++i) b[i] = -denom / ((n + 1) * th[i]);
  return b;
}

}  // namespace

Vec alcove_barycenter(const GroupSpec& g, const GroupElt& w, Int& denom) {
  const Vec b = scaled_barycenter(g, denom);
  return w.apply_scaled(b, denom);
}

bool in_dominant_chamber(const GroupSpec& g, const GroupElt& w) {
  Int denom = 0;
  const Vec c = alcove_barycenter(g, w, denom);
  for (int i = 0; i < g.rank(); ++i)
    if (c[i] <= 0) return false;
  return true;
}

int geometric_length(const GroupSpec& g, const GroupElt& w) {
  const int n = g.rank();
  Int denom = 0;
  const Vec c = alcove_barycenter(g, w, denom);
  Int total = 0;
  for (const auto& r : g.positive_roots()) {
    Int val = 0;
    for (int j = 0; j < n; ++j) val += r[j] * c[j];
    total += std::abs(floor_div(val, denom) + 1);
  }
  return static_cast<int>(total);
}

GroupElt eval_word(const GroupSpec& g, const Word& w) {
  GroupElt e = GroupElt::identity(g.rank());
  for (int s : w) e = e * GroupElt::generator(g, s);
  return e;
}

// ---------------------------------------------------------------- posets

std::vector<int> IntervalPoset::lc() const {
  std::vector<int> f(length() + 1, 0);
  for (int r : rank) ++f[r];
  return f;
}

std::vector<boost::dynamic_bitset<>> IntervalPoset::below() const {
  const std::size_t n = size();
  std::vector<boost::dynamic_bitset<>> b(n, boost::dynamic_bitset<>(n));
  for (std::size_t i = 0; i < n; ++i) {
    b[i].set(i);
    for (int d : down[i]) b[i] |= b[d];
  }
  return b;
}

IntervalPoset IntervalPoset::induced(const std::vector<int>& subset) const {
  const auto b = below();
  std::vector<int> s = subset;
  std::sort(s.begin(), s.end());
  IntervalPoset p;
  const std::size_t k = s.size();
  p.rank.resize(k);
  p.up.assign(k, {});
  p.down.assign(k, {});
  for (std::size_t i = 0; i < k; ++i) p.rank[i] = rank[s[i]];
  // covers of the induced order: a < c with nothing of the subset strictly between.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j || !b[s[j]][s[i]]) continue;
      bool cover = true;
      for (std::size_t m = 0; cover && m < k; ++m) {
        if (m == i || m == j) continue;
        cover = !(b[s[m]][s[i]] && b[s[j]][s[m]]);
      }
      if (cover) {
        p.up[i].push_back(static_cast<int>(j));
        p.down[j].push_back(static_cast<int>(i));
      }
    }
  }
  return p;
}

// ---------------------------------------------------------------- Ball

Ball::Ball(GroupSpec spec, int max_len, std::size_t capacity) : spec_(std::move(spec)), max_len_(max_len) {
  if (max_len < 0) throw std::invalid_argument("negative length bound");
  build(capacity);
  build_order();
}

void Ball::build(std::size_t capacity) {
  const int gens = spec_.generators();
  std::vector<GroupElt> gen;
  for (int i = 0; i < gens; ++i) gen.push_back(GroupElt::generator(spec_, i));
  elts_.push_back(GroupElt::identity(spec_.rank()));
  len_.push_back(0);
  words_.push_back({});
  index_.emplace(elts_[0], 0);
  std::size_t layer_begin = 0;
  for (int l = 1; l <= max_len_; ++l) {
    const std::size_t layer_end = elts_.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (int s = 0; s < gens; ++s) {
        GroupElt e = elts_[i] * gen[s];
        if (index_.count(e)) continue;
        index_.emplace(e, static_cast<int>(elts_.size()));
        elts_.push_back(e);
        len_.push_back(l);
        Word w = words_[i];
        w.push_back(s);
        words_.push_back(std::move(w));
        if (elts_.size() > capacity)
          throw CapacityError("ball of " + spec_.name() + " with L=" + std::to_string(max_len_) +
                              " exceeds capacity " + std::to_string(capacity) + " (reached " +
                              std::to_string(elts_.size()) + " elements at length " + std::to_string(l) + ")");
      }
    }
    layer_begin = layer_end;
  }
  const std::size_t n = elts_.size();
  right_.assign(n, std::vector<int>(gens, -1));
  left_.assign(n, std::vector<int>(gens, -1));
  inv_.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    for (int s = 0; s < gens; ++s) {
      right_[i][s] = find(elts_[i] * gen[s]);
      left_[i][s] = find(gen[s] * elts_[i]);
    }
    inv_[i] = find(elts_[i].inverse());
  }
  // Lower covers: delete one letter of the stored reduced word.
  lower_.assign(n, {});
  for (std::size_t i = 1; i < n; ++i) {
    const Word& w = words_[i];
    const int k = static_cast<int>(w.size());
    GroupElt prefix = GroupElt::identity(spec_.rank());
    for (int j = 0; j < k; ++j) {
      GroupElt u = prefix;
      for (int r = j + 1; r < k; ++r) u = u * gen[w[r]];
      const int idx = find(u);
      if (idx >= 0 && len_[idx] == k - 1 &&
          std::find(lower_[i].begin(), lower_[i].end(), idx) == lower_[i].end())
        lower_[i].push_back(idx);
      prefix = prefix * gen[w[j]];
    }
    std::sort(lower_[i].begin(), lower_[i].end());
  }
}

void Ball::build_order() {
  const std::size_t n = elts_.size();
  upper_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (int c : lower_[i]) upper_[c].push_back(static_cast<int>(i));
  down_.assign(n, boost::dynamic_bitset<>(n));
  for (std::size_t i = 0; i < n; ++i) {
    down_[i].set(i);
    for (int c : lower_[i]) down_[i] |= down_[c];
  }
  up_.assign(n, boost::dynamic_bitset<>(n));
  for (std::size_t b = 0; b < n; ++b)
    for (auto a = down_[b].find_first(); a != boost::dynamic_bitset<>::npos; a = down_[b].find_next(a))
      up_[a].set(b);
}

int Ball::find(const GroupElt& e) const {
  auto it = index_.find(e);
  return it == index_.end() ? -1 : it->second;
}

int Ball::index_of_word(const Word& w) const { return find(eval_word(spec_, w)); }

int Ball::at(const GroupElt& e) const {
  const int i = find(e);
  if (i < 0) throw OutOfBallError("element outside the ball of " + spec_.name() + " L=" + std::to_string(max_len_));
  return i;
}

const std::vector<int>& Ball::upper_covers(int i) const {
  if (len_[i] >= max_len_) throw OutOfBallError("upper covers of an element on the ball boundary");
  return upper_[i];
}

std::vector<int> Ball::interval_elements(int a, int b) const {
  if (!leq(a, b)) throw EmptyIntervalError("empty interval");
  auto s = down_[b] & up_[a];
  std::vector<int> out;
  for (auto i = s.find_first(); i != boost::dynamic_bitset<>::npos; i = s.find_next(i)) out.push_back(static_cast<int>(i));
  std::sort(out.begin(), out.end(), [&](int x, int y) {
    if (len_[x] != len_[y]) return len_[x] < len_[y];
    return words_[x] < words_[y];
  });
  return out;
}

IntervalPoset Ball::interval(int a, int b) const { return poset_on(interval_elements(a, b)); }

IntervalPoset Ball::poset_on(const std::vector<int>& elems) const {
  std::unordered_map<int, int> pos;
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
  IntervalPoset p;
  const int base = len_[elems.front()];
  p.rank.resize(elems.size());
  p.up.assign(elems.size(), {});
  p.down.assign(elems.size(), {});
  for (std::size_t i = 0; i < elems.size(); ++i) {
    p.rank[i] = len_[elems[i]] - base;
    for (int c : lower_[elems[i]]) {
      auto it = pos.find(c);
      if (it == pos.end()) continue;
      p.down[i].push_back(it->second);
      p.up[it->second].push_back(static_cast<int>(i));
    }
  }
  return p;
}

std::vector<int> Ball::lc_sequence(int a, int b) const { return interval(a, b).lc(); }

bool Ball::is_full(int a, int b) const {
  if (!leq(a, b)) return false;
  for (int u : upper_covers(a))
    if (!leq(u, b)) return false;
  for (int l : lower_[b])
    if (!leq(a, l)) return false;
  return true;
}

bool Ball::is_dihedral(int a, int b) const {
  if (!leq(a, b)) throw EmptyIntervalError("empty interval");
  if (len_[b] - len_[a] <= 1) return true;
  int atoms = 0;
  for (int u : upper_covers(a))
    if (leq(u, b)) ++atoms;
  return atoms == 2;
}

bool Ball::subword_leq(int a, int b) const {
  // a <= b iff min(a, as) <= bs for a right descent s of b.
  while (true) {
    if (len_[a] > len_[b]) return false;
    if (len_[b] == 0) return len_[a] == 0;
    const int s = words_[b].back();
    const int bs = right_[b][s];
    const int as = right_[a][s];
    if (as >= 0 && len_[as] < len_[a]) a = as;
    b = bs;
  }
}

int Ball::apply_automorphism(const std::vector<int>& perm, int i) const {
  Word w = words_[i];
  for (int& s : w) s = perm[s];
  return index_of_word(w);
}

std::string Ball::word_string(int i, bool a2_digits) const { return format_word(words_[i], a2_digits); }

void Ball::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write ball cache " + path);
  out << "BRUHAT-BALL 1\n" << spec_.name() << ' ' << max_len_ << ' ' << elts_.size() << '\n';
  for (std::size_t i = 0; i < elts_.size(); ++i) out << format_word(words_[i], false) << '\n';
}

Ball Ball::load(const std::string& path, std::size_t capacity) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read ball cache " + path);
  std::string magic, version, name;
  int max_len = 0;
  std::size_t count = 0;
  in >> magic >> version >> name >> max_len >> count;
  if (magic != "BRUHAT-BALL" || version != "1") throw std::runtime_error("bad ball cache header in " + path);
  Ball b(GroupSpec::parse(name), max_len, capacity);
  if (b.size() != count) throw std::runtime_error("stale ball cache " + path);
  for (std::size_t i = 0; i < count; ++i) {
    std::string w;
    in >> w;
    if (w != format_word(b.words_[i], false)) throw std::runtime_error("stale ball cache " + path);
  }
  return b;
}

Word parse_word(const std::string& s, int generators) {
  Word w;
  if (s == "e" || s == "id") return w;
  for (char ch : s) {
    if (ch == ' ' || ch == ',') continue;
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw std::invalid_argument("bad word: " + s);
    int d = ch - '0';
    if (generators == 3 && d == 3) d = 0;
    if (d >= generators) throw std::invalid_argument("generator out of range in word: " + s);
    w.push_back(d);
  }
  return w;
}

std::string format_word(const Word& w, bool a2_digits) {
  if (w.empty()) return "e";
  std::string s;
  for (int g : w) s += static_cast<char>('0' + (a2_digits && g == 0 ? 3 : g));
  return s;
}

// ---------------------------------------------------------------- QPoly

QPoly QPoly::sum_q(int k) { return QPoly(std::vector<Int>(k + 1, 1)); }

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c.size() > c.size()) c.resize(o.c.size(), 0);
  for (std::size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c.size() > c.size()) c.resize(o.c.size(), 0);
  for (std::size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
  trim();
  return *this;
}

QPoly QPoly::shifted(int k) const {
  if (is_zero()) return {};
  QPoly r;
  r.c.assign(k, 0);
  r.c.insert(r.c.end(), c.begin(), c.end());
  return r;
}

QPoly QPoly::scaled(Int k) const {
  QPoly r = *this;
  for (auto& x : r.c) x *= k;
  r.trim();
  return r;
}

std::string QPoly::str() const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    Int a = c[i];
    if (!first) os << (a < 0 ? " - " : " + ");
    else if (a < 0) os << '-';
    a = std::abs(a);
    if (i == 0 || a != 1) os << a;
    if (i >= 1) os << 'q';
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os.str();
}

QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }

// ---------------------------------------------------------------- KL

KLTable::KLTable(const Ball& ball) : ball_(ball), memo_(ball.size()) {}

const QPoly& KLTable::P(int x, int w) {
  if (memo_[w].empty()) fill(w);
  auto it = memo_[w].find(x);
  return it == memo_[w].end() ? zero_ : it->second;
}

Int KLTable::mu(int z, int w) {
  const int d = ball_.length(w) - ball_.length(z);
  if (d <= 0 || d % 2 == 0 || !ball_.leq(z, w)) return 0;
  return P(z, w).coeff((d - 1) / 2);
}

void KLTable::fill(int w) {
  auto& row = memo_[w];
  if (ball_.length(w) == 0) {
    row.emplace(w, QPoly::one());
    return;
  }
  int s = -1;
  for (int g = 0; g < ball_.spec().generators(); ++g) {
    const int sw = ball_.left_mul(g, w);
    if (sw >= 0 && ball_.length(sw) < ball_.length(w)) { s = g; break; }
  }
  const int v = ball_.left_mul(s, w);
  const int lw = ball_.length(w);
  // z < v with sz < z and mu(z, v) != 0.
  std::vector<std::pair<int, Int>> zs;
  const auto& dv = ball_.downset(v);
  for (auto z = dv.find_first(); z != boost::dynamic_bitset<>::npos; z = dv.find_next(z)) {
    const int zi = static_cast<int>(z);
    if (zi == v) continue;
    const int sz = ball_.left_mul(s, zi);
    if (ball_.length(sz) > ball_.length(zi)) continue;
    const Int m = mu(zi, v);
    if (m != 0) zs.emplace_back(zi, m);
  }
  std::unordered_map<int, QPoly> out;
  const auto& dw = ball_.downset(w);
  for (auto x = dw.find_first(); x != boost::dynamic_bitset<>::npos; x = dw.find_next(x)) {
    const int xi = static_cast<int>(x);
    const int sx = ball_.left_mul(s, xi);
    const int c = ball_.length(sx) < ball_.length(xi) ? 1 : 0;
    QPoly p = P(sx, v).shifted(1 - c);
    p += P(xi, v).shifted(c);
    for (const auto& [z, m] : zs) {
      if (!ball_.leq(xi, z)) continue;
      p -= P(xi, z).scaled(m).shifted((lw - ball_.length(z)) / 2);
    }
    out.emplace(xi, std::move(p));
  }
  memo_[w] = std::move(out);
}

bool be_monotone(const std::vector<int>& f) {
  const int l = static_cast<int>(f.size()) - 1;
  for (int i = 0; i <= l; ++i)
    for (int j = i + 1; j <= l - i; ++j)
      if (f[i] > f[j]) return false;
  return true;
}

// ------------------------------------------------------------ alcove translations

std::size_t CoweightHash::operator()(const Coweight& c) const noexcept {
  std::size_t h = 0;
  for (Int x : c) h = h * 1000003u ^ std::hash<Int>{}(x);
  return h;
}

AlcoveTranslations::AlcoveTranslations(const Ball& ball) : ball_(&ball) {
  bary_.reserve(ball.size());
  for (std::size_t i = 0; i < ball.size(); ++i) {
    bary_.push_back(alcove_barycenter(ball.spec(), ball.elt(static_cast<int>(i)), denom_));
    index_.emplace(bary_.back(), static_cast<int>(i));
  }
}

int AlcoveTranslations::translate(int i, const Coweight& lambda) const {
  Coweight c = bary_[i];
  for (int k = 0; k < ball_->spec().rank(); ++k) c[k] += denom_ * lambda[k];
  auto it = index_.find(c);
  return it == index_.end() ? -1 : it->second;
}

std::optional<Coweight> AlcoveTranslations::difference(int a, int b) const {
  Coweight d{};
  for (int k = 0; k < ball_->spec().rank(); ++k) {
    const Int x = bary_[b][k] - bary_[a][k];
    if (x % denom_ != 0) return std::nullopt;
    d[k] = x / denom_;
  }
  return d;
}

bool AlcoveTranslations::dominant(int i) const {
  for (int k = 0; k < ball_->spec().rank(); ++k)
    if (bary_[i][k] <= 0) return false;
  return true;
}

}  // namespace bruhat
