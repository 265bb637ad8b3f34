#include "bruhat/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace bruhat {

std::vector<int> heights(const IntervalPoset& p) {
  const std::size_t n = p.size();
  std::vector<int> h(n, -1);
  std::function<int(int)> go = [&](int v) {
    if (h[v] >= 0) return h[v];
    int best = 0;
    for (int d : p.down[v]) best = std::max(best, go(d) + 1);
    return h[v] = best;
  };
  for (std::size_t v = 0; v < n; ++v) go(static_cast<int>(v));
  return h;
}

namespace {

using Colors = std::vector<int>;

// Iterated refinement by (colour, multiset of up colours, multiset of down
// colours).  New colours are ranks of signatures in sorted order, so the
// result does not depend on element labels.  Returns the number of colours.
int refine(const IntervalPoset& p, Colors& c) {
  const std::size_t n = p.size();
  int classes = -1;
  std::vector<std::vector<int>> sig(n);
  for (;;) {
    for (std::size_t v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(c[v]);
      std::vector<int> ups, downs;
      for (int u : p.up[v]) ups.push_back(c[u]);
      for (int d : p.down[v]) downs.push_back(c[d]);
      std::sort(ups.begin(), ups.end());
      std::sort(downs.begin(), downs.end());
      s.push_back(static_cast<int>(ups.size()));
      s.insert(s.end(), ups.begin(), ups.end());
      s.push_back(-1);
      s.insert(s.end(), downs.begin(), downs.end());
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    Colors next(n);
    int k = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++k;
      next[order[i]] = k;
    }
    const int now = n ? k + 1 : 0;
    c = std::move(next);
    if (now == classes) return now;
    classes = now;
  }
}

bool twins(const IntervalPoset& p, int a, int b) { return p.up[a] == p.up[b] && p.down[a] == p.down[b]; }

struct Canon {
  const IntervalPoset& p;
  std::vector<int> h;
  std::vector<std::uint32_t> best;
  std::vector<int> best_label;
  bool have = false;

  std::vector<std::uint32_t> encode(const Colors& c) const {
    const std::size_t n = p.size();
    std::vector<int> inv(n);
    for (std::size_t v = 0; v < n; ++v) inv[c[v]] = static_cast<int>(v);
    std::vector<std::uint32_t> out;
    out.push_back(static_cast<std::uint32_t>(n));
    for (std::size_t i = 0; i < n; ++i) out.push_back(static_cast<std::uint32_t>(h[inv[i]]));
    std::vector<std::pair<int, int>> edges;
    for (std::size_t v = 0; v < n; ++v)
      for (int u : p.up[v]) edges.emplace_back(c[v], c[u]);
    std::sort(edges.begin(), edges.end());
    for (auto [a, b] : edges) {
      out.push_back(static_cast<std::uint32_t>(a));
      out.push_back(static_cast<std::uint32_t>(b));
    }
    return out;
  }

  void search(Colors c) {
    const int k = refine(p, c);
    const std::size_t n = p.size();
    if (static_cast<std::size_t>(k) == n) {
      auto code = encode(c);
      if (!have || code < best) {
        best = std::move(code);
        best_label = c;
        have = true;
      }
      return;
    }
    // First non-singleton cell.
    std::vector<int> size(k, 0);
    for (int x : c) ++size[x];
    int target = 0;
    while (size[target] == 1) ++target;
    std::vector<int> tried;
    for (std::size_t v = 0; v < n; ++v) {
      if (c[v] != target) continue;
      bool dup = false;
      for (int t : tried) dup = dup || twins(p, t, static_cast<int>(v));
      if (dup) continue;
      tried.push_back(static_cast<int>(v));
      Colors d(n);
      for (std::size_t u = 0; u < n; ++u) d[u] = 2 * c[u] + (u == v ? 0 : 1);
      search(std::move(d));
    }
  }
};

}  // namespace

CanonicalPoset canonical_form(const IntervalPoset& p) {
  Canon cn{p, heights(p), {}, {}, false};
  if (p.size() == 0) return {};
  cn.search(cn.h);
  CanonicalPoset out;
  out.cert.code = std::move(cn.best);
  std::size_t h = 1469598103934665603ULL;
  for (auto x : out.cert.code) h = (h ^ x) * 1099511628211ULL;
  out.cert.hash = h;
  out.label = std::move(cn.best_label);
  return out;
}

namespace {

IntervalPoset disjoint_union(const IntervalPoset& a, const IntervalPoset& b) {
  IntervalPoset u = a;
  const int off = static_cast<int>(a.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    u.rank.push_back(b.rank[i]);
    std::vector<int> up, down;
    for (int x : b.up[i]) up.push_back(x + off);
    for (int x : b.down[i]) down.push_back(x + off);
    u.up.push_back(std::move(up));
    u.down.push_back(std::move(down));
  }
  return u;
}

}  // namespace

std::optional<std::vector<int>> poset_isomorphism(const IntervalPoset& a, const IntervalPoset& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  if (n == 0) return std::vector<int>{};
  const auto ha = heights(a), hb = heights(b);
  {
    auto sa = ha, sb = hb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;  // level counts differ
  }
  // Joint refinement makes colours comparable across the two posets.
  const IntervalPoset u = disjoint_union(a, b);
  Colors c = ha;
  c.insert(c.end(), hb.begin(), hb.end());
  refine(u, c);
  {
    std::vector<int> ca(c.begin(), c.begin() + n), cb(c.begin() + n, c.end());
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return std::nullopt;
  }
  // Map elements of a in BFS order from the bottom so neighbours are mostly
  // already placed when a vertex is reached.
  std::vector<int> order;
  {
    std::vector<char> seen(n, 0);
    std::vector<int> roots(n);
    std::iota(roots.begin(), roots.end(), 0);
    std::stable_sort(roots.begin(), roots.end(), [&](int x, int y) { return ha[x] < ha[y]; });
    for (int r : roots) {
      if (seen[r]) continue;
      seen[r] = 1;
      std::size_t head = order.size();
      order.push_back(r);
      while (head < order.size()) {
        const int v = order[head++];
        for (const auto* adj : {&a.up[v], &a.down[v]})
          for (int w : *adj)
            if (!seen[w]) {
              seen[w] = 1;
              order.push_back(w);
            }
      }
    }
  }
  std::vector<std::vector<int>> cand(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (c[x] == c[n + y]) cand[x].push_back(static_cast<int>(y));

  std::vector<int> phi(n, -1), used(n, 0);
  auto consistent = [&](int x, int y) {
    int mapped_a = 0, mapped_b = 0;
    for (int w : a.up[x])
      if (phi[w] >= 0) {
        ++mapped_a;
        if (!std::binary_search(b.up[y].begin(), b.up[y].end(), phi[w])) return false;
      }
    for (int w : a.down[x])
      if (phi[w] >= 0) {
        ++mapped_a;
        if (!std::binary_search(b.down[y].begin(), b.down[y].end(), phi[w])) return false;
      }
    for (int w : b.up[y]) mapped_b += used[w] ? 1 : 0;
    for (int w : b.down[y]) mapped_b += used[w] ? 1 : 0;
    return mapped_a == mapped_b;
  };
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == n) return true;
    const int x = order[i];
    for (int y : cand[x]) {
      if (used[y] || !consistent(x, y)) continue;
      phi[x] = y;
      used[y] = 1;
      if (go(i + 1)) return true;
      phi[x] = -1;
      used[y] = 0;
    }
    return false;
  };
  // Neighbour lists must be sorted for binary_search.
  for (const auto& l : b.up)
    if (!std::is_sorted(l.begin(), l.end())) throw std::invalid_argument("unsorted cover lists");
  for (const auto& l : b.down)
    if (!std::is_sorted(l.begin(), l.end())) throw std::invalid_argument("unsorted cover lists");
  if (!go(0)) return std::nullopt;
  return phi;
}

bool verify_isomorphism(const IntervalPoset& a, const IntervalPoset& b, const std::vector<int>& phi) {
  const std::size_t n = a.size();
  if (b.size() != n || phi.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (int y : phi) {
    if (y < 0 || static_cast<std::size_t>(y) >= n || hit[y]) return false;
    hit[y] = 1;
  }
  const auto la = a.below(), lb = b.below();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (la[y][x] != lb[phi[y]][phi[x]]) return false;
  return true;
}

}  // namespace bruhat
