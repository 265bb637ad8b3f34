#include "bruhat/translations.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace bruhat::a2 {

std::string to_string(Weight w) {
  return std::to_string(w.a) + "w1+" + std::to_string(w.b) + "w2";
}

Elt tau(Elt z, int i) {
  const Pt w = i == 1 ? lattice::varpi1 : lattice::varpi2;
  return z + apply(zone_of(z), w);
}

Elt tau_lambda(Elt z, Weight lambda) {
  if (lambda.a < 0 || lambda.b < 0) throw std::invalid_argument("tau needs a dominant weight");
  for (Int k = 0; k < lambda.b; ++k) z = tau(z, 2);
  for (Int k = 0; k < lambda.a; ++k) z = tau(z, 1);
  return z;
}

TranslationReport translate_interval(Elt x, Elt y, Weight lambda) {
  std::vector<Elt> src, dst;
  const IntervalPoset ps = interval_poset(x, y, &src);
  const IntervalPoset pd = interval_poset(shift(x, lambda), shift(y, lambda), &dst);
  TranslationReport r;
  r.card_source = src.size();
  r.card_target = dst.size();
  std::unordered_map<Pt, int, PtHash> pos;
  for (std::size_t i = 0; i < dst.size(); ++i) pos[dst[i]] = static_cast<int>(i);
  std::vector<int> img(src.size(), -1);
  r.image_inside = true;
  for (std::size_t i = 0; i < src.size(); ++i) {
    auto it = pos.find(tau_lambda(src[i], lambda));
    if (it == pos.end()) {
      r.image_inside = false;
      continue;
    }
    img[i] = it->second;
  }
  if (!r.image_inside || src.size() != dst.size()) return r;
  std::vector<int> sorted = img;
  std::sort(sorted.begin(), sorted.end());
  r.is_bijection = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  if (!r.is_bijection) return r;
  const auto bs = ps.below(), bd = pd.below();
  for (std::size_t a = 0; a < src.size(); ++a)
    for (std::size_t b = 0; b < src.size(); ++b)
      if (bs[b][a] != bd[img[b]][img[a]]) return r;
  r.is_poset_iso = true;
  return r;
}

bool pgn_translation_law(Elt x, Elt y, Weight lambda) {
  return pgn(x, y).translated(lambda.pt()) == pgn(shift(x, lambda), shift(y, lambda));
}

std::optional<Comparability> comparable(Elt x, Elt y, Elt x2, Elt y2, int bound) {
  const Pt d = x2 - x;
  if (y2 - y != d || !is_weight(d)) return std::nullopt;
  const Weight base{std::max<Int>(0, d.u / 6), std::max<Int>(0, d.v / 6)};
  std::vector<Weight> mus;
  for (Int p = 0; p <= bound; ++p)
    for (Int q = 0; q <= bound; ++q) mus.push_back({p, q});
  std::stable_sort(mus.begin(), mus.end(),
                   [](Weight a, Weight b) { return a.a + a.b < b.a + b.b; });
  for (Weight mu : mus) {
    const Weight l{base.a + mu.a, base.b + mu.b};
    const Weight l2{l.a - d.u / 6, l.b - d.v / 6};
    if (!translate_interval(x, y, l).is_poset_iso) continue;
    if (!translate_interval(x2, y2, l2).is_poset_iso) continue;
    return Comparability{shift(x, l), shift(y, l), l, l2};
  }
  return std::nullopt;
}

}  // namespace bruhat::a2
