#include "bruhat/classify.hpp"

#include "bruhat/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace bruhat {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

bool ranks_preserved(const IntervalPoset& a, const IntervalPoset& b, const std::vector<int>& phi) {
  for (std::size_t i = 0; i < phi.size(); ++i)
    if (a.rank[i] != b.rank[phi[i]]) return false;
  return true;
}

// Explicit isomorphism, checked against the order relation and the ranks.
std::optional<std::vector<int>> checked_iso(const IntervalPoset& a, const IntervalPoset& b) {
  auto phi = poset_isomorphism(a, b);
  if (phi && !(verify_isomorphism(a, b, *phi) && ranks_preserved(a, b, *phi)))
    throw std::logic_error("isomorphism search returned an invalid map");
  return phi;
}

}  // namespace

// ------------------------------------------------------------ conjecture E

SweepReport conjecture_e_sweep(const GroupSpec& spec, int max_len_x, int max_len_xy, int jobs) {
  const auto t0 = Clock::now();
  SweepReport rep;
  rep.sweep = "conjecture-e";
  rep.group = spec.name();
  rep.max_len_x = max_len_x;
  rep.max_len_xy = max_len_xy;

  const Ball ball(spec, max_len_x + max_len_xy);
  const AlcoveTranslations tr(ball);

  // G: diagram automorphisms, each optionally followed by inversion.
  std::vector<std::vector<int>> g_images;
  for (const auto& perm : spec.diagram_automorphisms())
    for (bool inv : {false, true}) {
      std::vector<int> img(ball.size());
      for (std::size_t i = 0; i < ball.size(); ++i) {
        const int a = ball.apply_automorphism(perm, static_cast<int>(i));
        img[i] = inv ? ball.inverse(a) : a;
      }
      g_images.push_back(std::move(img));
    }

  std::vector<int> dom;
  for (std::size_t i = 0; i < ball.size(); ++i)
    if (tr.dominant(static_cast<int>(i))) dom.push_back(static_cast<int>(i));

  struct Iv {
    int x, y;
    IntervalPoset p;
    Certificate cert;
  };
  std::vector<Iv> ivs;
  for (int x : dom) {
    if (ball.length(x) > max_len_x) continue;
    for (int y : dom) {
      const int d = ball.length(y) - ball.length(x);
      if (d < 1 || d > max_len_xy || !ball.leq(x, y) || !ball.is_full(x, y)) continue;
      ivs.push_back({x, y, {}, {}});
    }
  }
  parallel_for(ivs.size(), jobs, [&](std::size_t i) {
    ivs[i].p = ball.interval(ivs[i].x, ivs[i].y);
    ivs[i].cert = canonical_form(ivs[i].p).cert;
  });
  rep.intervals = ivs.size();

  auto name = [&](const Iv& v) { return ball.word_string(v.x) + ".." + ball.word_string(v.y); };

  std::map<Certificate, std::vector<int>> buckets;
  for (std::size_t i = 0; i < ivs.size(); ++i) buckets[ivs[i].cert].push_back(static_cast<int>(i));

  // Certificates against explicit search: members of a bucket are
  // isomorphic, representatives of distinct buckets with equal LC are not.
  std::map<std::vector<int>, std::vector<int>> by_lc;
  for (const auto& [cert, members] : buckets) {
    const Iv& r = ivs[members.front()];
    for (std::size_t k = 1; k < members.size(); ++k)
      if (!checked_iso(r.p, ivs[members[k]].p))
        rep.counterexamples.push_back({name(r), name(ivs[members[k]]), "equal certificates, no isomorphism"});
    by_lc[r.p.lc()].push_back(members.front());
  }
  for (const auto& [lc, reps] : by_lc)
    for (std::size_t a = 0; a < reps.size(); ++a)
      for (std::size_t b = a + 1; b < reps.size(); ++b)
        if (checked_iso(ivs[reps[a]].p, ivs[reps[b]].p))
          rep.counterexamples.push_back({name(ivs[reps[a]]), name(ivs[reps[b]]), "distinct certificates, isomorphic"});

  for (const auto& [cert, members] : buckets) {
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const Iv& I = ivs[members[a]];
        const Iv& J = ivs[members[b]];
        ++rep.isomorphic;
        bool hyp = false, concl = false;
        for (const auto& g : g_images) {
          const auto dx = tr.difference(g[J.x], I.x);
          if (!dx) continue;
          hyp = true;
          const auto dy = tr.difference(g[J.y], I.y);
          if (dy && *dy == *dx) {
            concl = true;
            break;
          }
        }
        if (!hyp) continue;
        ++rep.pairs;
        if (!concl) rep.counterexamples.push_back({name(I), name(J), "no g with y - g y' = x - g x'"});
      }
  }
  rep.notes.push_back("ball length " + std::to_string(ball.max_len()) + ", " + std::to_string(ball.size()) +
                      " elements, " + std::to_string(dom.size()) + " dominant, " +
                      std::to_string(buckets.size()) + " isomorphism classes, |G| = " +
                      std::to_string(g_images.size()));
  rep.seconds = since(t0);
  return rep;
}

std::optional<int> stabilization_find_n0(const AlcoveTranslations& tr, int x, int y, const Coweight& lambda,
                                         int n_max) {
  const Ball& ball = tr.ball();
  std::vector<std::optional<std::pair<IntervalPoset, Certificate>>> cache(n_max + 4);
  auto at = [&](int n) -> const std::pair<IntervalPoset, Certificate>& {
    if (!cache[n]) {
      Coweight l{};
      for (int k = 0; k < kMaxRank; ++k) l[k] = n * lambda[k];
      const int a = tr.translate(x, l), b = tr.translate(y, l);
      if (a < 0 || b < 0) throw OutOfBallError("translate leaves the ball");
      auto p = ball.interval(a, b);
      auto c = canonical_form(p).cert;
      cache[n].emplace(std::move(p), std::move(c));
    }
    return *cache[n];
  };
  for (int n0 = 0; n0 <= n_max; ++n0) {
    bool ok = true;
    for (int n = n0 + 1; ok && n <= n0 + 3; ++n) {
      const auto& [p0, c0] = at(n0);
      const auto& [p1, c1] = at(n);
      ok = c0 == c1 && checked_iso(p0, p1).has_value();
    }
    if (ok) return n0;
  }
  return std::nullopt;
}

}  // namespace bruhat

namespace bruhat::a2 {

namespace {

std::string iv_name(Elt x, Elt y) { return word_string(x) + ".." + word_string(y); }

std::unordered_map<Pt, int, PtHash> positions(const std::vector<Elt>& v) {
  std::unordered_map<Pt, int, PtHash> m;
  for (std::size_t i = 0; i < v.size(); ++i) m[v[i]] = static_cast<int>(i);
  return m;
}

bool in_s0_chamber(Elt z) { return is_dominant(left_mul(0, z)); }

}  // namespace

bool corner_transport_check(Elt x, Elt y, Elt x2, Elt y2, const std::vector<Elt>& source,
                            const std::vector<Elt>& target, const std::vector<int>& phi) {
  const auto ps = positions(source);
  auto image = [&](Elt z) -> std::optional<Elt> {
    auto it = ps.find(z);
    if (it == ps.end()) return std::nullopt;
    return target[phi[it->second]];
  };
  const CornerData a = corner_data(x, y), b = corner_data(x2, y2);
  auto pair_maps = [&](const std::array<std::optional<Elt>, 2>& from, const std::array<std::optional<Elt>, 2>& to) {
    if (!from[0] || !from[1] || !to[0] || !to[1]) return false;
    const auto u = image(*from[0]), v = image(*from[1]);
    if (!u || !v) return false;
    return (*u == *to[0] && *v == *to[1]) || (*u == *to[1] && *v == *to[0]);
  };
  if (!pair_maps(a.z_x, b.z_x) || !pair_maps(a.z_y, b.z_y)) return false;
  const auto r = image(x + lattice::rho);
  if (!r || *r != x2 + lattice::rho) return false;
  // Dihedral sets at both ends.
  for (std::size_t i = 0; i < source.size(); ++i) {
    const Elt z = source[i], w = target[phi[i]];
    if (is_dihedral(x, z) != is_dihedral(x2, w)) return false;
    if (is_dihedral(z, y) != is_dihedral(w, y2)) return false;
  }
  return true;
}

SweepReport thick_census(int max_len_x, int max_len_xy, int jobs) {
  const auto t0 = Clock::now();
  SweepReport rep;
  rep.sweep = "thick-census";
  rep.group = "A2";
  rep.max_len_x = max_len_x;
  rep.max_len_xy = max_len_xy;

  std::vector<Elt> dom;
  for (Elt z : ball(max_len_x + max_len_xy))
    if (is_dominant(z)) dom.push_back(z);

  struct Iv {
    Elt x, y;
    std::vector<Elt> elems;
    IntervalPoset p;
    Certificate cert;
    Polygon pgn;
  };
  std::vector<Iv> ivs;
  for (Elt x : dom) {
    if (length(x) > max_len_x) continue;
    for (Elt y : dom) {
      const int d = length(y) - length(x);
      if (d < 1 || d > max_len_xy || !is_thick(x, y)) continue;
      ivs.push_back({x, y, {}, {}, {}, pgn(x, y)});
    }
  }
  parallel_for(ivs.size(), jobs, [&](std::size_t i) {
    ivs[i].p = interval_poset(ivs[i].x, ivs[i].y, &ivs[i].elems);
    ivs[i].cert = canonical_form(ivs[i].p).cert;
  });
  rep.intervals = ivs.size();

  struct Row {
    std::size_t pairs = 0, iso = 0, flipped = 0;
    std::vector<Counterexample> bad;
  };
  std::vector<Row> rows(ivs.size());
  parallel_for(ivs.size(), jobs, [&](std::size_t i) {
    Row& row = rows[i];
    const Iv& I = ivs[i];
    for (std::size_t j = i + 1; j < ivs.size(); ++j) {
      const Iv& J = ivs[j];
      ++row.pairs;
      auto bad = [&](const std::string& why) { row.bad.push_back({iv_name(I.x, I.y), iv_name(J.x, J.y), why}); };
      // g in {id, sigma} with Pgn(g x', g y') = Pgn(x, y) + (g x' - x), a weight.
      std::optional<bool> cong;
      for (bool s : {false, true}) {
        const Elt gx = s ? flip(J.x) : J.x, gy = s ? flip(J.y) : J.y;
        const Pt d = gx - I.x;
        if (is_weight(d) && pgn(gx, gy) == I.pgn.translated(d)) {
          cong = s;
          break;
        }
      }
      const auto mod_flip = congruent_mod_flip(J.pgn, I.pgn);
      if (cong.has_value() != (mod_flip && is_weight(mod_flip->shift))) bad("congruence tests disagree");

      std::optional<std::vector<int>> phi;
      if (I.p.size() == J.p.size()) phi = checked_iso(I.p, J.p);
      if (phi.has_value() != (I.cert == J.cert)) bad("certificate and explicit search disagree");
      if (phi.has_value() != cong.has_value()) {
        bad(phi ? "isomorphic, polygons not congruent" : "congruent polygons, not isomorphic");
        continue;
      }
      if (!phi) continue;
      ++row.iso;
      row.flipped += *cong;
      if (!corner_transport_check(I.x, I.y, J.x, J.y, I.elems, J.elems, *phi)) bad("corner transport fails");
      const Elt gx = *cong ? flip(J.x) : J.x, gy = *cong ? flip(J.y) : J.y;
      if (!comparable(I.x, I.y, gx, gy)) bad("no comparability witness");
    }
  });
  std::size_t flipped = 0;
  for (auto& r : rows) {
    rep.pairs += r.pairs;
    rep.isomorphic += r.iso;
    flipped += r.flipped;
    for (auto& b : r.bad) rep.counterexamples.push_back(std::move(b));
  }
  std::map<std::string, std::size_t> shapes;
  for (const auto& v : ivs) ++shapes[name(interval_type(v.x, v.y).shape)];
  std::string s = "shapes:";
  for (const auto& [k, n] : shapes) s += " " + k + "=" + std::to_string(n);
  rep.notes.push_back(s);
  rep.notes.push_back("isomorphic pairs realized through sigma: " + std::to_string(flipped));
  rep.seconds = since(t0);
  return rep;
}

// ------------------------------------------------------------ lower intervals

LowerVerdict lower_classification(Elt u, Elt v) {
  LowerVerdict out;
  const auto a = interval_poset(kId, u), b = interval_poset(kId, v);
  out.isomorphic = canonical_form(a).cert == canonical_form(b).cert;
  for (GElt g : group_G()) out.same_orbit = out.same_orbit || apply(g, u) == v;
  return out;
}

SweepReport lower_classification_sweep(int max_len, int jobs) {
  const auto t0 = Clock::now();
  SweepReport rep;
  rep.sweep = "lower-classification";
  rep.group = "A2";
  rep.max_len_x = 0;
  rep.max_len_xy = max_len;

  const std::vector<Elt> elems = ball(max_len);
  std::vector<IntervalPoset> ps(elems.size());
  std::vector<Certificate> certs(elems.size());
  parallel_for(elems.size(), jobs, [&](std::size_t i) {
    ps[i] = interval_poset(kId, elems[i]);
    certs[i] = canonical_form(ps[i]).cert;
  });
  rep.intervals = elems.size();

  std::vector<std::vector<Counterexample>> rows(elems.size());
  std::vector<std::size_t> npairs(elems.size()), niso(elems.size());
  parallel_for(elems.size(), jobs, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (length(elems[j]) != length(elems[i])) continue;
      ++npairs[i];
      const Elt u = elems[i], v = elems[j];
      bool orbit = false;
      for (GElt g : group_G()) orbit = orbit || apply(g, u) == v;
      const bool cert = certs[i] == certs[j];
      bool iso = false;
      if (ps[i].size() == ps[j].size()) iso = checked_iso(ps[i], ps[j]).has_value();
      niso[i] += iso;
      if (cert != iso) rows[i].push_back({word_string(u), word_string(v), "certificate and explicit search disagree"});
      if (iso != orbit)
        rows[i].push_back({word_string(u), word_string(v), iso ? "isomorphic, different orbits" : "same orbit, not isomorphic"});
    }
  });
  for (std::size_t i = 0; i < elems.size(); ++i) {
    rep.pairs += npairs[i];
    rep.isomorphic += niso[i];
    for (auto& b : rows[i]) rep.counterexamples.push_back(std::move(b));
  }
  rep.seconds = since(t0);
  return rep;
}

// ------------------------------------------------------------ dihedral subposets

std::vector<Elt> dihedral_subposet(Elt x, Elt y) {
  std::vector<Elt> out;
  for (Elt z : interval_geom(x, y))
    if (is_dihedral(x, z) || is_dihedral(z, y)) out.push_back(z);
  return out;
}

namespace {

struct FullData {
  Elt x, y;
  Certificate interval, dihedral;
  std::size_t size = 0;
  bool complement_not_below = false;
};

FullData full_data(Elt x, Elt y) {
  FullData f{x, y, {}, {}, 0, false};
  std::vector<Elt> elems;
  const IntervalPoset p = interval_poset(x, y, &elems);
  f.size = elems.size();
  f.interval = canonical_form(p).cert;
  std::vector<int> sub;
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (is_dihedral(x, elems[i]) || is_dihedral(elems[i], y)) sub.push_back(static_cast<int>(i));
  f.dihedral = canonical_form(p.induced(sub)).cert;
  // Literal reading over the ball of radius l(y) + 1: some z is neither
  // above x nor below y.
  for (Elt z : ball(length(y) + 1))
    if (!geq_geom(x, z) && !leq_lower(z, y)) {
      f.complement_not_below = true;
      break;
    }
  return f;
}

}  // namespace

InsightF insight_f_check(Elt x, Elt y, Elt x2, Elt y2) {
  const FullData a = full_data(x, y), b = full_data(x2, y2);
  InsightF r;
  r.lhs = a.interval == b.interval;
  r.rhs = a.dihedral == b.dihedral;
  r.complement_not_below = a.complement_not_below && b.complement_not_below;
  r.same_size = a.size == b.size;
  return r;
}

InsightCensus insight_f_census(int max_len_x, int max_len_xy, int jobs) {
  InsightCensus c;
  // Chamber of an endpoint: 0 for C+, 1 for s0 C+.
  auto chamber = [](Elt z) -> int { return is_dominant(z) ? 0 : (in_s0_chamber(z) ? 1 : -1); };
  const auto elems = ball(max_len_x + max_len_xy);
  std::vector<std::pair<Elt, Elt>> pairs;
  for (Elt x : elems) {
    if (length(x) > max_len_x || chamber(x) < 0) continue;
    for (Elt y : elems) {
      const int d = length(y) - length(x);
      if (d < 1 || d > max_len_xy || chamber(y) < 0 || !is_full(x, y)) continue;
      pairs.emplace_back(x, y);
    }
  }
  std::vector<FullData> data(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t i) { data[i] = full_data(pairs[i].first, pairs[i].second); });
  c.intervals = data.size();
  for (const auto& f : data) c.complement_false += !f.complement_not_below;
  for (std::size_t i = 0; i < data.size(); ++i)
    for (std::size_t j = i + 1; j < data.size(); ++j) {
      const FullData &a = data[i], &b = data[j];
      if (chamber(a.x) != chamber(b.x) || chamber(a.y) != chamber(b.y)) continue;
      if (length(a.y) - length(a.x) != length(b.y) - length(b.x)) continue;
      ++c.pairs;
      const bool lhs = a.interval == b.interval;
      const bool rhs = a.dihedral == b.dihedral;
      const bool fix = rhs && a.complement_not_below && b.complement_not_below && a.size == b.size;
      c.lhs_true += lhs;
      c.rhs_agree += lhs == rhs;
      c.fix_agree += lhs == fix;
      if (lhs != fix)
        c.disagreements.push_back({iv_name(a.x, a.y), iv_name(b.x, b.y),
                                   lhs ? "isomorphic, dihedral data differ" : "dihedral data agree, not isomorphic"});
    }
  return c;
}

// ------------------------------------------------------------ stabilization

std::optional<int> stabilization_find_n0(Elt x, Elt y, Weight lambda, int n_max) {
  auto scaled = [&](int n) { return Weight{lambda.a * n, lambda.b * n}; };
  std::vector<std::optional<std::pair<IntervalPoset, Certificate>>> cache(n_max + 4);
  auto at = [&](int n) -> const std::pair<IntervalPoset, Certificate>& {
    if (!cache[n]) {
      auto p = interval_poset(shift(x, scaled(n)), shift(y, scaled(n)));
      auto c = canonical_form(p).cert;
      cache[n].emplace(std::move(p), std::move(c));
    }
    return *cache[n];
  };
  for (int n0 = 0; n0 <= n_max; ++n0) {
    const Elt x0 = shift(x, scaled(n0)), y0 = shift(y, scaled(n0));
    bool ok = true;
    for (int n = n0 + 1; ok && n <= n0 + 3; ++n) {
      ok = pgn_translation_law(x0, y0, scaled(n - n0));
      if (!ok) break;
      if (translate_interval(x0, y0, scaled(n - n0)).is_poset_iso) continue;
      const auto& [p0, c0] = at(n0);
      const auto& [p1, c1] = at(n);
      ok = c0 == c1 && checked_iso(p0, p1).has_value();
    }
    if (ok) return n0;
  }
  return std::nullopt;
}

}  // namespace bruhat::a2
