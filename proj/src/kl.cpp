#include "bruhat/kl.hpp"

namespace bruhat::a2 {

const char* name(KlSource s) {
  switch (s) {
    case KlSource::ClosedTheta: return "closed-theta";
    case KlSource::ClosedThetaS: return "closed-theta-s";
    case KlSource::Crown: return "crown";
    case KlSource::Oracle: return "oracle";
  }
  return "?";
}

namespace {

DomParams check_pair(Elt x, Elt y, bool want_s) {
  const auto dy = dominant_params(y);
  if (!dy || dy->s != want_s) throw UndefinedPairError("upper element has the wrong family");
  if (!leq_lower(x, y)) throw UndefinedPairError("x is not below y");
  return *dy;
}

// max{j >= 0 : x <= theta(m-j, n-j)}, or -1 when there is none.
Int theta_depth(Elt x, Int m, Int n) {
  Int k = -1;
  for (Int j = 0; j <= m && j <= n; ++j) {
    if (!leq_lower(x, theta(m - j, n - j))) break;
    k = j;
  }
  return k;
}

}  // namespace

QPoly kl_closed_theta(Elt x, Elt y) {
  const DomParams d = check_pair(x, y, false);
  return QPoly::sum_q(static_cast<int>(theta_depth(x, d.m, d.n)));
}

QPoly kl_closed_theta_s(Elt x, Elt y) {
  const DomParams d = check_pair(x, y, true);
  // 1 + q P_{x,theta(m-1,n)} + q P_{x,theta(m,n-1)}, terms present when x is below.
  QPoly p = QPoly::one();
  for (Int k : {theta_depth(x, d.m - 1, d.n), theta_depth(x, d.m, d.n - 1)})
    if (k >= 0) p += QPoly::sum_q(static_cast<int>(k)).shifted(1);
  return p;
}

int crown_count(Elt w, Elt w2) {
  const IntervalPoset p = interval_poset(w, w2);
  const auto le = p.below();
  int count = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (p.rank[b] - p.rank[a] != 3 || !le[b][a]) continue;
      int atoms = 0;
      for (int u : p.up[a]) atoms += le[b][u];
      count += atoms == 2;
    }
  return count;
}

QPoly kl_crown(Elt w, Elt w2) {
  if (length(w2) - length(w) != 4) throw UnsupportedLengthError("crown formula needs l(w,w') = 4");
  if (!leq_lower(w, w2)) throw UndefinedPairError("w is not below w'");
  const IntervalPoset p = interval_poset(w, w2);
  const Int coatoms = static_cast<Int>(p.down.back().size());
  return QPoly({1, coatoms + crown_count(w, w2) / 2 - 4});
}

KlOracle::KlOracle(int max_len)
    : ball_(std::make_unique<Ball>(GroupSpec::parse("A2"), max_len)),
      table_(std::make_unique<KLTable>(*ball_)) {}

int KlOracle::index(Elt z) const {
  const int i = ball_->index_of_word(normal_word(z));
  if (i < 0) throw OutOfBallError("element " + word_string(z) + " is outside the ball");
  return i;
}

QPoly KlOracle::P(Elt x, Elt y) { return table_->P(index(x), index(y)); }

KlResult kl(Elt x, Elt y, KlOracle* oracle) {
  if (is_dominant(x) && leq_lower(x, y)) {
    if (const auto d = dominant_params(y)) {
      if (d->s) return {kl_closed_theta_s(x, y), KlSource::ClosedThetaS};
      return {kl_closed_theta(x, y), KlSource::ClosedTheta};
    }
  }
  if (length(y) - length(x) == 4 && leq_lower(x, y)) return {kl_crown(x, y), KlSource::Crown};
  if (!oracle) throw UndefinedPairError("no closed form applies and no oracle was given");
  return {oracle->P(x, y), KlSource::Oracle};
}

}  // namespace bruhat::a2
