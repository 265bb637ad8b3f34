#pragma once

// Kazhdan-Lusztig polynomials for A2: closed forms for dominant pairs below
// theta and theta^s, the crown formula in length 4, and the recursion.

#include "bruhat/a2.hpp"
#include "bruhat/coxeter.hpp"

#include <memory>
#include <stdexcept>

namespace bruhat::a2 {

class UndefinedPairError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedLengthError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class KlSource { ClosedTheta, ClosedThetaS, Crown, Oracle };
const char* name(KlSource s);

struct KlResult {
  QPoly p;
  KlSource source = KlSource::Oracle;
};

// y = theta(m,n), x dominant with x <= y.
QPoly kl_closed_theta(Elt x, Elt y);
// y = theta^s(m,n), x dominant with x <= y.
QPoly kl_closed_theta_s(Elt x, Elt y);

// Length-3 subintervals of [w, w2] with exactly two atoms.
int crown_count(Elt w, Elt w2);
// 1 + (c + B2/2 - 4) q with c the number of coatoms; requires l(w,w2) = 4.
QPoly kl_crown(Elt w, Elt w2);

// The standard recursion on a length ball of the generic engine.
class KlOracle {
 public:
  explicit KlOracle(int max_len);
  KlOracle(const KlOracle&) = delete;
  KlOracle& operator=(const KlOracle&) = delete;

  const Ball& ball() const { return *ball_; }
  int index(Elt z) const;  // throws OutOfBallError
  QPoly P(Elt x, Elt y);

 private:
  std::unique_ptr<Ball> ball_;
  std::unique_ptr<KLTable> table_;
};

// Closed form when one applies, else the crown formula in length 4, else
// the oracle (which must then be supplied).
KlResult kl(Elt x, Elt y, KlOracle* oracle = nullptr);

}  // namespace bruhat::a2
