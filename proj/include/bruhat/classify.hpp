#pragma once

// Classification sweeps: thick intervals of A2 against their polygons, lower
// intervals against the automorphism group, the endpoint-translation
// conjecture for full intervals in any affine type, the dihedral-subposet
// census and stabilization of dominant translates.

#include "bruhat/a2.hpp"
#include "bruhat/coxeter.hpp"
#include "bruhat/poset.hpp"
#include "bruhat/translations.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bruhat {

struct Counterexample {
  std::string first, second;  // "x..y" in words
  std::string reason;
};

struct SweepReport {
  std::string sweep;
  std::string group;
  int max_len_x = 0;
  int max_len_xy = 0;
  std::size_t intervals = 0;
  std::size_t pairs = 0;          // pairs tested in depth
  std::size_t isomorphic = 0;     // of which poset-isomorphic
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;
  double seconds = 0;

  bool ok() const { return counterexamples.empty(); }
};

// For every pair of full intervals [x,y], [x2,y2] with x, y, x2, y2 in the
// dominant chamber, isomorphic, and x - g0 x2 a coweight for some g0 in G:
// some g in G has y - g y2 = x - g x2 a coweight.
SweepReport conjecture_e_sweep(const GroupSpec& spec, int max_len_x, int max_len_xy, int jobs = 0);

// Least n0 <= n_max with [x + n0 l, y + n0 l] isomorphic to its translates by
// 1, 2, 3 further steps; the ball must reach y + (n0 + 3) l.
std::optional<int> stabilization_find_n0(const AlcoveTranslations& tr, int x, int y, const Coweight& lambda,
                                         int n_max);

}  // namespace bruhat

namespace bruhat::a2 {

// phi an isomorphism [x,y] -> [x2,y2] on the listed elements: checks that the
// corner pairs {z_1, z_2} at both ends and x + rho are carried over, and that
// the dihedral sets D_x, D_y go to D_x2, D_y2.
bool corner_transport_check(Elt x, Elt y, Elt x2, Elt y2, const std::vector<Elt>& source,
                            const std::vector<Elt>& target, const std::vector<int>& phi);

// Thick intervals with x dominant, l(x) <= max_len_x, l(x,y) <= max_len_xy:
// isomorphism iff Pgn congruence modulo sigma and a weight translation, a
// comparability witness and corner transport for every isomorphic pair.
SweepReport thick_census(int max_len_x, int max_len_xy, int jobs = 0);

struct LowerVerdict {
  bool isomorphic = false;
  bool same_orbit = false;
  bool agree() const { return isomorphic == same_orbit; }
};

LowerVerdict lower_classification(Elt u, Elt v);
// All pairs with l(u) = l(v) <= max_len.
SweepReport lower_classification_sweep(int max_len, int jobs = 0);

// Dihedral endpoints: D_x = {z : [x,z] dihedral}, D_y = {z : [z,y] dihedral}.
std::vector<Elt> dihedral_subposet(Elt x, Elt y);

struct InsightF {
  bool lhs = false;                 // [x,y] ~ [x2,y2]
  bool rhs = false;                 // D_x u D_y ~ D_x2 u D_y2
  bool complement_not_below = false;  // W \ (>= x) not inside [id, y], evaluated on a ball
  bool same_size = false;
  bool fix() const { return rhs && complement_not_below && same_size; }
};

InsightF insight_f_check(Elt x, Elt y, Elt x2, Elt y2);

struct InsightCensus {
  std::size_t intervals = 0;
  std::size_t pairs = 0;
  std::size_t lhs_true = 0;
  std::size_t rhs_agree = 0;  // lhs == rhs
  std::size_t fix_agree = 0;  // lhs == fix()
  std::size_t complement_false = 0;
  std::vector<Counterexample> disagreements;
};

// Full intervals with x, y both in C+ or both in s0 C+ (per endpoint),
// l(x) <= max_len_x, 1 <= l(x,y) <= max_len_xy; pairs of equal length.
InsightCensus insight_f_census(int max_len_x, int max_len_xy, int jobs = 0);

// Least n0 <= n_max such that for n0 < n <= n0 + 3 the polygon law holds and
// [x + n0 l, y + n0 l] ~ [x + n l, y + n l].
std::optional<int> stabilization_find_n0(Elt x, Elt y, Weight lambda, int n_max);

}  // namespace bruhat::a2
