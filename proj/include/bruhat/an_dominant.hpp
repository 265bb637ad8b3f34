#pragma once

// Dominant chamber of affine type A_n: dominance order on weights, vertex
// images x(-w_i), the vertex criterion for the Bruhat order, the
// parallelotopes Par^i and translations of dominant intervals.

#include "bruhat/coxeter.hpp"

#include <stdexcept>
#include <vector>

namespace bruhat::an {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InadmissibleShiftError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Weight in fundamental coordinates c_i = (alpha_i, lambda).
struct WeightVec {
  int n = 0;
  Coweight c{};

  // Coordinates in the basis of simple roots.
  std::array<Rat, kMaxRank> root_coords() const;
  bool dominant() const;
  bool in_root_lattice() const;
  WeightVec operator-(const WeightVec& o) const;
  WeightVec operator+(const WeightVec& o) const;
  bool operator==(const WeightVec& o) const { return n == o.n && c == o.c; }
};

// lambda <= mu iff mu - lambda has nonnegative root coordinates.
bool dominance_leq(const WeightVec& lambda, const WeightVec& mu);
// Same relation without the dominance precondition.
bool cone_leq(const WeightVec& lambda, const WeightVec& mu);

struct DomElt {
  GroupElt w;
  std::vector<WeightVec> v;  // v[i] = w(-w_i), v[0] = w(0)

  static DomElt make(const GroupSpec& g, const GroupElt& w);
  bool dominant() const;
};

// Requires type A.
void require_type_a(const GroupSpec& g);

bool bruhat_leq_dominant(const DomElt& x, const DomElt& y);

// z(-w_i) in Par^i_{x,y} intersected with the closed dominant chamber.
bool par_i(const DomElt& x, const DomElt& y, const DomElt& z, int i);

// [x, y] intersected with the dominant chamber, sorted by length.  Candidates
// t_mu w with w finite and mu in the root lattice, mu ranging over dominant
// weights below y(0).
std::vector<GroupElt> dominant_interval(const GroupSpec& g, const GroupElt& x, const GroupElt& y);

// {i : some alcove of [x,y] n W_+ has a vertex on the wall (alpha_i, v) = 0}.
std::vector<int> wall_index_set(const GroupSpec& g, const GroupElt& x, const GroupElt& y);

inline GroupElt translate(const GroupElt& z, const WeightVec& lambda) {
  GroupElt r = z;
  for (int i = 0; i < lambda.n; ++i) r.t[i] += lambda.c[i];
  return r;
}

struct TranslateReport {
  std::size_t size = 0;
  bool bijection = false;
  bool order_preserved = false;  // both directions
  bool is_iso() const { return bijection && order_preserved; }
};

// z -> z + lambda from [x,y] n W_+ to [x+lambda, y+lambda] n W_+, checked
// against the vertex criterion; lambda must be a root-lattice combination
// of w_i, i outside the wall index set, with nonnegative coefficients.
TranslateReport dominant_translate_iso(const GroupSpec& g, const GroupElt& x, const GroupElt& y,
                                       const WeightVec& lambda);

}  // namespace bruhat::an
