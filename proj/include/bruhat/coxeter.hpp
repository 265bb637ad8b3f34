#pragma once

#include "bruhat/geometry.hpp"

#include <boost/dynamic_bitset.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace bruhat {

inline constexpr int kMaxRank = 4;

using Word = std::vector<int>;

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OutOfBallError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class EmptyIntervalError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Family { A, B, C, G };

// Affine Weyl group acting on the coweight coordinates v_i = (alpha_i, v).
// The fundamental alcove is {(alpha_i, v) < 0, (theta, v) > -1}.
class GroupSpec {
 public:
  static GroupSpec affine(Family f, int rank);
  // "A2aff", "A2", "A3", "B2", "C2", "G2" (case-insensitive, optional "aff"/"~").
  static GroupSpec parse(const std::string& name);

  Family family() const { return family_; }
  int rank() const { return n_; }
  int generators() const { return n_ + 1; }
  std::string name() const;

  Int cartan(int i, int j) const { return cartan_[i][j]; }
  // Order of s_i s_j.
  int coxeter_m(int i, int j) const { return m_[i][j]; }
  const std::vector<std::array<Int, kMaxRank>>& positive_roots() const { return pos_roots_; }
  const std::array<Int, kMaxRank>& highest_root() const { return theta_; }
  const std::array<Int, kMaxRank>& highest_coroot() const { return theta_coroot_; }
  // Permutations of {0..n} preserving the affine Coxeter matrix.
  const std::vector<std::vector<int>>& diagram_automorphisms() const { return autos_; }

 private:
  Family family_ = Family::A;
  int n_ = 0;
  std::array<std::array<Int, kMaxRank>, kMaxRank> cartan_{};
  std::array<Int, kMaxRank> theta_{};
  std::array<Int, kMaxRank> theta_coroot_{};
  std::vector<std::array<Int, kMaxRank>> pos_roots_;
  std::vector<std::vector<int>> m_;
  std::vector<std::vector<int>> autos_;

  void finish();
};

// v -> M v + t with M the linear part on coweight coordinates and t = w(0).
struct GroupElt {
  int n = 0;
  std::array<Int, kMaxRank * kMaxRank> m{};
  std::array<Int, kMaxRank> t{};

  static GroupElt identity(int n);
  static GroupElt generator(const GroupSpec& g, int i);

  GroupElt operator*(const GroupElt& o) const;
  GroupElt inverse() const;

  // D * w(p / D) for an integer vector p.
  std::array<Int, kMaxRank> apply_scaled(const std::array<Int, kMaxRank>& p, Int denom) const;

  bool operator==(const GroupElt& o) const { return n == o.n && m == o.m && t == o.t; }
};

struct GroupEltHash {
  std::size_t operator()(const GroupElt& e) const noexcept;
};

// Length from hyperplane counting between the fundamental alcove and its image.
int geometric_length(const GroupSpec& g, const GroupElt& w);

GroupElt eval_word(const GroupSpec& g, const Word& w);

// denom * (barycenter of the alcove of w); denom depends only on the type.
std::array<Int, kMaxRank> alcove_barycenter(const GroupSpec& g, const GroupElt& w, Int& denom);

// Alcove of w inside the dominant chamber {(alpha_i, v) > 0}.
bool in_dominant_chamber(const GroupSpec& g, const GroupElt& w);

// Finite graded poset with a unique bottom (index 0) and top (last index);
// elements are sorted by rank.
struct IntervalPoset {
  std::vector<int> rank;
  std::vector<std::vector<int>> up;
  std::vector<std::vector<int>> down;

  std::size_t size() const { return rank.size(); }
  int length() const { return rank.empty() ? -1 : rank.back(); }
  std::vector<int> lc() const;
  // Reflexive order relation: leq()[b][a] is a <= b.
  std::vector<boost::dynamic_bitset<>> below() const;
  // Sub-poset induced on a subset (indices into this poset), order inherited.
  IntervalPoset induced(const std::vector<int>& subset) const;
};

class Ball {
 public:
  // Every element of length <= max_len; capacity caps the element count.
  Ball(GroupSpec spec, int max_len, std::size_t capacity = 4'000'000);

  const GroupSpec& spec() const { return spec_; }
  int max_len() const { return max_len_; }
  std::size_t size() const { return elts_.size(); }

  const GroupElt& elt(int i) const { return elts_[i]; }
  int length(int i) const { return len_[i]; }
  const Word& word(int i) const { return words_[i]; }
  // Index or -1 when absent.
  int find(const GroupElt& e) const;
  int index_of_word(const Word& w) const;
  int at(const GroupElt& e) const;  // throws OutOfBallError

  int right_mul(int i, int s) const { return right_[i][s]; }
  int left_mul(int s, int i) const { return left_[i][s]; }
  int inverse(int i) const { return inv_[i]; }

  const std::vector<int>& lower_covers(int i) const { return lower_[i]; }
  const std::vector<int>& upper_covers(int i) const;  // requires length(i) < max_len

  bool leq(int a, int b) const { return down_[b][a]; }
  const boost::dynamic_bitset<>& downset(int b) const { return down_[b]; }
  const boost::dynamic_bitset<>& upset(int a) const { return up_[a]; }

  // Elements of [a, b] sorted by (length, word); throws EmptyIntervalError if a !<= b.
  std::vector<int> interval_elements(int a, int b) const;
  IntervalPoset interval(int a, int b) const;
  IntervalPoset poset_on(const std::vector<int>& elems) const;

  std::vector<int> lc_sequence(int a, int b) const;
  bool is_full(int a, int b) const;
  bool is_dihedral(int a, int b) const;
  bool subword_leq(int a, int b) const;

  // Diagram automorphism applied by relabeling a reduced word.
  int apply_automorphism(const std::vector<int>& perm, int i) const;

  void save(const std::string& path) const;
  static Ball load(const std::string& path, std::size_t capacity = 4'000'000);

  // Word with digits 0..n; A2 uses 1,2,3 with 3 for s0 when a2_digits is set.
  std::string word_string(int i, bool a2_digits = false) const;

 private:
  GroupSpec spec_;
  int max_len_;
  std::vector<GroupElt> elts_;
  std::vector<int> len_;
  std::vector<Word> words_;
  std::unordered_map<GroupElt, int, GroupEltHash> index_;
  std::vector<std::vector<int>> right_, left_;
  std::vector<int> inv_;
  std::vector<std::vector<int>> lower_, upper_;
  std::vector<boost::dynamic_bitset<>> down_, up_;

  void build(std::size_t capacity);
  void build_order();
};

using Coweight = std::array<Int, kMaxRank>;  // coordinates (alpha_i, lambda)

struct CoweightHash {
  std::size_t operator()(const Coweight& c) const noexcept;
};

// Translations of alcoves by coweights, restricted to a ball.
class AlcoveTranslations {
 public:
  explicit AlcoveTranslations(const Ball& ball);

  const Ball& ball() const { return *ball_; }
  // Element whose alcove is A_i + lambda, or -1 when it is outside the ball.
  int translate(int i, const Coweight& lambda) const;
  // lambda with A_a + lambda = A_b, when it exists.
  std::optional<Coweight> difference(int a, int b) const;
  bool dominant(int i) const;

 private:
  const Ball* ball_;
  Int denom_ = 1;
  std::vector<Coweight> bary_;
  std::unordered_map<Coweight, int, CoweightHash> index_;
};

Word parse_word(const std::string& s, int generators);
std::string format_word(const Word& w, bool a2_digits);

// Polynomial in q with integer coefficients; no trailing zeros.
struct QPoly {
  std::vector<Int> c;

  QPoly() = default;
  explicit QPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }
  static QPoly one() { return QPoly({1}); }
  static QPoly sum_q(int k);  // 1 + q + ... + q^k

  int degree() const { return static_cast<int>(c.size()) - 1; }
  Int coeff(int i) const { return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : 0; }
  bool is_zero() const { return c.empty(); }

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly shifted(int k) const;
  QPoly scaled(Int k) const;
  bool operator==(const QPoly& o) const { return c == o.c; }
  std::string str() const;

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
};

QPoly operator+(QPoly a, const QPoly& b);
QPoly operator-(QPoly a, const QPoly& b);

// Kazhdan-Lusztig polynomials by the standard left-descent recursion.
class KLTable {
 public:
  explicit KLTable(const Ball& ball);

  const QPoly& P(int x, int w);
  Int mu(int z, int w);

 private:
  const Ball& ball_;
  std::vector<std::unordered_map<int, QPoly>> memo_;
  QPoly zero_;

  void fill(int w);
};

// f_i <= f_j for 0 <= i < j <= l - i on LC(id, y).
bool be_monotone(const std::vector<int>& lc);

}  // namespace bruhat
