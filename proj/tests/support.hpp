#pragma once

#include "bruhat/a2.hpp"
#include "bruhat/coxeter.hpp"

#include <vector>

namespace testing {

inline const bruhat::GroupSpec& a2_spec() {
  static const bruhat::GroupSpec g = bruhat::GroupSpec::parse("A2");
  return g;
}

// Shared oracle balls, built on first use.
inline const bruhat::Ball& a2_ball(int len) {
  static const bruhat::Ball b8(a2_spec(), 8), b12(a2_spec(), 12);
  return len <= 8 ? b8 : b12;
}

inline bruhat::a2::Elt elt(const bruhat::Ball& b, int i) { return bruhat::a2::from_word(b.word(i)); }

inline int index(const bruhat::Ball& b, bruhat::a2::Elt z) { return b.index_of_word(bruhat::a2::reduced_word(z)); }

inline std::vector<bruhat::a2::Elt> elts(const bruhat::Ball& b, const std::vector<int>& idx) {
  std::vector<bruhat::a2::Elt> out;
  for (int i : idx) out.push_back(elt(b, i));
  bruhat::a2::sort_elements(out);
  return out;
}

}  // namespace testing
