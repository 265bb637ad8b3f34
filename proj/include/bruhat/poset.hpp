#pragma once

// Isomorphism of finite bounded posets given by their cover relations:
// canonical certificates (colour refinement plus individualization) and a
// direct bijection search used to cross-check them.

#include "bruhat/coxeter.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace bruhat {

struct Certificate {
  std::vector<std::uint32_t> code;
  std::size_t hash = 0;
  bool operator==(const Certificate& o) const { return hash == o.hash && code == o.code; }
  bool operator<(const Certificate& o) const { return code < o.code; }
};

struct CertificateHash {
  std::size_t operator()(const Certificate& c) const noexcept { return c.hash; }
};

struct CanonicalPoset {
  Certificate cert;
  std::vector<int> label;  // element -> canonical index
};

// Height of each element: longest chain from a minimal element, computed on
// covers, so it is an isomorphism invariant of the cover graph.
std::vector<int> heights(const IntervalPoset& p);

CanonicalPoset canonical_form(const IntervalPoset& p);

// phi[a] = image of a, preserving covers in both directions.
std::optional<std::vector<int>> poset_isomorphism(const IntervalPoset& a, const IntervalPoset& b);

// Checks that phi is a bijection preserving the order relation both ways.
bool verify_isomorphism(const IntervalPoset& a, const IntervalPoset& b, const std::vector<int>& phi);

}  // namespace bruhat
