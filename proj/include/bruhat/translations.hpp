#pragma once

// Piecewise translations of the A2 alcove model: an element in zone F_w is
// moved by w applied to a fundamental weight.

#include "bruhat/a2.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bruhat::a2 {

// Dominant weight a*w1 + b*w2.
struct Weight {
  Int a = 0, b = 0;
  Pt pt() const { return {6 * a, 6 * b}; }
  bool is_zero() const { return a == 0 && b == 0; }
  auto operator<=>(const Weight&) const = default;
};

std::string to_string(Weight w);

Elt tau(Elt z, int i);
// tau_1^a after tau_2^b.
Elt tau_lambda(Elt z, Weight lambda);
inline Elt shift(Elt z, Weight lambda) { return z + lambda.pt(); }

struct TranslationReport {
  bool image_inside = false;  // tau([x,y]) inside [x+l, y+l]
  bool is_bijection = false;
  bool is_poset_iso = false;
  std::size_t card_source = 0;
  std::size_t card_target = 0;
};

// Both intervals enumerated; order checked in both directions.
TranslationReport translate_interval(Elt x, Elt y, Weight lambda);

// Pgn_{x,y} + lambda == Pgn_{x+lambda, y+lambda}.
bool pgn_translation_law(Elt x, Elt y, Weight lambda);

struct Comparability {
  Elt u, v;
  Weight lambda, lambda2;
};

// Witness that tau_lambda: [x,y] -> [u,v] and tau_lambda2: [x2,y2] -> [u,v]
// are poset isomorphisms.  Candidates are lambda0 + mu, lambda0 the least
// pair of dominant weights with x + lambda = x2 + lambda2, and mu ranging
// over {0..bound}^2.
std::optional<Comparability> comparable(Elt x, Elt y, Elt x2, Elt y2, int bound = 2);

}  // namespace bruhat::a2
