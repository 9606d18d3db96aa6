#pragma once

#include <string>
#include <vector>

#include "spweb/homspace.hpp"

namespace spweb {

struct BMWLetter {
  enum class Kind { G, Ginv, E } kind;
  int i;  // 1-based position, 1 <= i <= strands-1
};

struct BMWWord {
  int strands = 1;
  std::vector<BMWLetter> letters;
};

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;  // signed generator indices, |v| in 1..strands-1

  static BraidWord parse(int strands, const std::string& text);
  int writhe() const;
};

// the homomorphism from the BMW algebra at r = -q^{2n+1}, z = q - q^{-1}
Morphism rho(const BMWWord& w, Hom& H);
Morphism rho_letter(const BMWLetter& l, int strands, Hom& H);

struct BMWCheck {
  std::string relation;
  int i = 0, j = 0;
  bool ok = false;
};

// all eight defining relation families on s strands, instance by instance
std::vector<BMWCheck> verify_bmw(Hom& H, int s);

// scalar of the braid closure; normalized divides out the framing kinks
RatFunc link_invariant(const BraidWord& b, Hom& H, bool framing_normalized);

}  // namespace spweb
