#include "spweb/bmw.hpp"

#include <sstream>

namespace spweb {

BraidWord BraidWord::parse(int strands, const std::string& text) {
  BraidWord w;
  w.strands = strands;
  std::istringstream is(text);
  long v;
  while (is >> v) {
    if (v == 0 || std::abs(v) >= strands)
      throw std::invalid_argument("braid letter out of range: " + std::to_string(v));
    w.letters.push_back((int)v);
  }
  return w;
}

int BraidWord::writhe() const {
  int w = 0;
  for (int v : letters) w += v > 0 ? 1 : -1;
  return w;
}

Morphism rho_letter(const BMWLetter& l, int strands, Hom& H) {
  Morphism mid;
  switch (l.kind) {
    case BMWLetter::Kind::G:
      mid = H.crossing(+1);
      break;
    case BMWLetter::Kind::Ginv:
      mid = H.crossing(-1);
      break;
    case BMWLetter::Kind::E:
      mid = H.cupcap2();
      break;
  }
  Morphism out = mid;
  if (l.i - 1 > 0) out = H.tensor(H.identity(l.i - 1), out);
  if (strands - l.i - 1 > 0) out = H.tensor(out, H.identity(strands - l.i - 1));
  return out;
}

Morphism rho(const BMWWord& w, Hom& H) {
  Morphism cur = H.identity(w.strands);
  for (auto& l : w.letters) {
    if (l.i < 1 || l.i > w.strands - 1) throw std::invalid_argument("BMW letter out of range");
    cur = H.compose(rho_letter(l, w.strands, H), cur);
  }
  return cur;
}

std::vector<BMWCheck> verify_bmw(Hom& H, int s) {
  using K = BMWLetter::Kind;
  std::vector<BMWCheck> out;
  auto word = [&](std::vector<BMWLetter> ls) {
    BMWWord w;
    w.strands = s;
    w.letters = std::move(ls);
    return rho(w, H);
  };
  auto push = [&](const std::string& name, int i, int j, const Morphism& lhs, const Morphism& rhs) {
    out.push_back({name, i, j, H.morphism_equal(lhs, rhs)});
  };
  int n = H.n();
  RatFunc z = RatFunc::q(1) - RatFunc::q(-1);
  RatFunc rinv = -RatFunc::q(-(2 * n + 1));
  RatFunc r = -RatFunc::q(2 * n + 1);
  for (int i = 1; i <= s - 1; ++i) {
    // (1) g - g^{-1} = z(1 - e); g g^{-1} = 1
    push("kauffman-skein", i, 0,
         word({{K::G, i}}) - word({{K::Ginv, i}}),
         (H.identity(s) - word({{K::E, i}})).scaled(z));
    push("g-ginv", i, 0, word({{K::G, i}, {K::Ginv, i}}), H.identity(s));
    push("ginv-g", i, 0, word({{K::Ginv, i}, {K::G, i}}), H.identity(s));
    // (2) e^2 = (1 - [2n+1]) e
    push("e-squared", i, 0, word({{K::E, i}, {K::E, i}}),
         word({{K::E, i}}).scaled(RatFunc(1) - qint(2 * n + 1)));
    // (7) e g = g e = r^{-1} e
    push("eg", i, 0, word({{K::E, i}, {K::G, i}}), word({{K::E, i}}).scaled(rinv));
    push("ge", i, 0, word({{K::G, i}, {K::E, i}}), word({{K::E, i}}).scaled(rinv));
  }
  for (int i = 1; i <= s - 2; ++i) {
    // (3) braid relation
    push("braid", i, 0, word({{K::G, i}, {K::G, i + 1}, {K::G, i}}),
         word({{K::G, i + 1}, {K::G, i}, {K::G, i + 1}}));
    // (5) e_i e_{i+1} e_i = e_i and symmetric
    push("eee", i, i + 1, word({{K::E, i}, {K::E, i + 1}, {K::E, i}}), word({{K::E, i}}));
    push("eee", i + 1, i, word({{K::E, i + 1}, {K::E, i}, {K::E, i + 1}}),
         word({{K::E, i + 1}}));
    // (6) g_i g_{i+1} e_i = e_{i+1} e_i and symmetric
    push("gge", i, 0, word({{K::E, i}, {K::G, i + 1}, {K::G, i}}),
         word({{K::E, i}, {K::E, i + 1}}));
    push("gge", i + 1, 0, word({{K::E, i + 1}, {K::G, i}, {K::G, i + 1}}),
         word({{K::E, i + 1}, {K::E, i}}));
    // (8) e_i g_{i+1} e_i = r e_i and symmetric
    push("ege", i, 0, word({{K::E, i}, {K::G, i + 1}, {K::E, i}}),
         word({{K::E, i}}).scaled(r));
    push("ege", i + 1, 0, word({{K::E, i + 1}, {K::G, i}, {K::E, i + 1}}),
         word({{K::E, i + 1}}).scaled(r));
  }
  // (4) distant commutation
  for (int i = 1; i <= s - 1; ++i)
    for (int j = i + 2; j <= s - 1; ++j) {
      push("gg-distant", i, j, word({{K::G, i}, {K::G, j}}), word({{K::G, j}, {K::G, i}}));
      push("ee-distant", i, j, word({{K::E, i}, {K::E, j}}), word({{K::E, j}, {K::E, i}}));
    }
  return out;
}

RatFunc link_invariant(const BraidWord& b, Hom& H, bool framing_normalized) {
  BMWWord w;
  w.strands = b.strands;
  for (int v : b.letters)
    w.letters.push_back({v > 0 ? BMWLetter::Kind::G : BMWLetter::Kind::Ginv, std::abs(v)});
  RatFunc v = H.closed_value(rho(w, H));
  if (framing_normalized) {
    int wr = b.writhe();
    // a positive kink contributes -q^{2n+1}, so scale by (-q^{-(2n+1)})^writhe
    RatFunc tw = -RatFunc::q(-(2 * H.n() + 1));
    for (int i = 0; i < std::abs(wr); ++i) v = wr > 0 ? v * tw : v * tw.inv();
  }
  return v;
}

}  // namespace spweb
