#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "spweb/combinatorics.hpp"
#include "spweb/diagram.hpp"
#include "spweb/skein.hpp"

#include "json.hpp"

namespace spweb {

struct NoSolution : std::runtime_error {
  explicit NoSolution(const std::string& w) : std::runtime_error(w) {}
};
struct NonUnique : std::runtime_error {
  explicit NonUnique(const std::string& w) : std::runtime_error(w) {}
};

// Formal Q(q)-combination of canonical reduced diagrams, one per matching.
struct Morphism {
  int bottom = 0, top = 0;
  std::map<Matching, RatFunc> coords;

  bool is_zero() const { return coords.empty(); }
  Morphism operator-() const;
  friend Morphism operator+(const Morphism& a, const Morphism& b);
  friend Morphism operator-(const Morphism& a, const Morphism& b);
  Morphism scaled(const RatFunc& c) const;
  nlohmann::json to_json() const;
};

struct GramMatrix {
  int n = 1;
  int points = 0;
  std::vector<Matching> basis;
  std::vector<std::vector<RatFunc>> entries;  // row-major, symmetric
  nlohmann::json to_json() const;
};

enum class RankMode { Exact, Probabilistic };

struct RankResult {
  int rank = 0;
  RankMode mode = RankMode::Exact;
  int trials = 0;
  uint64_t seed = 0;
};

// Per-rank computation context; owns the symbolic engine and caches.
class Hom {
 public:
  explicit Hom(int n);
  int n() const { return n_; }
  SymbolicEngine& engine() { return eng_; }

  Morphism unit(const Matching& m, int bottom, int top) const;
  Morphism identity(int w) const;
  Morphism zero(int bottom, int top) const;
  Morphism from_diagram(const Diagram& d);

  // compose(f, g) = f after g (g at the bottom)
  Morphism compose(const Morphism& f, const Morphism& g);
  Morphism tensor(const Morphism& f, const Morphism& g);
  Morphism dual_flip(const Morphism& f);

  RatFunc trace_pair(const Morphism& f, const Morphism& g);
  bool morphism_equal(const Morphism& f, const Morphism& g);
  bool is_gram_zero(const Morphism& f);

  // full trace closure of an endomorphism-shaped morphism
  RatFunc closed_value(const Morphism& f);

  GramMatrix gram(int points);
  RankResult gram_rank(int points, RankMode mode, uint64_t seed = 1, int trials = 3);

  // the clasp idempotent on k strands (1 <= k <= n)
  Morphism clasp(int k);
  // braiding: +1 = positive crossing q id - X + q^{-1} cupcap
  Morphism crossing(int sign) const;

  // elementary diagrams as morphisms
  Morphism cupcap2() const;  // on 2 strands: cap then cup
  Morphism x2() const;       // the quadrivalent crossing

  int jobs = 1;  // worker threads for gram assembly

 private:
  int n_;
  SymbolicEngine eng_;
  std::map<int, Morphism> clasp_cache_;
  std::map<std::string, RatFunc> pair_cache_;

  RatFunc basis_pair(const Matching& m1, const Matching& m2, int bottom, int top);
};

// exact rank of a symmetric RatFunc matrix by fraction-free elimination
int exact_rank(std::vector<std::vector<RatFunc>> a);

}  // namespace spweb
