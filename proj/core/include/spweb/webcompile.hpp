#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "spweb/homspace.hpp"

namespace spweb {

struct LabelOutOfRange : std::runtime_error {
  explicit LabelOutOfRange(const std::string& w) : std::runtime_error(w) {}
};

// Labeled trivalent web term.  Labels live in 0..n; anything larger compiles
// to the zero morphism; 0-labeled edges are erased.
struct Web {
  enum class Kind { Id, Cap, Cup, Merge, Split, V3, Tensor, Compose } kind = Kind::Id;
  int k = 0, l = 0, m = 0;
  std::shared_ptr<Web> a, b;

  static Web id(int k);
  static Web cap(int k);
  static Web cup(int k);
  static Web merge(int k, int l);
  static Web split(int k, int l);
  static Web v3(int k, int l, int m);
  static Web ten(Web x, Web y);
  static Web cmp(Web x, Web y);  // x after y

  std::vector<int> bottom_labels() const;
  std::vector<int> top_labels() const;
  std::string str() const;
};

struct CompiledWeb {
  std::vector<int> bottom_labels, top_labels;
  Morphism morphism;
};

// Compiler from web terms to morphisms on 1-labeled strands; owns the
// per-rank caches of clasps and vertex normalizations.
class WebCompiler {
 public:
  explicit WebCompiler(Hom& h) : H(h) {}
  Hom& H;

  CompiledWeb compile(const Web& w);

  // black dictionary on clasped strand bundles
  Morphism clasp(int k);                  // identity of the k object (k <= n), zero beyond
  Morphism merge_m(int k, int l);         // k (x) l -> k+l
  Morphism split_m(int k, int l);         // k+l -> k (x) l
  Morphism cap_m(int k);                  // k (x) k -> empty
  Morphism cup_m(int k);                  // empty -> k (x) k
  Morphism v3_m(int k, int l, int m);     // k (x) l -> m
  Morphism iota(int k);                   // full split k -> 1^k (left recursion)
  Morphism iota_right(int k);             // right recursion
  Morphism pi(int k);                     // 1^k -> k, normalized by 1/[k]!

  // pivotal bends (black caps and cups carry the normalizations)
  Morphism bend_left_up(const Morphism& f, int label);
  Morphism bend_right_up(const Morphism& f, int label);
  Morphism bend_left_down(const Morphism& f, int label);
  Morphism bend_right_down(const Morphism& f, int label);
  Morphism rot180(const Morphism& f, const std::vector<int>& bottoms,
                  const std::vector<int>& tops);

 private:
  std::map<std::pair<int, int>, Morphism> merge_cache_;
};

// closed formula for the quantum dimension of the k-th fundamental object
RatFunc qdim_formula(int k, int n);
// successive-ratio identity, verified symbolically
bool qdim_ratio_check(int k, int n);

struct RelationResult {
  std::string name;
  std::map<std::string, int> params;
  bool ok = false;
  std::string detail;
};

// Verify one named relation instance; names: spn-a..spn-e, other-a..other-e,
// flowvertex, generalassoc, triangle, badbigon, nonzero, quad, fullsplit,
// reduction.
RelationResult verify_relation(const std::string& rel, WebCompiler& C,
                               const std::map<std::string, int>& params);

// the full ledger for one rank (all admissible parameters)
std::vector<RelationResult> relation_ledger(WebCompiler& C);

}  // namespace spweb
