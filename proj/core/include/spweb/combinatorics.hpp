#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spweb/diagram.hpp"

namespace spweb {

struct MalformedTableau : std::runtime_error {
  explicit MalformedTableau(const std::string& w) : std::runtime_error(w) {}
};

// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;
  int rows() const { return (int)parts.size(); }
  int size() const;
  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator<(const Partition& o) const { return parts < o.parts; }
  std::string str() const;
};

// Sequence of partitions starting and ending wherever, each differing from
// the previous by exactly one box; shapes[0] is the empty partition.
struct OscTableau {
  std::vector<Partition> shapes;  // shapes[0] = empty, length m+1 entries
  int length() const { return (int)shapes.size() - 1; }
  int max_rows() const;
  void validate() const;  // throws MalformedTableau
};

// All (m-1)!! matchings of m points in lexicographic order of partner vector.
std::vector<Matching> enumerate_matchings(int m);

// Largest j such that the matching contains j pairwise-crossing pairs.
int max_crossing(const Matching& m);

// Number of matchings of m points with max_crossing <= n.
long count_avoiding(int m, int n);

// All up-down tableaux of length m from empty to empty with at most max_rows
// rows throughout.
std::vector<OscTableau> enumerate_osc(int m, int max_rows);

// Number of length-m up-down walks from empty to target with <= n rows.
long walk_count(int n, int m, const Partition& target);

Matching tableau_to_matching(const OscTableau& t);
OscTableau matching_to_tableau(const Matching& mt);

}  // namespace spweb
