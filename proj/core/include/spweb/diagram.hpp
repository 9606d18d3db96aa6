#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace spweb {

struct MalformedSliceWord : std::runtime_error {
  explicit MalformedSliceWord(const std::string& w) : std::runtime_error(w) {}
};
struct WidthMismatch : std::runtime_error {
  explicit WidthMismatch(const std::string& w) : std::runtime_error(w) {}
};

enum class Gen : uint8_t { Cross, Cap, Cup };

struct SliceGen {
  Gen kind;
  int pos;  // 1-based position within the current width
};

// A diagram presented as horizontal slices read bottom to top.
struct SliceWord {
  int bottom_width = 0;
  std::vector<SliceGen> slices;

  // Width after all slices; throws MalformedSliceWord on a width violation.
  int top_width() const;
  std::string str() const;
};

// Fixed-point-free involution on {0..m-1}; boundary points are read
// counterclockwise from the basepoint gap (bottom left to right, then top
// right to left).
struct Matching {
  std::vector<int> pair;  // pair[i] = partner of i

  Matching() = default;
  explicit Matching(std::vector<int> p);
  static Matching from_pairs(int m, const std::vector<std::pair<int, int>>& ps);

  int size() const { return (int)pair.size(); }
  friend bool operator==(const Matching& a, const Matching& b) { return a.pair == b.pair; }
  friend bool operator<(const Matching& a, const Matching& b) { return a.pair < b.pair; }
  std::string str() const;  // "a-b,c-d,..."
  static Matching parse(const std::string& s);
};

// Do the pairs {a1,b1}, {a2,b2} alternate around the circle?
bool is_inversion(std::pair<int, int> x1, std::pair<int, int> x2);
std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> inversions(const Matching& m);
int inversion_count(const Matching& m);

// One attachment point of an edge: a crossing slot or a boundary point.
struct End {
  int32_t node = 0;  // >= 0: crossing index; < 0: boundary point -1-b
  int8_t slot = 0;   // 0..3 at a crossing, 0 at the boundary

  static End boundary(int b) { return End{-1 - b, 0}; }
  static End cross(int c, int s) { return End{c, (int8_t)s}; }
  bool is_boundary() const { return node < 0; }
  int boundary_index() const { return -1 - node; }
  friend bool operator==(const End& a, const End& b) { return a.node == b.node && a.slot == b.slot; }
  friend bool operator<(const End& a, const End& b) {
    return a.node != b.node ? a.node < b.node : a.slot < b.slot;
  }
};

struct CircleInfo {
  int parent = -1;          // index of the innermost enclosing circle, or -1
  bool has_content = false; // something (circle or crossing component) inside
};

// Quadrivalent graph in the disk as a combinatorial map.  Crossing slots are
// numbered counterclockwise; the two transversal strand pairs are (0,2) and
// (1,3).  Boundary points: 0..bottom-1 along the bottom (left to right), then
// bottom..m-1 along the top (right to left), counterclockwise from the
// basepoint gap.  Crossing-free closed strands are kept in a separate list.
class Diagram {
 public:
  int bottom = 0, top = 0;
  std::vector<std::array<End, 4>> cx;  // cx[c][s] = End connected to slot s of crossing c
  std::vector<End> bnd;                // bnd[b] = End connected to boundary point b
  std::vector<CircleInfo> circles;

  int m() const { return bottom + top; }
  int crossing_count() const { return (int)cx.size(); }
  End adj(End e) const { return e.is_boundary() ? bnd[e.boundary_index()] : cx[e.node][e.slot]; }
  void set_adj(End a, End b);
  void check() const;  // structural sanity (involution, slot bounds)

  std::string encode() const;  // canonical key: isotopic builds hash equal
};

// ---- construction -------------------------------------------------------

Diagram build_planar(const SliceWord& w);
Diagram empty_diagram();
Diagram identity_diagram(int w);

// Deterministic reduced representative of a matching: exact rational chords
// in convex position, perturbed to genericity.
Diagram canonical_reduced(const Matching& m, int bottom, int top);
Diagram canonical_reduced(const Matching& m);  // all points on the bottom

// ---- structure ----------------------------------------------------------

struct Strand {
  bool closed = false;
  int b0 = -1, b1 = -1;               // boundary endpoints when open
  std::vector<std::pair<int, int>> visits;  // (crossing, entry slot) along the walk
};

std::vector<Strand> strands(const Diagram& d);
Matching boundary_matching(const Diagram& d);
bool is_reduced(const Diagram& d);

struct Face {
  std::vector<End> darts;  // departure End of each dart around the face
  int boundary_arcs = 0;   // boundary arcs traversed (the gap included)
  bool touches_boundary() const { return boundary_arcs > 0; }
};

std::vector<Face> faces(const Diagram& d);
bool euler_ok(const Diagram& d);

// dart (departure End) -> face index
std::map<End, int> face_index_of_darts(const std::vector<Face>& fs);
// deterministic outer-face choice: a boundary face when one exists, else face 0
int outer_face(const Diagram& d, const std::vector<Face>& fs);
// canonical key of the edge through e
End edge_key_of(const Diagram& d, End e);
// 0 = exterior side (containing `outer`), 1 = interior, per face, relative to
// a simple closed curve given by its edge keys
std::vector<int> face_side_partition(const Diagram& d, const std::vector<Face>& fs,
                                     const std::set<End>& curve_keys, int outer);
// face holding the wedge between slots t and t+1 (ccw) of a crossing
int wedge_face_of(const Diagram& d, const std::map<End, int>& fidx, int crossing, int t);

// ---- glueing ------------------------------------------------------------

Diagram transpose(const Diagram& d);
Diagram stack(const Diagram& lower, const Diagram& upper);
Diagram side_by_side(const Diagram& left, const Diagram& right);
// Close boundary points pairwise with crossing-free arcs in the outer disk;
// the matching must be noncrossing there.
Diagram close_with_arcs(const Diagram& d, const Matching& outer);
// Standard trace closure: top strand i around to bottom strand i, nested.
Diagram trace_close(const Diagram& d);

// ---- patterns -----------------------------------------------------------

struct BigCurl {
  int crossing = 0;
  // Strand interval: visits of the curl strand from the crossing back to it.
  std::vector<std::pair<int, int>> interval;
  std::vector<int> curve_edges;      // crossings strictly on the curl curve (excluding x)
  int inside_crossings = 0;          // crossings strictly inside
  int enclosed_faces = 0;
};

struct BigBigon {
  int x = 0, y = 0;                  // the two crossings
  std::vector<std::pair<int, int>> arc1, arc2;
  int inside_crossings = 0;
  int enclosed_faces = 0;
  int wedge_x = 0, wedge_y = 0;      // interior wedge slots at x and y
};

std::optional<BigCurl> find_big_curl(const Diagram& d);
std::optional<BigBigon> find_big_bigon(const Diagram& d);

// All big curls/bigons, for strategy selection.
std::vector<BigCurl> all_big_curls(const Diagram& d);
std::vector<BigBigon> all_big_bigons(const Diagram& d);

// ---- surgery ------------------------------------------------------------

// Rewire a local pattern.  Legs of the pattern are Ends on removed crossings
// that carry edges to the retained part (or to each other through retained
// arcs).  The replacement reconnects legs directly or through new crossings.
class Surgery {
 public:
  Surgery(const Diagram& base, std::vector<int> removed_crossings,
          std::vector<std::pair<End, End>> internal_edges);

  int new_crossing();                       // handle for a replacement crossing
  void connect_legs(End leg_a, End leg_b);  // both on removed crossings
  void connect_leg_new(End leg, int handle, int slot);
  void connect_new(int h1, int s1, int h2, int s2);
  // old_to_new[c] = retained crossing's new index or -1; new crossings sit at
  // indices new_base + handle.
  Diagram result(std::vector<int>* old_to_new = nullptr, int* new_base = nullptr) const;

 private:
  const Diagram& base_;
  std::vector<int> removed_;
  std::vector<std::pair<End, End>> internal_;
  int fresh_ = 0;
  // node encoding for the rewiring graph
  std::vector<std::pair<long, long>> links_;
};

// Connected components; each entry is a list of crossings, plus anchored flag.
struct Component {
  std::vector<int> crossings;
  bool anchored = false;
};
std::vector<Component> components(const Diagram& d);

// Split off all closed components and free circles: returns the anchored part
// and the closed components as standalone diagrams (m = 0), plus circle count.
struct SplitResult {
  Diagram anchored;
  std::vector<Diagram> closed_parts;
  int circles = 0;
};
SplitResult split_closed(const Diagram& d);

}  // namespace spweb
