#include "spweb/diagram.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "spweb/rational.hpp"

namespace spweb {

// ---------------------------------------------------------------- SliceWord

int SliceWord::top_width() const {
  int w = bottom_width;
  if (w < 0) throw MalformedSliceWord("negative bottom width");
  for (auto& g : slices) {
    switch (g.kind) {
      case Gen::Cross:
        if (g.pos < 1 || g.pos + 1 > w) throw MalformedSliceWord("X out of range");
        break;
      case Gen::Cap:
        if (g.pos < 1 || g.pos + 1 > w) throw MalformedSliceWord("A out of range");
        w -= 2;
        break;
      case Gen::Cup:
        if (g.pos < 1 || g.pos > w + 1) throw MalformedSliceWord("U out of range");
        w += 2;
        break;
    }
  }
  return w;
}

std::string SliceWord::str() const {
  std::ostringstream os;
  os << "width " << bottom_width;
  for (auto& g : slices) {
    os << "; " << (g.kind == Gen::Cross ? "X" : g.kind == Gen::Cap ? "A" : "U") << " " << g.pos;
  }
  return os.str();
}

// ----------------------------------------------------------------- Matching

Matching::Matching(std::vector<int> p) : pair(std::move(p)) {
  int m = (int)pair.size();
  if (m % 2) throw std::invalid_argument("odd matching size");
  for (int i = 0; i < m; ++i) {
    if (pair[i] < 0 || pair[i] >= m || pair[i] == i || pair[pair[i]] != i)
      throw std::invalid_argument("not a fixed-point-free involution");
  }
}

Matching Matching::from_pairs(int m, const std::vector<std::pair<int, int>>& ps) {
  std::vector<int> p(m, -1);
  for (auto& [a, b] : ps) {
    p.at(a) = b;
    p.at(b) = a;
  }
  return Matching(p);
}

std::string Matching::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < size(); ++i) {
    if (pair[i] > i) {
      if (!first) os << ",";
      first = false;
      os << i << "-" << pair[i];
    }
  }
  return os.str();
}

Matching Matching::parse(const std::string& s) {
  std::vector<std::pair<int, int>> ps;
  int maxp = -1;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    auto dash = tok.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("bad matching token: " + tok);
    int a = std::stoi(tok.substr(0, dash)), b = std::stoi(tok.substr(dash + 1));
    ps.push_back({a, b});
    maxp = std::max({maxp, a, b});
  }
  return from_pairs(maxp + 1, ps);
}

bool is_inversion(std::pair<int, int> x1, std::pair<int, int> x2) {
  auto [a, b] = std::minmax(x1.first, x1.second);
  auto [c, d] = std::minmax(x2.first, x2.second);
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> inversions(const Matching& m) {
  std::vector<std::pair<int, int>> ps;
  for (int i = 0; i < m.size(); ++i)
    if (m.pair[i] > i) ps.push_back({i, m.pair[i]});
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> out;
  for (size_t i = 0; i < ps.size(); ++i)
    for (size_t j = i + 1; j < ps.size(); ++j)
      if (is_inversion(ps[i], ps[j])) out.push_back({ps[i], ps[j]});
  return out;
}

int inversion_count(const Matching& m) { return (int)inversions(m).size(); }

// ------------------------------------------------------------------ Diagram

void Diagram::set_adj(End a, End b) {
  auto put = [&](End x, End y) {
    if (x.is_boundary())
      bnd[x.boundary_index()] = y;
    else
      cx[x.node][x.slot] = y;
  };
  put(a, b);
  put(b, a);
}

void Diagram::check() const {
  if ((int)bnd.size() != m()) throw std::logic_error("boundary size mismatch");
  auto ok = [&](End e) {
    if (e.is_boundary()) return e.boundary_index() >= 0 && e.boundary_index() < m();
    return e.node < (int)cx.size() && e.slot >= 0 && e.slot < 4;
  };
  for (int b = 0; b < m(); ++b) {
    if (!ok(bnd[b]) || !(adj(bnd[b]) == End::boundary(b))) throw std::logic_error("bad boundary adjacency");
  }
  for (int c = 0; c < (int)cx.size(); ++c)
    for (int s = 0; s < 4; ++s) {
      if (!ok(cx[c][s]) || !(adj(cx[c][s]) == End::cross(c, s))) throw std::logic_error("bad adjacency");
    }
}

// -------------------------------------------------------------- contraction

namespace {

// Chain contraction: ids < 0 are virtual joints (each in exactly two links),
// ids >= 0 are real attachment handles.  Returns real-to-real connections and
// the number of pure virtual cycles (new free circles).
struct Chains {
  std::vector<std::pair<long, long>> real_pairs;
  int circles = 0;
};

Chains contract_chains(const std::vector<std::pair<long, long>>& links) {
  std::map<long, std::vector<long>> nbr;
  for (auto& [a, b] : links) {
    nbr[a].push_back(b);
    nbr[b].push_back(a);
  }
  for (auto& [id, v] : nbr) {
    size_t want = id >= 0 ? 1 : 2;
    if (v.size() != want) throw std::logic_error("bad chain arity");
  }
  Chains out;
  std::set<long> seen;
  for (auto& [id, v] : nbr) {
    if (id < 0 || seen.count(id)) continue;
    // walk from a real end
    long prev = id, cur = v[0];
    seen.insert(id);
    while (cur < 0) {
      seen.insert(cur);
      auto& cn = nbr[cur];
      long nxt = (cn[0] == prev) ? cn[1] : cn[0];
      prev = cur;
      cur = nxt;
    }
    seen.insert(cur);
    out.real_pairs.push_back({id, cur});
  }
  // leftover virtual cycles
  for (auto& [id, v] : nbr) {
    if (id >= 0 || seen.count(id)) continue;
    out.circles++;
    long prev = id, cur = v[0];
    seen.insert(id);
    while (cur != id) {
      seen.insert(cur);
      auto& cn = nbr[cur];
      long nxt = (cn[0] == prev) ? cn[1] : cn[0];
      prev = cur;
      cur = nxt;
    }
  }
  return out;
}

// Real-attachment handle encoding for contraction graphs.
long enc_cross(int c, int s) { return (long)c * 4 + s; }
long enc_bnd(int b, long cx_count) { return cx_count * 4 + b; }

}  // namespace

// ------------------------------------------------------------- build_planar

Diagram build_planar(const SliceWord& w) {
  w.top_width();  // validate

  Diagram d;
  d.bottom = w.bottom_width;
  d.top = w.top_width();
  d.bnd.resize(d.m());

  // Open strand ends are tokens; each token's eventual attachment is found by
  // chain contraction.  Virtual joints implement cups and caps.
  long next_joint = -1;
  std::vector<std::pair<long, long>> links;

  // footprint tracking for circle nesting: token -> piece id (union-find)
  std::vector<int> piece_of;      // by token id
  std::vector<int> uf;            // piece union-find
  std::vector<std::vector<std::pair<int, int>>> foot;  // piece -> (level, col)
  std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };

  struct Token {
    long handle;  // contraction node id (real attachment or virtual joint)
    int piece;
  };
  std::vector<Token> open;

  auto new_piece = [&]() {
    int p = (int)uf.size();
    uf.push_back(p);
    foot.push_back({});
    return p;
  };

  // Bottom boundary attachments are deferred through joints so that the
  // crossing count (needed for handle encoding) is known at the end.
  std::vector<long> bottom_joint(d.bottom);
  for (int i = 0; i < d.bottom; ++i) {
    long j = next_joint--;
    bottom_joint[i] = j;
    open.push_back({j, new_piece()});
  }

  std::vector<std::pair<int, int>> cross_pos;  // (level, pos) per crossing
  std::vector<std::vector<std::pair<int, int>>> circle_feet;

  int level = 0;
  auto record_level = [&]() {
    for (int c = 0; c < (int)open.size(); ++c) foot[find(open[c].piece)].push_back({level, c + 1});
  };
  record_level();

  for (auto& g : w.slices) {
    int i = g.pos;  // 1-based
    switch (g.kind) {
      case Gen::Cross: {
        int c = (int)d.cx.size();
        d.cx.push_back({});
        cross_pos.push_back({level, i});
        links.push_back({open[i - 1].handle, enc_cross(c, 0)});
        links.push_back({open[i].handle, enc_cross(c, 1)});
        open[i - 1] = {enc_cross(c, 3), new_piece()};
        open[i] = {enc_cross(c, 2), new_piece()};
        break;
      }
      case Gen::Cap: {
        Token a = open[i - 1], b = open[i];
        links.push_back({a.handle, b.handle});
        int pa = find(a.piece), pb = find(b.piece);
        if (pa == pb) {
          // a pure-arc strand closed onto itself; if it passed a crossing the
          // piece ids differ, so this is a genuine free circle
          circle_feet.push_back(foot[pa]);
        } else {
          uf[pa] = pb;
          auto fa = foot[pa];
          foot[pb].insert(foot[pb].end(), fa.begin(), fa.end());
        }
        open.erase(open.begin() + (i - 1), open.begin() + (i + 1));
        break;
      }
      case Gen::Cup: {
        long j1 = next_joint--, j2 = next_joint--;
        links.push_back({j1, j2});
        int p = new_piece();
        open.insert(open.begin() + (i - 1), {Token{j1, p}, Token{j2, p}});
        break;
      }
    }
    ++level;
    record_level();
  }

  // top boundary: column j (left to right) is boundary index bottom + (w-1-j)
  int tw = (int)open.size();
  for (int j = 0; j < tw; ++j) {
    links.push_back({open[j].handle, enc_bnd(d.bottom + (tw - 1 - j), (long)d.cx.size())});
  }
  for (int i = 0; i < d.bottom; ++i) links.push_back({bottom_joint[i], enc_bnd(i, (long)d.cx.size())});

  auto chains = contract_chains(links);
  long ncx = (long)d.cx.size();
  auto dec = [&](long h) -> End {
    if (h >= ncx * 4) return End::boundary((int)(h - ncx * 4));
    return End::cross((int)(h / 4), (int)(h % 4));
  };
  for (auto& [a, b] : chains.real_pairs) d.set_adj(dec(a), dec(b));
  if (chains.circles != (int)circle_feet.size())
    throw std::logic_error("circle bookkeeping mismatch");

  // circle nesting from footprints
  int nc = (int)circle_feet.size();
  auto inside = [&](int outer, std::pair<int, int> pt) {
    int cnt = 0;
    for (auto& [lv, col] : circle_feet[outer])
      if (lv == pt.first && col < pt.second) ++cnt;
    return cnt % 2 == 1;
  };
  d.circles.resize(nc);
  std::vector<std::vector<int>> containers(nc);
  for (int a = 0; a < nc; ++a)
    for (int b = 0; b < nc; ++b)
      if (a != b && !circle_feet[a].empty() && inside(b, circle_feet[a][0])) containers[a].push_back(b);
  for (int a = 0; a < nc; ++a) {
    // innermost container = the container that all other containers enclose
    int best = -1;
    for (int b : containers[a]) {
      bool inner_most = true;
      for (int c : containers[a])
        if (c != b && std::find(containers[b].begin(), containers[b].end(), c) == containers[b].end())
          inner_most = false;
      if (inner_most) best = b;
    }
    d.circles[a].parent = best;
    if (best >= 0) d.circles[best].has_content = true;
  }
  // components inside circles
  std::vector<Component> comps = components(d);
  for (auto& comp : comps) {
    if (comp.anchored || comp.crossings.empty()) continue;
    auto pt = cross_pos[comp.crossings[0]];
    std::pair<int, int> probe{pt.first, pt.second};  // level, left column of the crossing
    for (int cc = 0; cc < nc; ++cc) {
      // odd count of columns <= pos among circle columns at this level
      int cnt = 0;
      for (auto& [lv, col] : circle_feet[cc])
        if (lv == probe.first && col <= probe.second) ++cnt;
      if (cnt % 2 == 1) d.circles[cc].has_content = true;
    }
  }

  d.check();
  return d;
}

Diagram empty_diagram() { return Diagram{}; }

Diagram identity_diagram(int w) {
  Diagram d;
  d.bottom = d.top = w;
  d.bnd.resize(2 * w);
  for (int i = 0; i < w; ++i) d.set_adj(End::boundary(i), End::boundary(2 * w - 1 - i));
  return d;
}

// ------------------------------------------------------------------ strands

std::vector<Strand> strands(const Diagram& d) {
  std::vector<Strand> out;
  std::set<std::pair<int, int>> used;  // (crossing, entry slot)
  std::vector<bool> bnd_done(d.m(), false);
  for (int b = 0; b < d.m(); ++b) {
    if (bnd_done[b]) continue;
    Strand s;
    s.b0 = b;
    End e = d.adj(End::boundary(b));
    while (!e.is_boundary()) {
      s.visits.push_back({e.node, e.slot});
      used.insert({e.node, e.slot});
      used.insert({e.node, (e.slot + 2) % 4});
      e = d.adj(End::cross(e.node, (e.slot + 2) % 4));
    }
    s.b1 = e.boundary_index();
    bnd_done[b] = bnd_done[s.b1] = true;
    out.push_back(std::move(s));
  }
  for (int c = 0; c < d.crossing_count(); ++c) {
    for (int s0 : {0, 1}) {
      if (used.count({c, s0})) continue;
      Strand s;
      s.closed = true;
      End e = End::cross(c, s0);  // start by "arriving" at (c, s0)
      while (!used.count({e.node, e.slot})) {
        s.visits.push_back({e.node, e.slot});
        used.insert({e.node, e.slot});
        used.insert({e.node, (e.slot + 2) % 4});
        e = d.adj(End::cross(e.node, (e.slot + 2) % 4));
      }
      out.push_back(std::move(s));
    }
  }
  return out;
}

Matching boundary_matching(const Diagram& d) {
  std::vector<int> p(d.m(), -1);
  for (auto& s : strands(d)) {
    if (!s.closed) {
      p[s.b0] = s.b1;
      p[s.b1] = s.b0;
    }
  }
  return Matching(p);
}

bool is_reduced(const Diagram& d) {
  if (!d.circles.empty()) return false;
  auto ss = strands(d);
  std::map<int, int> strand_of_pass;  // crossing -> first strand seen
  for (int i = 0; i < (int)ss.size(); ++i) {
    if (ss[i].closed) return false;
    std::set<int> seen;
    for (auto& [c, slot] : ss[i].visits) {
      if (seen.count(c)) return false;  // self-crossing
      seen.insert(c);
    }
  }
  // two distinct strands may share at most one crossing
  std::map<int, std::vector<int>> strands_at;
  for (int i = 0; i < (int)ss.size(); ++i)
    for (auto& [c, slot] : ss[i].visits) strands_at[c].push_back(i);
  std::map<std::pair<int, int>, int> cnt;
  for (auto& [c, v] : strands_at) {
    if (v.size() != 2) continue;
    auto key = std::minmax(v[0], v[1]);
    if (++cnt[{key.first, key.second}] > 1) return false;
  }
  return true;
}

// -------------------------------------------------------------------- faces

std::vector<Face> faces(const Diagram& d) {
  // dart = departure End; next: arrive, then turn clockwise one slot
  std::vector<Face> out;
  std::set<End> seen;
  auto all_darts = [&]() {
    std::vector<End> v;
    for (int c = 0; c < d.crossing_count(); ++c)
      for (int s = 0; s < 4; ++s) v.push_back(End::cross(c, s));
    for (int b = 0; b < d.m(); ++b) v.push_back(End::boundary(b));
    return v;
  };
  for (End start : all_darts()) {
    if (seen.count(start)) continue;
    Face f;
    End e = start;
    do {
      seen.insert(e);
      f.darts.push_back(e);
      End a = d.adj(e);
      if (a.is_boundary()) {
        int b = a.boundary_index();
        f.boundary_arcs++;
        e = End::boundary((b + 1) % std::max(1, d.m()));
      } else {
        e = End::cross(a.node, (a.slot + 3) % 4);
      }
    } while (!(e == start));
    out.push_back(std::move(f));
  }
  return out;
}

bool euler_ok(const Diagram& d) {
  long V = d.crossing_count();
  long E = (4 * V + d.m()) / 2;
  long F = (long)faces(d).size();
  if (V == 0 && d.m() == 0) F = 1;
  long closed = 0;
  for (auto& c : components(d))
    if (!c.anchored) ++closed;
  long expected = 2 * closed + ((d.m() > 0) ? 1 : (V > 0 ? 0 : 1));
  return V - E + F == expected;
}

// --------------------------------------------------------------- components

std::vector<Component> components(const Diagram& d) {
  int n = d.crossing_count();
  std::vector<int> comp(n, -1);
  std::vector<Component> out;
  for (int c0 = 0; c0 < n; ++c0) {
    if (comp[c0] >= 0) continue;
    Component comp_rec;
    std::vector<int> stack{c0};
    comp[c0] = (int)out.size();
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      comp_rec.crossings.push_back(c);
      for (int s = 0; s < 4; ++s) {
        End e = d.cx[c][s];
        if (e.is_boundary())
          comp_rec.anchored = true;
        else if (comp[e.node] < 0) {
          comp[e.node] = (int)out.size();
          stack.push_back(e.node);
        }
      }
    }
    std::sort(comp_rec.crossings.begin(), comp_rec.crossings.end());
    out.push_back(std::move(comp_rec));
  }
  return out;
}

SplitResult split_closed(const Diagram& d) {
  SplitResult r;
  r.circles = (int)d.circles.size();
  auto comps = components(d);
  std::vector<int> dest(d.crossing_count(), -1);  // -1: anchored part, else closed part index
  int nclosed = 0;
  for (auto& c : comps) {
    if (c.anchored) continue;
    for (int x : c.crossings) dest[x] = nclosed;
    ++nclosed;
  }
  r.closed_parts.resize(nclosed);
  std::vector<int> newidx(d.crossing_count(), -1);
  r.anchored.bottom = d.bottom;
  r.anchored.top = d.top;
  r.anchored.bnd.resize(d.m());
  for (int c = 0; c < d.crossing_count(); ++c) {
    Diagram& tgt = dest[c] < 0 ? r.anchored : r.closed_parts[dest[c]];
    newidx[c] = (int)tgt.cx.size();
    tgt.cx.push_back({});
  }
  auto map_end = [&](End e) {
    return e.is_boundary() ? e : End::cross(newidx[e.node], e.slot);
  };
  for (int c = 0; c < d.crossing_count(); ++c) {
    Diagram& tgt = dest[c] < 0 ? r.anchored : r.closed_parts[dest[c]];
    for (int s = 0; s < 4; ++s) tgt.cx[newidx[c]][s] = map_end(d.cx[c][s]);
  }
  for (int b = 0; b < d.m(); ++b) r.anchored.bnd[b] = map_end(d.bnd[b]);
  return r;
}

// ------------------------------------------------------------------- encode

namespace {

std::string encode_from(const Diagram& d, bool use_boundary, End root) {
  std::ostringstream os;
  std::vector<int> id(d.crossing_count(), -1);
  std::vector<int> rot(d.crossing_count(), 0);
  std::vector<int> order;
  auto discover = [&](End e) {
    if (!e.is_boundary() && id[e.node] < 0) {
      id[e.node] = (int)order.size();
      rot[e.node] = e.slot;
      order.push_back(e.node);
    }
  };
  auto emit = [&](End e) {
    if (e.is_boundary())
      os << "B" << e.boundary_index() << ";";
    else
      os << "C" << id[e.node] << "." << ((e.slot - rot[e.node] + 4) % 4) << ";";
  };
  if (use_boundary) {
    for (int b = 0; b < d.m(); ++b) discover(d.bnd[b]);
    // re-discover in order while emitting (ids already assigned in boundary order)
  } else {
    discover(root);
  }
  // process queue
  if (use_boundary)
    for (int b = 0; b < d.m(); ++b) emit(d.bnd[b]);
  for (size_t k = 0; k < order.size(); ++k) {
    int c = order[k];
    for (int s = 0; s < 4; ++s) {
      End e = d.cx[c][(rot[c] + s) % 4];
      discover(e);
      emit(e);
    }
  }
  return os.str();
}

}  // namespace

std::string Diagram::encode() const {
  std::ostringstream os;
  os << "b" << bottom << "t" << top << "|";
  if (m() > 0 || cx.empty()) {
    os << encode_from(*this, true, End::boundary(0));
  } else {
    std::string best;
    for (int c = 0; c < (int)cx.size(); ++c)
      for (int s = 0; s < 4; ++s) {
        std::string cand = encode_from(*this, false, End::cross(c, s));
        if (best.empty() || cand < best) best = cand;
      }
    os << best;
  }
  // circle multiset by nesting depth
  std::vector<int> depths;
  for (int i = 0; i < (int)circles.size(); ++i) {
    int dph = 0, p = circles[i].parent;
    while (p >= 0) {
      ++dph;
      p = circles[p].parent;
    }
    depths.push_back(dph);
  }
  std::sort(depths.begin(), depths.end());
  os << "|o";
  for (int x : depths) os << x << ",";
  return os.str();
}

// ---------------------------------------------------------------- glueing

Diagram transpose(const Diagram& d) {
  Diagram r;
  r.bottom = d.top;
  r.top = d.bottom;
  r.bnd.resize(d.m());
  r.cx.resize(d.crossing_count());
  r.circles = d.circles;
  auto map_b = [&](int i) { return i >= d.bottom ? i - d.bottom : i + d.top; };
  auto map_end = [&](End e) {
    return e.is_boundary() ? End::boundary(map_b(e.boundary_index())) : e;
  };
  for (int c = 0; c < d.crossing_count(); ++c)
    for (int s = 0; s < 4; ++s) r.cx[c][s] = map_end(d.cx[c][s]);
  for (int b = 0; b < d.m(); ++b) r.bnd[map_b(b)] = map_end(d.bnd[b]);
  return r;
}

namespace {

// Generic glue: combine crossings of several diagrams, tie old boundary
// points together or to new boundary points via chain contraction.
struct Glue {
  Diagram out;
  std::vector<long> cx_base;  // crossing index offset per input
  std::vector<std::pair<long, long>> links;
  long next_joint = -1;
  std::vector<std::vector<long>> old_bnd_joint;  // per input, per boundary point
  int total_cx = 0;

  void add_input(const Diagram& d) {
    cx_base.push_back(total_cx);
    total_cx += d.crossing_count();
    old_bnd_joint.push_back({});
  }
  void wire_input(int idx, const Diagram& d) {
    long base = cx_base[idx];
    auto enc = [&](End e, std::vector<long>& bj) -> long {
      if (e.is_boundary()) return bj[e.boundary_index()];
      return (base + e.node) * 4 + e.slot;
    };
    auto& bj = old_bnd_joint[idx];
    bj.resize(d.m());
    for (int b = 0; b < d.m(); ++b) bj[b] = next_joint--;
    for (int c = 0; c < d.crossing_count(); ++c) {
      out.cx.push_back({});
      for (int s = 0; s < 4; ++s) {
        End e = d.cx[c][s];
        if (e.is_boundary())
          links.push_back({(base + c) * 4 + s, bj[e.boundary_index()]});
        else if (e.node > c || (e.node == c && e.slot > s))
          links.push_back({(base + c) * 4 + s, (base + e.node) * 4 + e.slot});
      }
    }
    // crossing-free arcs between boundary points
    for (int b = 0; b < d.m(); ++b) {
      End e = d.bnd[b];
      if (e.is_boundary() && e.boundary_index() > b) links.push_back({bj[b], bj[e.boundary_index()]});
    }
    for (size_t i = 0; i < d.circles.size(); ++i) out.circles.push_back({-1, false});
  }

  long new_bnd(int b) { return (long)total_cx * 4 + b; }

  Diagram finish(int bottom, int top) {
    out.bottom = bottom;
    out.top = top;
    out.bnd.resize(bottom + top);
    auto chains = contract_chains(links);
    auto dec = [&](long h) -> End {
      if (h >= (long)total_cx * 4) return End::boundary((int)(h - (long)total_cx * 4));
      return End::cross((int)(h / 4), (int)(h % 4));
    };
    for (auto& [a, b] : chains.real_pairs) out.set_adj(dec(a), dec(b));
    for (int i = 0; i < chains.circles; ++i) out.circles.push_back({-1, false});
    out.check();
    return out;
  }
};

}  // namespace

Diagram stack(const Diagram& lower, const Diagram& upper) {
  if (lower.top != upper.bottom) throw WidthMismatch("stack: widths differ");
  Glue g;
  g.add_input(lower);
  g.add_input(upper);
  g.wire_input(0, lower);
  g.wire_input(1, upper);
  // lower bottom -> new bottom
  for (int i = 0; i < lower.bottom; ++i) g.links.push_back({g.old_bnd_joint[0][i], g.new_bnd(i)});
  // lower top column c = boundary index bottom + (w-1-c); glue to upper bottom column c
  int w = lower.top;
  for (int c = 0; c < w; ++c)
    g.links.push_back({g.old_bnd_joint[0][lower.bottom + (w - 1 - c)], g.old_bnd_joint[1][c]});
  // upper top -> new top
  for (int k = 0; k < upper.top; ++k)
    g.links.push_back({g.old_bnd_joint[1][upper.bottom + k], g.new_bnd(lower.bottom + k)});
  return g.finish(lower.bottom, upper.top);
}

Diagram side_by_side(const Diagram& left, const Diagram& right) {
  Glue g;
  g.add_input(left);
  g.add_input(right);
  g.wire_input(0, left);
  g.wire_input(1, right);
  int b = left.bottom + right.bottom, t = left.top + right.top;
  for (int i = 0; i < left.bottom; ++i) g.links.push_back({g.old_bnd_joint[0][i], g.new_bnd(i)});
  for (int i = 0; i < right.bottom; ++i)
    g.links.push_back({g.old_bnd_joint[1][i], g.new_bnd(left.bottom + i)});
  // new top indexed right-to-left: right diagram's top comes first
  for (int k = 0; k < right.top; ++k)
    g.links.push_back({g.old_bnd_joint[1][right.bottom + k], g.new_bnd(b + k)});
  for (int k = 0; k < left.top; ++k)
    g.links.push_back({g.old_bnd_joint[0][left.bottom + k], g.new_bnd(b + right.top + k)});
  return g.finish(b, t);
}

Diagram close_with_arcs(const Diagram& d, const Matching& outer) {
  if (outer.size() != d.m()) throw WidthMismatch("closure size mismatch");
  // noncrossing in the outer disk = noncrossing as a circular matching
  for (int i = 0; i < outer.size(); ++i)
    for (int j = i + 1; j < outer.size(); ++j)
      if (outer.pair[i] > i && outer.pair[j] > j &&
          is_inversion({i, outer.pair[i]}, {j, outer.pair[j]}))
        throw std::invalid_argument("closure arcs must be noncrossing");
  Glue g;
  g.add_input(d);
  g.wire_input(0, d);
  for (int i = 0; i < outer.size(); ++i)
    if (outer.pair[i] > i) g.links.push_back({g.old_bnd_joint[0][i], g.old_bnd_joint[0][outer.pair[i]]});
  return g.finish(0, 0);
}

Diagram trace_close(const Diagram& d) {
  if (d.bottom != d.top) throw WidthMismatch("trace closure needs equal widths");
  std::vector<int> p(d.m());
  // bottom column c pairs with top column c: boundary index bottom + (w-1-c)
  for (int c = 0; c < d.bottom; ++c) {
    int t = d.bottom + (d.top - 1 - c);
    p[c] = t;
    p[t] = c;
  }
  return close_with_arcs(d, Matching(p));
}

// --------------------------------------------------- curve side partitions

std::map<End, int> face_index_of_darts(const std::vector<Face>& fs) {
  std::map<End, int> m;
  for (int i = 0; i < (int)fs.size(); ++i)
    for (auto& e : fs[i].darts) m[e] = i;
  return m;
}

int outer_face(const Diagram& d, const std::vector<Face>& fs) {
  if (d.m() > 0) {
    for (int i = 0; i < (int)fs.size(); ++i)
      if (fs[i].touches_boundary()) return i;
  }
  return 0;
}

End edge_key_of(const Diagram& d, End e) { return std::min(e, d.adj(e)); }

std::vector<int> face_side_partition(const Diagram& d, const std::vector<Face>& fs,
                                     const std::set<End>& curve_keys, int outer) {
  int n = (int)fs.size();
  auto fidx = face_index_of_darts(fs);
  std::vector<int> uf(n);
  for (int i = 0; i < n; ++i) uf[i] = i;
  std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
  for (int i = 0; i < n; ++i)
    for (auto& e : fs[i].darts) {
      if (curve_keys.count(edge_key_of(d, e))) continue;
      uf[find(i)] = find(fidx.at(d.adj(e)));
    }
  std::vector<int> side(n);
  int ext = find(outer);
  for (int i = 0; i < n; ++i) side[i] = (find(i) == ext) ? 0 : 1;
  return side;
}

int wedge_face_of(const Diagram& d, const std::map<End, int>& fidx, int x, int t) {
  return fidx.at(d.adj(End::cross(x, (t + 1) % 4)));
}

namespace {

struct FaceIndex {
  std::vector<Face> fs;
  std::map<End, int> of_dart;
  explicit FaceIndex(const Diagram& d) : fs(faces(d)) { of_dart = face_index_of_darts(fs); }
};

struct SidePartition {
  std::vector<int> side;
};

End edge_key(const Diagram& d, End e) { return edge_key_of(d, e); }

SidePartition curve_sides(const Diagram& d, const FaceIndex& fi, const std::set<End>& curve,
                          int outer) {
  SidePartition sp;
  sp.side = face_side_partition(d, fi.fs, curve, outer);
  return sp;
}

int pick_outer_face(const Diagram& d, const FaceIndex& fi) { return outer_face(d, fi.fs); }

int wedge_face(const Diagram& d, const FaceIndex& fi, int x, int t) {
  return wedge_face_of(d, fi.of_dart, x, t);
}

}  // namespace

// ------------------------------------------------------------- big curls

namespace {

// Build candidate curve edge set from a visit interval of one strand.
// visits[i..j] inclusive at the same crossing x; the curve consists of the
// edges from the exit of visit i to the entry of visit j.
std::set<End> interval_curve(const Diagram& d, const std::vector<std::pair<int, int>>& visits,
                             int i, int j, bool closed) {
  std::set<End> curve;
  int n = (int)visits.size();
  int k = i;
  while (k != j) {
    int k2 = (k + 1) % n;
    End from = End::cross(visits[k].first, (visits[k].second + 2) % 4);
    curve.insert(edge_key(d, from));
    if (!closed && k2 < k) throw std::logic_error("interval walk out of range");
    k = k2;
  }
  return curve;
}

bool injective_interior(const std::vector<std::pair<int, int>>& visits, int i, int j, int n) {
  std::set<int> seen;
  for (int k = (i + 1) % n; k != j; k = (k + 1) % n) {
    if (!seen.insert(visits[k].first).second) return false;
  }
  return true;
}

std::optional<BigCurl> test_curl(const Diagram& d, const FaceIndex& fi, int outer,
                                 const std::vector<std::pair<int, int>>& visits, int i, int j,
                                 bool closed) {
  int n = (int)visits.size();
  int x = visits[i].first;
  if (visits[j].first != x) return std::nullopt;
  if (!injective_interior(visits, i, j, n)) return std::nullopt;
  auto curve = interval_curve(d, visits, i, j, closed);
  // curve slots at x: exit slot of visit i, entry slot of visit j
  int exit_slot = (visits[i].second + 2) % 4;
  int entry_slot = visits[j].second;
  int a;  // curve slots are {a, a+1}
  if ((exit_slot + 1) % 4 == entry_slot)
    a = exit_slot;
  else if ((entry_slot + 1) % 4 == exit_slot)
    a = entry_slot;
  else
    return std::nullopt;
  auto sp = curve_sides(d, fi, curve, outer);
  // wedge between the curve slots must be interior, the other three exterior
  if (sp.side[wedge_face(d, fi, x, a)] != 1) return std::nullopt;
  for (int t = 1; t < 4; ++t)
    if (sp.side[wedge_face(d, fi, x, (a + t) % 4)] != 0) return std::nullopt;
  BigCurl bc;
  bc.crossing = x;
  for (int k = i; ; k = (k + 1) % n) {
    bc.interval.push_back(visits[k]);
    if (k == j) break;
  }
  std::set<int> curve_cx;
  for (int k = (i + 1) % n; k != j; k = (k + 1) % n) curve_cx.insert(visits[k].first);
  bc.curve_edges.assign(curve_cx.begin(), curve_cx.end());
  int inside = 0;
  std::set<int> on_curve = curve_cx;
  on_curve.insert(x);
  // a crossing is strictly inside when all its wedge faces are interior
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (on_curve.count(c)) continue;
    bool all_in = true;
    for (int t = 0; t < 4; ++t)
      if (sp.side[wedge_face(d, fi, c, t)] != 1) all_in = false;
    if (all_in) ++inside;
  }
  bc.inside_crossings = inside;
  int encl = 0;
  for (int f = 0; f < (int)fi.fs.size(); ++f)
    if (sp.side[f] == 1) ++encl;
  bc.enclosed_faces = encl;
  return bc;
}

}  // namespace

std::vector<BigCurl> all_big_curls(const Diagram& d) {
  std::vector<BigCurl> out;
  if (d.crossing_count() == 0) return out;
  FaceIndex fi(d);
  int outer = pick_outer_face(d, fi);
  for (auto& s : strands(d)) {
    int n = (int)s.visits.size();
    // first-return candidates in walk order, then all other (i, j) pairs
    std::map<int, int> first_at;
    std::vector<std::pair<int, int>> cands;
    for (int k = 0; k < n; ++k) {
      auto it = first_at.find(s.visits[k].first);
      if (it == first_at.end())
        first_at[s.visits[k].first] = k;
      else
        cands.push_back({it->second, k});
    }
    if (s.closed)
      for (auto [i, j] : std::vector<std::pair<int, int>>(cands)) cands.push_back({j, i});
    for (auto [i, j] : cands) {
      auto bc = test_curl(d, fi, outer, s.visits, i, j, s.closed);
      if (bc) out.push_back(*bc);
    }
  }
  return out;
}

std::optional<BigCurl> find_big_curl(const Diagram& d) {
  auto all = all_big_curls(d);
  if (!all.empty()) return all.front();
  // hard error if a self-intersection exists but no detector fired
  for (auto& s : strands(d)) {
    std::set<int> seen;
    for (auto& [c, slot] : s.visits)
      if (!seen.insert(c).second)
        throw std::logic_error("self-intersecting strand without a detectable big curl");
  }
  return std::nullopt;
}

// ------------------------------------------------------------- big bigons

std::vector<BigBigon> all_big_bigons(const Diagram& d) {
  std::vector<BigBigon> out;
  if (d.crossing_count() < 2) return out;
  FaceIndex fi(d);
  int outer = pick_outer_face(d, fi);
  auto ss = strands(d);
  std::set<std::pair<int, int>> seen_pairs_encoded;  // dedupe by curve content
  for (int s1 = 0; s1 < (int)ss.size(); ++s1) {
    int n1 = (int)ss[s1].visits.size();
    for (int s2 = s1; s2 < (int)ss.size(); ++s2) {
      int n2 = (int)ss[s2].visits.size();
      for (int i1 = 0; i1 < n1; ++i1)
        for (int j1 = 0; j1 < n1; ++j1) {
          if (i1 == j1) continue;
          int x = ss[s1].visits[i1].first, y = ss[s1].visits[j1].first;
          if (x == y) continue;
          if (!ss[s1].closed && j1 < i1) continue;
          if (!injective_interior(ss[s1].visits, i1, j1, n1)) continue;
          // arc2 runs forward from a2 to b2; its endpoints must be {x, y}
          // in either order (the intervals carry no preferred orientation)
          for (int a2 = 0; a2 < n2; ++a2)
            for (int b2 = 0; b2 < n2; ++b2) {
              if (a2 == b2) continue;
              int cs = ss[s2].visits[a2].first, ce = ss[s2].visits[b2].first;
              bool fwd = (cs == x && ce == y), rev = (cs == y && ce == x);
              if (!fwd && !rev) continue;
              if (s1 == s2 && (a2 == i1 || a2 == j1 || b2 == i1 || b2 == j1)) continue;
              if (!ss[s2].closed && b2 < a2) continue;
              if (!injective_interior(ss[s2].visits, a2, b2, n2)) continue;
              std::set<int> int1, int2;
              for (int k = (i1 + 1) % n1; k != j1; k = (k + 1) % n1)
                int1.insert(ss[s1].visits[k].first);
              for (int k = (a2 + 1) % n2; k != b2; k = (k + 1) % n2)
                int2.insert(ss[s2].visits[k].first);
              if (s1 == s2) {
                std::set<int> idx1;
                for (int k = i1;; k = (k + 1) % n1) {
                  idx1.insert(k);
                  if (k == j1) break;
                }
                bool overlap = false;
                for (int k = a2;; k = (k + 1) % n2) {
                  if (idx1.count(k)) overlap = true;
                  if (k == b2) break;
                }
                if (overlap) continue;
              }
              bool share = false;
              for (int c : int1)
                if (int2.count(c) || c == y || c == x) share = true;
              for (int c : int2)
                if (c == x || c == y) share = true;
              if (share) continue;
              auto curve = interval_curve(d, ss[s1].visits, i1, j1, ss[s1].closed);
              auto c2 = interval_curve(d, ss[s2].visits, a2, b2, ss[s2].closed);
              curve.insert(c2.begin(), c2.end());
              // curve slots: arc endpoints contribute the exit slot where the
              // arc starts and the entry slot where it ends
              int ex1 = (ss[s1].visits[i1].second + 2) % 4;
              int ey1 = ss[s1].visits[j1].second;
              int ex2 = fwd ? (ss[s2].visits[a2].second + 2) % 4 : ss[s2].visits[b2].second;
              int ey2 = fwd ? ss[s2].visits[b2].second : (ss[s2].visits[a2].second + 2) % 4;
              auto adjacent = [&](int u, int v, int& lo) {
                if ((u + 1) % 4 == v) {
                  lo = u;
                  return true;
                }
                if ((v + 1) % 4 == u) {
                  lo = v;
                  return true;
                }
                return false;
              };
              int ax, ay;
              if (!adjacent(ex1, ex2, ax)) continue;
              if (!adjacent(ey1, ey2, ay)) continue;
              auto sp = curve_sides(d, fi, curve, outer);
              bool good = sp.side[wedge_face(d, fi, x, ax)] == 1 &&
                          sp.side[wedge_face(d, fi, y, ay)] == 1;
              for (int t = 1; t < 4 && good; ++t) {
                if (sp.side[wedge_face(d, fi, x, (ax + t) % 4)] != 0) good = false;
                if (sp.side[wedge_face(d, fi, y, (ay + t) % 4)] != 0) good = false;
              }
              if (!good) continue;
              BigBigon bb;
              bb.x = x;
              bb.y = y;
              bb.wedge_x = ax;
              bb.wedge_y = ay;
              for (int k = i1;; k = (k + 1) % n1) {
                bb.arc1.push_back(ss[s1].visits[k]);
                if (k == j1) break;
              }
              for (int k = a2;; k = (k + 1) % n2) {
                bb.arc2.push_back(ss[s2].visits[k]);
                if (k == b2) break;
              }
              std::set<int> on_curve = int1;
              on_curve.insert(int2.begin(), int2.end());
              on_curve.insert(x);
              on_curve.insert(y);
              int inside = 0;
              for (int c = 0; c < d.crossing_count(); ++c) {
                if (on_curve.count(c)) continue;
                bool all_in = true;
                for (int t = 0; t < 4; ++t)
                  if (sp.side[wedge_face(d, fi, c, t)] != 1) all_in = false;
                if (all_in) ++inside;
              }
              bb.inside_crossings = inside;
              int encl = 0;
              for (int f = 0; f < (int)fi.fs.size(); ++f)
                if (sp.side[f] == 1) ++encl;
              bb.enclosed_faces = encl;
              out.push_back(std::move(bb));
            }
        }
    }
  }
  (void)seen_pairs_encoded;
  return out;
}

std::optional<BigBigon> find_big_bigon(const Diagram& d) {
  auto all = all_big_bigons(d);
  if (!all.empty()) return all.front();
  return std::nullopt;
}

// ------------------------------------------------------------------ Surgery

Surgery::Surgery(const Diagram& base, std::vector<int> removed,
                 std::vector<std::pair<End, End>> internal)
    : base_(base), removed_(std::move(removed)), internal_(std::move(internal)) {}

int Surgery::new_crossing() { return fresh_++; }

namespace {
long surgery_leg(End leg) { return -(long)(leg.node * 4 + leg.slot) - 1; }
}  // namespace

void Surgery::connect_legs(End a, End b) { links_.push_back({surgery_leg(a), surgery_leg(b)}); }

void Surgery::connect_leg_new(End leg, int handle, int slot) {
  links_.push_back({surgery_leg(leg), (long)1'000'000 + handle * 4 + slot});
}

void Surgery::connect_new(int h1, int s1, int h2, int s2) {
  links_.push_back({(long)1'000'000 + h1 * 4 + s1, (long)1'000'000 + h2 * 4 + s2});
}

Diagram Surgery::result(std::vector<int>* old_to_new, int* new_base) const {
  std::set<int> removed(removed_.begin(), removed_.end());
  std::set<std::pair<End, End>> internal;
  for (auto [a, b] : internal_) internal.insert({std::min(a, b), std::max(a, b)});

  // new crossing indices come after the retained ones
  std::vector<int> newidx(base_.crossing_count(), -1);
  int keep = 0;
  for (int c = 0; c < base_.crossing_count(); ++c)
    if (!removed.count(c)) newidx[c] = keep++;

  Diagram out;
  out.bottom = base_.bottom;
  out.top = base_.top;
  out.bnd.resize(base_.m());
  out.cx.resize(keep + fresh_);
  for (auto& ci : base_.circles) out.circles.push_back({-1, ci.has_content});

  // contraction graph ids:
  //   retained crossing slot: c*4+s (using OLD index, remapped at the end)
  //   boundary b: BASE + b
  //   pattern leg (removed End): negative (as in surgery_leg)
  //   new crossing slots: 1'000'000 + h*4+s
  long BASE = (long)base_.crossing_count() * 4;
  std::vector<std::pair<long, long>> links = links_;
  auto enc = [&](End e) -> long {
    if (e.is_boundary()) return BASE + e.boundary_index();
    if (removed.count(e.node)) return surgery_leg(e);
    return (long)e.node * 4 + e.slot;
  };
  // edges of the base diagram, except internal pattern edges
  auto consider = [&](End a) {
    End b = base_.adj(a);
    End lo = std::min(a, b), hi = std::max(a, b);
    if (!(a == lo)) return;                           // each edge once
    if (internal.count({lo, hi})) return;             // dropped pattern edge
    bool a_rm = !a.is_boundary() && removed.count(a.node);
    bool b_rm = !b.is_boundary() && removed.count(b.node);
    if (a_rm && b_rm) {
      links.push_back({surgery_leg(a), surgery_leg(b)});  // external leg-to-leg arc
      return;
    }
    links.push_back({enc(a), enc(b)});
  };
  for (int c = 0; c < base_.crossing_count(); ++c)
    for (int s = 0; s < 4; ++s) consider(End::cross(c, s));
  for (int b = 0; b < base_.m(); ++b) consider(End::boundary(b));

  // Real nodes for contraction: retained slots, boundary, and new slots.
  // Legs are virtual (each appears exactly twice: once from the base edge,
  // once from the rewiring instruction).
  auto is_real = [&](long h) { return h >= 0; };
  (void)is_real;
  auto chains = contract_chains(links);
  auto dec = [&](long h) -> End {
    if (h >= 1'000'000) {
      long r = h - 1'000'000;
      return End::cross(keep + (int)(r / 4), (int)(r % 4));
    }
    if (h >= BASE) return End::boundary((int)(h - BASE));
    return End::cross(newidx[(int)(h / 4)], (int)(h % 4));
  };
  for (auto& [a, b] : chains.real_pairs) out.set_adj(dec(a), dec(b));
  for (int i = 0; i < chains.circles; ++i) out.circles.push_back({-1, false});
  out.check();
  if (old_to_new) *old_to_new = newidx;
  if (new_base) *new_base = keep;
  return out;
}

// --------------------------------------------------------- canonical chords

namespace {

struct Pt {
  Rat x, y;
};

Pt circle_point(const Rat& t) {
  Rat t2 = t * t;
  return {(1 - t2) / (1 + t2), 2 * t / (1 + t2)};
}

// exact chord intersection; chords given by endpoints
bool chord_cross(const Pt& a, const Pt& b, const Pt& c, const Pt& d, Pt& hit, Rat& s_ab) {
  Rat d1x = b.x - a.x, d1y = b.y - a.y;
  Rat d2x = d.x - c.x, d2y = d.y - c.y;
  Rat det = d1x * d2y - d1y * d2x;
  if (det == 0) return false;
  Rat s = ((c.x - a.x) * d2y - (c.y - a.y) * d2x) / det;
  Rat u = ((c.x - a.x) * d1y - (c.y - a.y) * d1x) / det;
  if (s <= 0 || s >= 1 || u <= 0 || u >= 1) return false;
  hit = {a.x + s * d1x, a.y + s * d1y};
  s_ab = s;
  return true;
}

}  // namespace

Diagram canonical_reduced(const Matching& m, int bottom, int top) {
  if (bottom + top != m.size()) throw std::invalid_argument("matching size mismatch");
  int n = m.size();
  Diagram d;
  d.bottom = bottom;
  d.top = top;
  d.bnd.resize(n);
  if (n == 0) return d;

  for (long salt = 0;; ++salt) {
    // convex-position exact rational points, counterclockwise
    std::vector<Pt> pts(n);
    for (int j = 0; j < n; ++j) {
      long h = (1 + (long)j * 2654435761L + salt * 7919L) % 1000003L;
      Rat t = Rat(-(n - 1) + 2 * j, n + 1) + Rat(h, 4L * 1000003L * (n + 1));
      pts[j] = circle_point(t);
    }
    std::vector<std::pair<int, int>> chords;
    for (int i = 0; i < n; ++i)
      if (m.pair[i] > i) chords.push_back({i, m.pair[i]});
    int nc = (int)chords.size();
    // intersections
    struct Hit {
      int other_chord;
      Rat s;       // parameter along this chord
      int vertex;  // crossing id
    };
    std::vector<std::vector<Hit>> along(nc);
    std::vector<Pt> vpts;
    std::vector<std::pair<int, int>> vchords;
    bool degenerate = false;
    for (int a = 0; a < nc && !degenerate; ++a)
      for (int b = a + 1; b < nc && !degenerate; ++b) {
        Pt hit;
        Rat s;
        auto& [a1, a2] = chords[a];
        auto& [b1, b2] = chords[b];
        if (!chord_cross(pts[a1], pts[a2], pts[b1], pts[b2], hit, s)) continue;
        // concurrency check against existing vertices
        for (auto& v : vpts)
          if (v.x == hit.x && v.y == hit.y) degenerate = true;
        int vid = (int)vpts.size();
        vpts.push_back(hit);
        vchords.push_back({a, b});
        along[a].push_back({b, s, vid});
        Rat s2;
        Pt h2;
        chord_cross(pts[b1], pts[b2], pts[a1], pts[a2], h2, s2);
        along[b].push_back({a, s2, vid});
      }
    if (degenerate) continue;
    if ((int)vpts.size() != inversion_count(m)) continue;  // tangency safety; retry

    d.cx.assign(vpts.size(), {});
    // slot assignment: slot0 = first chord forward, slots ccw
    auto vertex_slots = [&](int vid, int chord, bool forward) -> int {
      auto [ca, cb] = vchords[vid];
      auto dir = [&](int ch) {
        auto& [p1, p2] = chords[ch];
        return Pt{pts[p2].x - pts[p1].x, pts[p2].y - pts[p1].y};
      };
      Pt da = dir(ca), db = dir(cb);
      Rat cr = da.x * db.y - da.y * db.x;
      // ccw order: cr > 0 -> [Af, Bf, Ab, Bb]; cr < 0 -> [Af, Bb, Ab, Bf]
      if (chord == ca) return forward ? 0 : 2;
      return (cr > 0) == forward ? 1 : 3;
    };
    for (int ch = 0; ch < nc; ++ch) {
      std::sort(along[ch].begin(), along[ch].end(),
                [](const Hit& a, const Hit& b) { return a.s < b.s; });
      End prev = End::boundary(chords[ch].first);
      for (auto& h : along[ch]) {
        End in = End::cross(h.vertex, vertex_slots(h.vertex, ch, false));  // backward slot faces start
        d.set_adj(prev, in);
        prev = End::cross(h.vertex, vertex_slots(h.vertex, ch, true));
      }
      d.set_adj(prev, End::boundary(chords[ch].second));
    }
    d.check();
    if (!(boundary_matching(d) == m)) throw std::logic_error("canonical_reduced matching mismatch");
    if (d.crossing_count() != inversion_count(m)) throw std::logic_error("canonical_reduced crossing count");
    return d;
  }
}

Diagram canonical_reduced(const Matching& m) { return canonical_reduced(m, m.size(), 0); }

}  // namespace spweb
