#include "spweb/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace spweb {

int Partition::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << "]";
  return os.str();
}

int OscTableau::max_rows() const {
  int r = 0;
  for (auto& p : shapes) r = std::max(r, p.rows());
  return r;
}

void OscTableau::validate() const {
  if (shapes.empty() || !shapes.front().parts.empty())
    throw MalformedTableau("tableau must start at the empty partition");
  for (size_t i = 1; i < shapes.size(); ++i) {
    auto &a = shapes[i - 1].parts, &b = shapes[i].parts;
    if (std::abs(shapes[i].size() - shapes[i - 1].size()) != 1)
      throw MalformedTableau("consecutive shapes must differ by one box");
    // check one-row difference
    size_t rows = std::max(a.size(), b.size());
    int diffs = 0;
    for (size_t r = 0; r < rows; ++r) {
      int x = r < a.size() ? a[r] : 0, y = r < b.size() ? b[r] : 0;
      if (x != y) {
        ++diffs;
        if (std::abs(x - y) != 1) throw MalformedTableau("shapes differ by more than one box");
      }
    }
    if (diffs != 1) throw MalformedTableau("shapes differ in more than one row");
    for (size_t r = 0; r + 1 < b.size(); ++r)
      if (b[r] < b[r + 1]) throw MalformedTableau("shape is not a partition");
    if (!b.empty() && b.back() <= 0) throw MalformedTableau("shape is not a partition");
  }
}

std::vector<Matching> enumerate_matchings(int m) {
  std::vector<Matching> out;
  if (m % 2) throw std::invalid_argument("odd point count");
  std::vector<int> partner(m, -1);
  std::function<void()> rec = [&]() {
    int a = -1;
    for (int i = 0; i < m; ++i)
      if (partner[i] < 0) {
        a = i;
        break;
      }
    if (a < 0) {
      out.push_back(Matching(partner));
      return;
    }
    for (int b = a + 1; b < m; ++b) {
      if (partner[b] >= 0) continue;
      partner[a] = b;
      partner[b] = a;
      rec();
      partner[a] = partner[b] = -1;
    }
  };
  rec();
  return out;
}

int max_crossing(const Matching& m) {
  std::vector<std::pair<int, int>> ps;
  for (int i = 0; i < m.size(); ++i)
    if (m.pair[i] > i) ps.push_back({i, m.pair[i]});
  int n = (int)ps.size();
  int best = n > 0 ? 1 : 0;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> sel;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) sel.push_back(i);
    bool ok = true;
    for (size_t i = 0; i < sel.size() && ok; ++i)
      for (size_t j = i + 1; j < sel.size() && ok; ++j)
        if (!is_inversion(ps[sel[i]], ps[sel[j]])) ok = false;
    if (ok) best = std::max(best, (int)sel.size());
  }
  return best;
}

long count_avoiding(int m, int n) {
  long c = 0;
  for (auto& mt : enumerate_matchings(m))
    if (max_crossing(mt) <= n) ++c;
  return c;
}

namespace {

std::vector<Partition> neighbors(const Partition& p, int max_rows) {
  std::vector<Partition> out;
  // add a box
  for (int r = 0; r <= p.rows() && r < max_rows; ++r) {
    Partition q = p;
    if (r == q.rows())
      q.parts.push_back(1);
    else
      q.parts[r] += 1;
    bool ok = true;
    for (size_t i = 0; i + 1 < q.parts.size(); ++i)
      if (q.parts[i] < q.parts[i + 1]) ok = false;
    if (r > 0 && q.parts[r] > q.parts[r - 1]) ok = false;
    if (ok) out.push_back(q);
  }
  // remove a box
  for (int r = 0; r < p.rows(); ++r) {
    Partition q = p;
    q.parts[r] -= 1;
    if (q.parts[r] == 0 && r != q.rows() - 1) continue;
    if (q.parts[r] == 0) q.parts.pop_back();
    bool ok = true;
    for (size_t i = 0; i + 1 < q.parts.size(); ++i)
      if (q.parts[i] < q.parts[i + 1]) ok = false;
    if (ok) out.push_back(q);
  }
  return out;
}

}  // namespace

std::vector<OscTableau> enumerate_osc(int m, int max_rows) {
  std::vector<OscTableau> out;
  OscTableau cur;
  cur.shapes.push_back({});
  std::function<void(int)> rec = [&](int step) {
    if (step == m) {
      if (cur.shapes.back().parts.empty()) out.push_back(cur);
      return;
    }
    if (cur.shapes.back().size() > m - step) return;  // cannot return to empty
    for (auto& q : neighbors(cur.shapes.back(), max_rows)) {
      cur.shapes.push_back(q);
      rec(step + 1);
      cur.shapes.pop_back();
    }
  };
  rec(0);
  return out;
}

long walk_count(int n, int m, const Partition& target) {
  std::map<Partition, long> cur;
  cur[{}] = 1;
  for (int step = 0; step < m; ++step) {
    std::map<Partition, long> nxt;
    for (auto& [p, c] : cur)
      for (auto& q : neighbors(p, n)) nxt[q] += c;
    cur = std::move(nxt);
  }
  auto it = cur.find(target);
  return it == cur.end() ? 0 : it->second;
}

// ------------------------------------------------------------- the bijection

namespace {

struct Filling {
  std::vector<std::vector<int>> rows;  // entries, rows weakly shorter downward

  Partition shape() const {
    Partition p;
    for (auto& r : rows) p.parts.push_back((int)r.size());
    return p;
  }
  // forward row insertion from row r0; returns the (row, col) of the new cell
  std::pair<int, int> insert(int x, int r0 = 0) {
    int r = r0;
    while (true) {
      if (r == (int)rows.size()) rows.push_back({});
      auto& row = rows[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        return {r, (int)row.size() - 1};
      }
      std::swap(*it, x);
      ++r;
    }
  }
  // remove the corner cell at the end of row r and reverse-bump upward;
  // returns the ejected value
  int reverse_bump(int r) {
    int x = rows[r].back();
    rows[r].pop_back();
    if (rows[r].empty()) rows.erase(rows.begin() + r);
    for (int rr = r - 1; rr >= 0; --rr) {
      auto& row = rows[rr];
      // rightmost entry smaller than x
      auto it = std::lower_bound(row.begin(), row.end(), x);
      if (it == row.begin()) throw MalformedTableau("reverse bump failed");
      --it;
      std::swap(*it, x);
    }
    return x;
  }
};

// the cell added/removed between consecutive shapes; (row, +1/-1)
std::pair<int, int> shape_delta(const Partition& a, const Partition& b) {
  size_t rows = std::max(a.parts.size(), b.parts.size());
  for (size_t r = 0; r < rows; ++r) {
    int x = r < a.parts.size() ? a.parts[r] : 0;
    int y = r < b.parts.size() ? b.parts[r] : 0;
    if (x != y) return {(int)r, y - x};
  }
  throw MalformedTableau("equal consecutive shapes");
}

}  // namespace

Matching tableau_to_matching(const OscTableau& t) {
  t.validate();
  if (!t.shapes.back().parts.empty()) throw MalformedTableau("tableau must end at the empty partition");
  int m = t.length();
  Filling f;
  std::vector<int> partner(m, -1);
  for (int i = 1; i <= m; ++i) {
    auto [r, d] = shape_delta(t.shapes[i - 1], t.shapes[i]);
    if (d > 0) {
      // place entry i in the new cell at the end of row r
      while ((int)f.rows.size() <= r) f.rows.push_back({});
      f.rows[r].push_back(i);
      if (f.rows[r].size() >= 2 && f.rows[r][f.rows[r].size() - 2] > i)
        throw MalformedTableau("filling is not standard");
    } else {
      int j = f.reverse_bump(r);
      partner[j - 1] = i - 1;
      partner[i - 1] = j - 1;
    }
  }
  return Matching(partner);
}

OscTableau matching_to_tableau(const Matching& mt) {
  int m = mt.size();
  Filling f;
  std::vector<Partition> rev;
  rev.push_back({});
  for (int i = m; i >= 1; --i) {
    int j = mt.pair[i - 1] + 1;
    if (j < i) {
      // point i-1 closes the pair (j-1, i-1): undo the removal by forward
      // inserting the opener's label
      f.insert(j);
    } else {
      // opener: entry i sits in a corner
      bool removed = false;
      for (int r = 0; r < (int)f.rows.size() && !removed; ++r) {
        if (!f.rows[r].empty() && f.rows[r].back() == i) {
          f.rows[r].pop_back();
          if (f.rows[r].empty()) f.rows.erase(f.rows.begin() + r);
          removed = true;
        }
      }
      if (!removed) throw MalformedTableau("opener entry is not a corner");
    }
    rev.push_back(f.shape());
  }
  OscTableau t;
  for (auto it = rev.rbegin(); it != rev.rend(); ++it) t.shapes.push_back(*it);
  t.validate();
  return t;
}

}  // namespace spweb
