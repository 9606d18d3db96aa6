#include "spweb/homspace.hpp"

#include <algorithm>
#include <thread>

namespace spweb {

// ----------------------------------------------------------------- Morphism

Morphism Morphism::operator-() const {
  Morphism r = *this;
  for (auto& [m, c] : r.coords) c = -c;
  return r;
}

Morphism operator+(const Morphism& a, const Morphism& b) {
  if (a.bottom != b.bottom || a.top != b.top) throw WidthMismatch("morphism sum");
  Morphism r = a;
  for (auto& [m, c] : b.coords) {
    auto it = r.coords.find(m);
    if (it == r.coords.end())
      r.coords[m] = c;
    else {
      it->second += c;
      if (it->second.is_zero()) r.coords.erase(it);
    }
  }
  return r;
}

Morphism operator-(const Morphism& a, const Morphism& b) { return a + (-b); }

Morphism Morphism::scaled(const RatFunc& c) const {
  Morphism r;
  r.bottom = bottom;
  r.top = top;
  if (c.is_zero()) return r;
  r.coords = coords;
  for (auto& [m, v] : r.coords) v = v * c;
  return r;
}

nlohmann::json Morphism::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (auto& [m, c] : coords)
    terms.push_back({{"matching", m.str()}, {"coeff", c.to_json()}, {"pretty", c.str()}});
  return {{"bottom", bottom}, {"top", top}, {"terms", terms}};
}

nlohmann::json GramMatrix::to_json() const {
  nlohmann::json b = nlohmann::json::array();
  for (auto& m : basis) b.push_back(m.str());
  nlohmann::json rows = nlohmann::json::array();
  for (auto& r : entries) {
    nlohmann::json row = nlohmann::json::array();
    for (auto& e : r) row.push_back(e.to_json());
    rows.push_back(row);
  }
  return {{"n", n}, {"points", points}, {"basis", b}, {"entries", rows}};
}

// ---------------------------------------------------------------------- Hom

Hom::Hom(int n) : n_(n), eng_(n) {
  if (n < 1) throw std::invalid_argument("rank must be at least 1");
}

Morphism Hom::unit(const Matching& m, int bottom, int top) const {
  Morphism r;
  r.bottom = bottom;
  r.top = top;
  if (m.size() != bottom + top) throw WidthMismatch("unit matching size");
  r.coords[m] = RatFunc(1);
  return r;
}

Morphism Hom::identity(int w) const {
  std::vector<int> p(2 * w);
  for (int i = 0; i < w; ++i) {
    p[i] = 2 * w - 1 - i;
    p[2 * w - 1 - i] = i;
  }
  return unit(Matching(p), w, w);
}

Morphism Hom::zero(int bottom, int top) const {
  Morphism r;
  r.bottom = bottom;
  r.top = top;
  return r;
}

Morphism Hom::from_diagram(const Diagram& d) {
  Morphism r;
  r.bottom = d.bottom;
  r.top = d.top;
  for (auto& [m, c] : eng_.normal_form(d)) r.coords[m] = c;
  return r;
}

Morphism Hom::compose(const Morphism& f, const Morphism& g) {
  if (g.top != f.bottom) throw WidthMismatch("compose widths");
  Morphism out = zero(g.bottom, f.top);
  for (auto& [mg, cg] : g.coords)
    for (auto& [mf, cf] : f.coords) {
      Diagram d = stack(canonical_reduced(mg, g.bottom, g.top), canonical_reduced(mf, f.bottom, f.top));
      out = out + from_diagram(d).scaled(cf * cg);
    }
  return out;
}

Morphism Hom::tensor(const Morphism& f, const Morphism& g) {
  Morphism out = zero(f.bottom + g.bottom, f.top + g.top);
  for (auto& [mf, cf] : f.coords)
    for (auto& [mg, cg] : g.coords) {
      Diagram d =
          side_by_side(canonical_reduced(mf, f.bottom, f.top), canonical_reduced(mg, g.bottom, g.top));
      out = out + from_diagram(d).scaled(cf * cg);
    }
  return out;
}

Morphism Hom::dual_flip(const Morphism& f) {
  Morphism out = zero(f.top, f.bottom);
  for (auto& [m, c] : f.coords)
    out = out + from_diagram(transpose(canonical_reduced(m, f.bottom, f.top))).scaled(c);
  return out;
}

RatFunc Hom::basis_pair(const Matching& m1, const Matching& m2, int bottom, int top) {
  std::string key = std::to_string(bottom) + ":" + std::to_string(top) + "|" + m1.str() + "|" + m2.str();
  auto it = pair_cache_.find(key);
  if (it != pair_cache_.end()) return it->second;
  Diagram d = stack(canonical_reduced(m1, bottom, top), transpose(canonical_reduced(m2, bottom, top)));
  RatFunc v = eng_.eval_closed(trace_close(d));
  pair_cache_[key] = v;
  return v;
}

RatFunc Hom::trace_pair(const Morphism& f, const Morphism& g) {
  if (f.bottom != g.bottom || f.top != g.top) throw WidthMismatch("trace_pair boundaries");
  RatFunc v(0);
  for (auto& [m1, c1] : f.coords)
    for (auto& [m2, c2] : g.coords) v += c1 * c2 * basis_pair(m1, m2, f.bottom, f.top);
  return v;
}

bool Hom::is_gram_zero(const Morphism& f) {
  if (f.is_zero()) return true;
  for (auto& s : enumerate_matchings(f.bottom + f.top)) {
    RatFunc v(0);
    for (auto& [m, c] : f.coords) v += c * basis_pair(m, s, f.bottom, f.top);
    if (!v.is_zero()) return false;
  }
  return true;
}

bool Hom::morphism_equal(const Morphism& f, const Morphism& g) {
  if (f.bottom != g.bottom || f.top != g.top) throw WidthMismatch("morphism_equal boundaries");
  return is_gram_zero(f - g);
}

RatFunc Hom::closed_value(const Morphism& f) {
  if (f.bottom != f.top) throw WidthMismatch("closed_value needs an endomorphism");
  RatFunc v(0);
  for (auto& [m, c] : f.coords)
    v += c * eng_.eval_closed(trace_close(canonical_reduced(m, f.bottom, f.top)));
  return v;
}

GramMatrix Hom::gram(int points) {
  GramMatrix g;
  g.n = n_;
  g.points = points;
  g.basis = enumerate_matchings(points);
  int nb = (int)g.basis.size();
  g.entries.assign(nb, std::vector<RatFunc>(nb));
  if (jobs <= 1) {
    for (int i = 0; i < nb; ++i)
      for (int j = i; j < nb; ++j) {
        RatFunc v = basis_pair(g.basis[i], g.basis[j], 0, points);
        g.entries[i][j] = v;
        g.entries[j][i] = v;
      }
    return g;
  }
  // shard rows over worker engines (thread-local caches; deterministic values)
  std::vector<std::thread> ws;
  std::atomic<int> next_row{0};
  std::mutex write_mu;
  for (int t = 0; t < jobs; ++t) {
    ws.emplace_back([&, t]() {
      SymbolicEngine local(n_);
      for (;;) {
        int i = next_row.fetch_add(1);
        if (i >= nb) return;
        std::vector<RatFunc> row(nb);
        for (int j = i; j < nb; ++j) {
          Diagram d = stack(canonical_reduced(g.basis[i], 0, points),
                            transpose(canonical_reduced(g.basis[j], 0, points)));
          row[j] = local.eval_closed(trace_close(d));
        }
        std::lock_guard<std::mutex> lk(write_mu);
        for (int j = i; j < nb; ++j) {
          g.entries[i][j] = row[j];
          g.entries[j][i] = row[j];
        }
      }
    });
  }
  for (auto& w : ws) w.join();
  return g;
}

// fraction-free style rank: clear denominators per row, then Gaussian
// elimination over Q(q) with exact division
int exact_rank(std::vector<std::vector<RatFunc>> a) {
  int nrows = (int)a.size();
  if (nrows == 0) return 0;
  int ncols = (int)a[0].size();
  int rank = 0;
  for (int col = 0; col < ncols && rank < nrows; ++col) {
    int piv = -1;
    for (int r = rank; r < nrows; ++r)
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    RatFunc inv = a[rank][col].inv();
    for (int j = col; j < ncols; ++j) a[rank][j] = a[rank][j] * inv;
    for (int r = 0; r < nrows; ++r) {
      if (r == rank || a[r][col].is_zero()) continue;
      RatFunc f = a[r][col];
      for (int j = col; j < ncols; ++j) a[r][j] = a[r][j] - f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

namespace {

// rank of a rational matrix modulo a fixed prime (for probabilistic mode)
int rank_mod_p(const std::vector<std::vector<Rat>>& a, uint64_t p) {
  int nrows = (int)a.size();
  if (nrows == 0) return 0;
  int ncols = (int)a[0].size();
  auto mod_of = [&](const Rat& x) -> uint64_t {
    mpz_class num = x.get_num(), den = x.get_den();
    mpz_class pm(std::to_string(p));
    mpz_class r = num % pm;
    if (r < 0) r += pm;
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), mpz_class(den % pm).get_mpz_t(), pm.get_mpz_t()) == 0)
      throw PoleAtPoint("denominator not invertible mod p");
    mpz_class v = (r * dinv) % pm;
    return v.get_ui();
  };
  std::vector<std::vector<uint64_t>> m(nrows, std::vector<uint64_t>(ncols));
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) m[i][j] = mod_of(a[i][j]);
  auto mulmod = [&](uint64_t x, uint64_t y) { return (unsigned __int128)x * y % p; };
  auto powmod = [&](uint64_t b, uint64_t e) {
    uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, b);
      b = mulmod(b, b);
      e >>= 1;
    }
    return r;
  };
  int rank = 0;
  for (int col = 0; col < ncols && rank < nrows; ++col) {
    int piv = -1;
    for (int r = rank; r < nrows; ++r)
      if (m[r][col]) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    uint64_t inv = powmod(m[rank][col], p - 2);
    for (int j = col; j < ncols; ++j) m[rank][j] = mulmod(m[rank][j], inv);
    for (int r = 0; r < nrows; ++r) {
      if (r == rank || !m[r][col]) continue;
      uint64_t f = m[r][col];
      for (int j = col; j < ncols; ++j) {
        uint64_t s = mulmod(f, m[rank][j]);
        m[r][j] = m[r][j] >= s ? m[r][j] - s : m[r][j] + (p - s);
      }
    }
    ++rank;
  }
  return rank;
}

uint64_t splitmix(uint64_t& s) {
  s += 0x9e3779b97f4a7c15ULL;
  uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

RankResult Hom::gram_rank(int points, RankMode mode, uint64_t seed, int trials) {
  RankResult res;
  res.mode = mode;
  res.seed = seed;
  if (mode == RankMode::Exact) {
    res.rank = exact_rank(gram(points).entries);
    return res;
  }
  auto basis = enumerate_matchings(points);
  int nb = (int)basis.size();
  uint64_t state = seed;
  int best = 0;
  int done = 0;
  for (int t = 0; done < trials && t < trials + 8; ++t) {
    // random rational point q = (a+2)/ (b+1) with a != b+... keep |q| != 1, 0
    uint64_t ra = splitmix(state), rb = splitmix(state);
    long num = 2 + (long)(ra % 97), den = 1 + (long)(rb % 7);
    if (num == den) num += 1;
    NumericScalars sc{Rat((long)num, (long)den)};
    try {
      NumericEngine eng(n_, sc);
      std::vector<std::vector<Rat>> m(nb, std::vector<Rat>(nb));
      for (int i = 0; i < nb; ++i)
        for (int j = i; j < nb; ++j) {
          Diagram d = stack(canonical_reduced(basis[i], 0, points),
                            transpose(canonical_reduced(basis[j], 0, points)));
          Rat v = eng.eval_closed(trace_close(d));
          m[i][j] = v;
          m[j][i] = v;
        }
      uint64_t p = 0xFFFFFFFFFFFFFFC5ULL;  // 2^64 - 59, prime
      best = std::max(best, rank_mod_p(m, p));
      ++done;
    } catch (const PoleAtPoint&) {
      continue;  // re-sample the evaluation point
    }
  }
  res.rank = best;
  res.trials = done;
  return res;
}

// ---------------------------------------------------------------- morphisms

Morphism Hom::cupcap2() const {
  return unit(Matching::from_pairs(4, {{0, 1}, {2, 3}}), 2, 2);
}

Morphism Hom::x2() const {
  return unit(Matching::from_pairs(4, {{0, 2}, {1, 3}}), 2, 2);
}

Morphism Hom::crossing(int sign) const {
  if (sign != 1 && sign != -1) throw std::invalid_argument("crossing sign");
  Morphism r = identity(2).scaled(RatFunc::q(sign));
  r = r - x2();
  r = r + cupcap2().scaled(RatFunc::q(-sign));
  return r;
}

Morphism Hom::clasp(int k) {
  if (k < 1 || k > n_) throw std::invalid_argument("clasp needs 1 <= k <= n");
  auto it = clasp_cache_.find(k);
  if (it != clasp_cache_.end()) return it->second;

  Morphism out;
  if (k == 1) {
    out = identity(1);
  } else {
    auto basis = enumerate_matchings(2 * k);
    int nb = (int)basis.size();

    // homogeneous constraint rows over the matching unknowns; the solution
    // space is one-dimensional and the idempotent in it is the clasp
    std::vector<std::vector<RatFunc>> rows;
    std::vector<RatFunc> rhs;

    // images of basis elements under cap_i and the braiding at the top
    for (int i = 1; i <= k - 1; ++i) {
      Diagram capd = build_planar(SliceWord{k, {{Gen::Cap, i}}});
      Diagram xd = build_planar(SliceWord{k, {{Gen::Cross, i}}});
      Diagram ccd = build_planar(SliceWord{k, {{Gen::Cap, i}, {Gen::Cup, i}}});
      std::vector<Morphism> cap_img(nb), braid_img(nb);
      for (int j = 0; j < nb; ++j) {
        Diagram bj = canonical_reduced(basis[j], k, k);
        cap_img[j] = from_diagram(stack(bj, capd));
        // braiding letter: q id - X + q^{-1} cupcap
        Morphism bj_m = unit(basis[j], k, k);
        braid_img[j] = bj_m.scaled(RatFunc::q(1)) - from_diagram(stack(bj, xd)) +
                       from_diagram(stack(bj, ccd)).scaled(RatFunc::q(-1));
      }
      // cap_i . f == 0 in the Gram sense
      for (auto& s : enumerate_matchings(2 * k - 2)) {
        std::vector<RatFunc> row(nb);
        bool nonzero = false;
        for (int j = 0; j < nb; ++j) {
          RatFunc v(0);
          for (auto& [m, c] : cap_img[j].coords) v += c * basis_pair(m, s, k, k - 2);
          row[j] = v;
          nonzero = nonzero || !v.is_zero();
        }
        if (nonzero) {
          rows.push_back(row);
          rhs.push_back(RatFunc(0));
        }
      }
      // braiding . f == -q^{-1} f in the Gram sense
      for (auto& s : enumerate_matchings(2 * k)) {
        std::vector<RatFunc> row(nb);
        bool nonzero = false;
        for (int j = 0; j < nb; ++j) {
          RatFunc v(0);
          for (auto& [m, c] : braid_img[j].coords) v += c * basis_pair(m, s, k, k);
          v += RatFunc::q(-1) * basis_pair(basis[j], s, k, k);
          row[j] = v;
          nonzero = nonzero || !v.is_zero();
        }
        if (nonzero) {
          rows.push_back(row);
          rhs.push_back(RatFunc(0));
        }
      }
    }

    // reduced row echelon; the nullspace must be exactly one-dimensional
    (void)rhs;
    int nr = (int)rows.size();
    std::vector<int> pivot_of_col(nb, -1);
    int rank = 0;
    for (int col = 0; col < nb && rank < nr; ++col) {
      int piv = -1;
      for (int r = rank; r < nr; ++r)
        if (!rows[r][col].is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      std::swap(rows[piv], rows[rank]);
      RatFunc inv = rows[rank][col].inv();
      for (int j = col; j < nb; ++j) rows[rank][j] = rows[rank][j] * inv;
      for (int r = 0; r < nr; ++r) {
        if (r == rank || rows[r][col].is_zero()) continue;
        RatFunc f = rows[r][col];
        for (int j = col; j < nb; ++j) rows[r][j] = rows[r][j] - f * rows[rank][j];
      }
      pivot_of_col[col] = rank;
      ++rank;
    }
    if (rank < nb - 1) throw NonUnique("clasp system underdetermined");
    if (rank > nb - 1) throw NoSolution("clasp system admits only the zero solution");

    // nullspace vector: free column -> 1, pivot columns from the echelon form
    int free_col = -1;
    for (int col = 0; col < nb; ++col)
      if (pivot_of_col[col] < 0) free_col = col;
    std::vector<RatFunc> x(nb);
    x[free_col] = RatFunc(1);
    for (int col = 0; col < nb; ++col)
      if (pivot_of_col[col] >= 0) x[col] = -rows[pivot_of_col[col]][free_col];

    Morphism v;
    v.bottom = v.top = k;
    for (int col = 0; col < nb; ++col)
      if (!x[col].is_zero()) v.coords[basis[col]] = x[col];

    // scale to the idempotent: v.v = mu v
    Morphism vv = compose(v, v);
    auto it0 = v.coords.begin();
    auto itvv = vv.coords.find(it0->first);
    if (itvv == vv.coords.end()) throw NoSolution("clasp candidate is nilpotent");
    RatFunc mu = itvv->second / it0->second;
    if (mu.is_zero()) throw NoSolution("clasp candidate is nilpotent");
    if (!(vv - v.scaled(mu)).is_zero())
      throw NoSolution("clasp solution space is not closed under composition");
    out = v.scaled(mu.inv());

    // post-verify idempotency through the trace form as well
    if (!morphism_equal(compose(out, out), out)) throw NoSolution("clasp is not idempotent");
  }
  clasp_cache_[k] = out;
  return out;
}

}  // namespace spweb
