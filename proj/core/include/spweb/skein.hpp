#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spweb/diagram.hpp"
#include "spweb/ratfunc.hpp"

namespace spweb {

struct NoEmptyCircle : std::runtime_error {
  explicit NoEmptyCircle(const std::string& w) : std::runtime_error(w) {}
};
struct CurlNotEmpty : std::runtime_error {
  explicit CurlNotEmpty(const std::string& w) : std::runtime_error(w) {}
};
struct BigonNotEmpty : std::runtime_error {
  explicit BigonNotEmpty(const std::string& w) : std::runtime_error(w) {}
};
struct NotATriangle : std::runtime_error {
  explicit NotATriangle(const std::string& w) : std::runtime_error(w) {}
};
struct NonTermination : std::runtime_error {
  explicit NonTermination(const std::string& w) : std::runtime_error(w) {}
};

// ---- field-independent local surgeries -----------------------------------

// Relabel into the canonical concrete form induced by encode(); old->new
// crossing index map returned through `index_map` when non-null.
Diagram canonical_relabel(const Diagram& d, std::vector<int>* index_map = nullptr);

// Remove an empty curl (loop consisting of a single edge at `bc.crossing`).
Diagram splice_curl(const Diagram& d, const BigCurl& bc);

// Empty-bigon replacement: returns {crossing term, cupcap term}.
std::pair<Diagram, Diagram> splice_bigon(const Diagram& d, const BigBigon& bb);

// One triangle-slide term; coefficients are sign * (uses_e ? [2n-2] : 1).
struct TriTerm {
  Diagram d;
  int sign = 1;
  bool uses_e = false;  // carries the [2n-2] factor
  bool leading = false;
};

// Replace an empty triangular face by the slid configuration plus the eight
// lower-order correction terms.  `face` is an index into faces(d).
std::vector<TriTerm> splice_triangle(const Diagram& d, int face_index);

// ---- reduction strategy (field independent) -------------------------------

struct ReduceStep {
  enum Kind { Circles, Curl, Bigon, Slide, Done } kind = Done;
  BigCurl curl;
  BigBigon bigon;
  int face_index = -1;  // for Slide
};

// Decide the next rewriting step for a diagram with no free circles and no
// closed components.  strategy_seed = 0 picks the innermost pattern.
ReduceStep next_step(const Diagram& d, uint64_t strategy_seed);

// ---- Matsumoto plan --------------------------------------------------------

struct SlidePlanStep {
  std::string pre_encode;  // canonical concrete before the slide
  int face_index = -1;
};
struct SlidePlan {
  std::vector<SlidePlanStep> steps;
  std::string final_encode;
};

// gRIII path between two reduced diagrams with the same matching, following
// the distinguished-strand procedure.  Inputs must be canonical concretes.
SlidePlan matsumoto_plan(const Diagram& a, const Diagram& b);

// ---- scalar traits ---------------------------------------------------------

struct SymbolicScalars {
  using V = RatFunc;
  V from_qint(long k) const { return qint(k); }
  V q_power(long e) const { return RatFunc::q(e); }
  V one() const { return RatFunc(1); }
  bool is_zero(const V& v) const { return v.is_zero(); }
};

struct NumericScalars {
  using V = Rat;
  Rat q;  // evaluation point; must avoid quantum-integer zeros
  V from_qint(long k) const {
    if (k < 0) return -from_qint(-k);
    Rat num = pow_q(k) - 1 / pow_q(k);
    Rat den = q - 1 / q;
    if (den == 0) throw PoleAtPoint("q - 1/q vanishes");
    return num / den;
  }
  V q_power(long e) const { return pow_q(e); }
  V one() const { return Rat(1); }
  bool is_zero(const V& v) const { return v == 0; }

 private:
  Rat pow_q(long e) const {
    Rat r(1);
    for (long i = 0; i < (e < 0 ? -e : e); ++i) r *= q;
    return e < 0 ? Rat(1) / r : r;
  }
};

// ---- engine ----------------------------------------------------------------

template <class S>
class Engine {
 public:
  using V = typename S::V;
  using Lin = std::map<std::string, std::pair<Diagram, V>>;    // reduced terms
  using Coords = std::map<Matching, V>;                        // canonical coordinates

  explicit Engine(int n, S scal = {}, uint64_t strategy_seed = 0)
      : n_(n), s_(std::move(scal)), seed_(strategy_seed) {}

  int n() const { return n_; }
  const S& scalars() const { return s_; }

  V circle_value() const {
    return -(s_.from_qint(n_) * s_.from_qint(2 * n_ + 2)) / s_.from_qint(n_ + 1);
  }
  V curl_value() const {
    return -(s_.from_qint(n_ - 1) * s_.from_qint(2 * n_ + 2)) / s_.from_qint(n_ + 1);
  }
  V bigon_x_value() const { return s_.from_qint(2); }
  V bigon_cc_value() const {
    return -(s_.from_qint(n_ - 1) * s_.from_qint(2 * n_)) / s_.from_qint(n_);
  }
  V slide_e_value() const { return s_.from_qint(2 * n_ - 2); }

  // Linear combination of reduced diagrams equal to d in the category.
  Lin reduce(const Diagram& d) {
    std::string key = d.encode();
    auto it = reduce_memo_.find(key);
    if (it != reduce_memo_.end()) return it->second;
    Lin out = reduce_uncached(d);
    reduce_memo_[key] = out;
    return out;
  }

  // Coordinates over canonical reduced representatives.
  Coords normal_form(const Diagram& d) {
    std::string key = d.encode();
    auto it = nf_memo_.find(key);
    if (it != nf_memo_.end()) return it->second;
    Coords out;
    for (auto& [k, term] : reduce(d)) add_scaled(out, canonicalize(term.first), term.second);
    nf_memo_[key] = out;
    return out;
  }

  V eval_closed(const Diagram& d) {
    if (d.m() != 0) throw WidthMismatch("eval_closed needs an empty boundary");
    Lin r = reduce(d);
    if (r.empty()) return s_.one() - s_.one();
    if (r.size() != 1) throw std::logic_error("closed diagram reduced to several terms");
    return r.begin()->second.second;
  }

  // Coordinates of a single reduced diagram.
  Coords canonicalize(const Diagram& r) {
    std::string key = r.encode();
    auto it = canon_memo_.find(key);
    if (it != canon_memo_.end()) return it->second;
    Coords out = canonicalize_uncached(r);
    canon_memo_[key] = out;
    return out;
  }

  static void add_scaled(Coords& into, const Coords& from, const V& c) {
    for (auto& [m, v] : from) {
      auto it = into.find(m);
      if (it == into.end()) {
        V nv = v * c;
        if (!(nv == nv - nv)) into[m] = nv;  // skip exact zeros
      } else {
        it->second += v * c;
        if (it->second == it->second - it->second) into.erase(it);
      }
    }
  }

  long steps() const { return steps_; }

 private:
  int n_;
  S s_;
  uint64_t seed_;
  long steps_ = 0;
  static constexpr long kStepLimit = 20'000'000;
  std::map<std::string, Lin> reduce_memo_;
  std::map<std::string, Coords> nf_memo_;
  std::map<std::string, Coords> canon_memo_;

  void bump() {
    if (++steps_ > kStepLimit)
      throw NonTermination("rewriting step limit exceeded; crossing count failed to decrease");
  }

  void add_term(Lin& into, const Diagram& d, const V& c) {
    if (s_.is_zero(c)) return;
    std::string k = d.encode();
    auto it = into.find(k);
    if (it == into.end())
      into[k] = {d, c};
    else {
      it->second.second += c;
      if (s_.is_zero(it->second.second)) into.erase(it);
    }
  }

  void add_lin(Lin& into, const Lin& from, const V& c) {
    for (auto& [k, t] : from) add_term(into, t.first, t.second * c);
  }

  V tri_coeff(const TriTerm& t) const {
    V c = t.uses_e ? slide_e_value() : s_.one();
    return t.sign < 0 ? (s_.one() - s_.one()) - c : c;
  }

  Lin reduce_uncached(const Diagram& d) {
    bump();
    Lin out;
    SplitResult sr = split_closed(d);
    V factor = s_.one();
    for (int i = 0; i < sr.circles; ++i) factor *= circle_value();
    bool is_connected_closed = sr.circles == 0 && sr.closed_parts.size() == 1 &&
                               sr.anchored.crossing_count() == 0 && sr.anchored.m() == 0;
    Diagram work;
    if (is_connected_closed) {
      work = d;
      // keep factor = 1; handle the connected closed diagram directly
      factor = s_.one();
    } else if (sr.circles > 0 || !sr.closed_parts.empty()) {
      for (auto& part : sr.closed_parts) factor *= eval_closed(part);
      if (s_.is_zero(factor)) return out;
      Lin base = reduce(sr.anchored);
      add_lin(out, base, factor);
      return out;
    } else {
      work = sr.anchored;
    }

    ReduceStep st = next_step(work, seed_);
    switch (st.kind) {
      case ReduceStep::Done:
        add_term(out, work, factor);
        return out;
      case ReduceStep::Curl: {
        Diagram t = splice_curl(work, st.curl);
        add_lin(out, reduce(t), factor * curl_value());
        return out;
      }
      case ReduceStep::Bigon: {
        auto [xterm, ccterm] = splice_bigon(work, st.bigon);
        add_lin(out, reduce(xterm), factor * bigon_x_value());
        add_lin(out, reduce(ccterm), factor * bigon_cc_value());
        return out;
      }
      case ReduceStep::Slide: {
        for (auto& t : splice_triangle(work, st.face_index))
          add_lin(out, reduce(t.d), factor * tri_coeff(t));
        return out;
      }
      default:
        throw std::logic_error("unexpected reduce step");
    }
  }

  Coords canonicalize_uncached(const Diagram& r) {
    Coords out;
    if (r.crossing_count() == 0 && r.m() == 0) {
      out[Matching{}] = s_.one();
      return out;
    }
    Matching mu = boundary_matching(r);
    Diagram a = canonical_relabel(r);
    Diagram c = canonical_relabel(canonical_reduced(mu, r.bottom, r.top));
    if (a.encode() == c.encode()) {
      out[mu] = s_.one();
      return out;
    }
    SlidePlan plan = matsumoto_plan(a, c);
    Diagram cur = a;
    for (auto& stp : plan.steps) {
      bump();
      if (cur.encode() != stp.pre_encode)
        throw std::logic_error("canonicalize replay out of sync");
      Diagram next;
      bool found = false;
      for (auto& t : splice_triangle(cur, stp.face_index)) {
        if (t.leading) {
          next = canonical_relabel(t.d);
          found = true;
        } else {
          add_scaled(out, normal_form(t.d), tri_coeff(t));
        }
      }
      if (!found) throw std::logic_error("slide without leading term");
      cur = next;
    }
    if (cur.encode() != plan.final_encode) throw std::logic_error("canonicalize did not land on target");
    auto it = out.find(mu);
    if (it == out.end())
      out[mu] = s_.one();
    else {
      it->second += s_.one();
      if (s_.is_zero(it->second)) out.erase(it);
    }
    return out;
  }
};

using SymbolicEngine = Engine<SymbolicScalars>;
using NumericEngine = Engine<NumericScalars>;

// ---- exposed single-step operations (symbolic) -----------------------------

struct LinComb {
  int bottom = 0, top = 0;
  std::map<std::string, std::pair<Diagram, RatFunc>> terms;
  void add(const Diagram& d, const RatFunc& c);
};

LinComb remove_circle(const Diagram& d, int n);
LinComb rewrite_curl(const Diagram& d, const BigCurl& curl, int n);
LinComb rewrite_bigon(const Diagram& d, const BigBigon& bigon, int n);
LinComb slide_gRIII(const Diagram& d, int face_index, int n);

}  // namespace spweb
