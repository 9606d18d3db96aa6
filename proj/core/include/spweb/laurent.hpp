#pragma once

#include <map>
#include <string>

#include "spweb/rational.hpp"

namespace spweb {

// Laurent polynomial in q with exact rational coefficients.
// Invariant: no stored coefficient is zero; the zero polynomial is the empty map.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long c) { set(0, rat_of(c)); }
  Laurent(const Rat& c) { set(0, c); }

  static Laurent monomial(long exp, const Rat& c) {
    Laurent p;
    p.set(exp, c);
    return p;
  }
  static Laurent q(long exp = 1) { return monomial(exp, rat_of(1)); }

  bool is_zero() const { return c_.empty(); }
  long min_deg() const;  // requires nonzero
  long max_deg() const;
  Rat coeff(long exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? Rat(0) : it->second;
  }
  const std::map<long, Rat>& coeffs() const { return c_; }

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.c_ == b.c_; }

  Laurent shifted(long d) const;          // multiply by q^d
  Laurent scaled(const Rat& c) const;     // multiply by a rational
  Laurent bar() const;                    // q -> q^{-1}
  Rat eval(const Rat& x) const;           // x must be nonzero unless min_deg >= 0

  void set(long exp, const Rat& c) {
    if (c == 0)
      c_.erase(exp);
    else
      c_[exp] = c;
  }

  std::string str() const;

 private:
  std::map<long, Rat> c_;
};

// Exact division; returns false if b does not divide a.
bool try_divide(const Laurent& a, const Laurent& b, Laurent& quot);

// gcd up to units (the result has min_deg 0 and lowest coefficient 1).
Laurent laurent_gcd(Laurent a, Laurent b);

}  // namespace spweb
