#pragma once

#include <stdexcept>
#include <string>

#include "spweb/laurent.hpp"

#include "json.hpp"

namespace spweb {

struct PoleAtPoint : std::runtime_error {
  explicit PoleAtPoint(const std::string& w) : std::runtime_error(w) {}
};

// Element of Q(q) in canonical form: num/den fully reduced, den with
// minimum degree 0 and lowest coefficient 1.  Structural equality is
// mathematical equality.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}
  RatFunc(const Rat& c) : num_(c), den_(1) {}
  RatFunc(const Laurent& p) : num_(p), den_(1) {}
  RatFunc(Laurent num, Laurent den);

  static RatFunc q(long exp = 1) { return RatFunc(Laurent::q(exp)); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == Laurent(1); }
  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFunc inv() const;
  RatFunc bar() const { return RatFunc(num_.bar(), den_.bar()); }  // q -> 1/q

  // Exact evaluation at q = r; throws PoleAtPoint when the denominator vanishes.
  Rat eval(const Rat& r) const;

  std::string str() const;
  nlohmann::json to_json() const;
  static RatFunc from_json(const nlohmann::json& j);

 private:
  Laurent num_, den_;
  void normalize();
};

// Balanced quantum integer [k] = (q^k - q^-k)/(q - q^-1), as a Laurent polynomial.
RatFunc qint(long k);
// [k] in the variable q^d.
RatFunc qint_base(long k, long d);
// [k]! = [k][k-1]...[1].
RatFunc qfact(long k);
// Quantum binomial via the product form prod_{j=1..k} [m-j+1]/[j].
RatFunc qbinom(long m, long k);

}  // namespace spweb
