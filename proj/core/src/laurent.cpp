#include "spweb/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace spweb {

long Laurent::min_deg() const {
  if (c_.empty()) throw std::logic_error("min_deg of zero polynomial");
  return c_.begin()->first;
}

long Laurent::max_deg() const {
  if (c_.empty()) throw std::logic_error("max_deg of zero polynomial");
  return c_.rbegin()->first;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (auto& [e, c] : c_) r.c_[e] = -c;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (auto& [e, c] : o.c_) {
    auto it = c_.find(e);
    if (it == c_.end()) {
      c_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) c_.erase(it);
    }
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (auto& [e, c] : o.c_) {
    auto it = c_.find(e);
    if (it == c_.end()) {
      c_[e] = -c;
    } else {
      it->second -= c;
      if (it->second == 0) c_.erase(it);
    }
  }
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (auto& [ea, ca] : a.c_)
    for (auto& [eb, cb] : b.c_) {
      long e = ea + eb;
      auto it = r.c_.find(e);
      if (it == r.c_.end()) {
        Rat p = ca * cb;
        if (p != 0) r.c_[e] = p;
      } else {
        it->second += ca * cb;
        if (it->second == 0) r.c_.erase(it);
      }
    }
  return r;
}

Laurent Laurent::shifted(long d) const {
  Laurent r;
  for (auto& [e, c] : c_) r.c_[e + d] = c;
  return r;
}

Laurent Laurent::scaled(const Rat& s) const {
  Laurent r;
  if (s == 0) return r;
  for (auto& [e, c] : c_) r.c_[e] = c * s;
  return r;
}

Laurent Laurent::bar() const {
  Laurent r;
  for (auto& [e, c] : c_) r.c_[-e] = c;
  return r;
}

Rat Laurent::eval(const Rat& x) const {
  if (c_.empty()) return Rat(0);
  long lo = min_deg();
  if (lo < 0 && x == 0) throw std::domain_error("evaluating negative power at 0");
  // Horner on the shifted polynomial, then multiply by x^lo.
  Rat acc(0);
  long prev = max_deg();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    for (long k = it->first; k < prev; ++k) acc *= x;
    acc += it->second;
    prev = it->first;
  }
  Rat xpow(1);
  if (lo > 0)
    for (long k = 0; k < lo; ++k) xpow *= x;
  else
    for (long k = 0; k < -lo; ++k) xpow /= x;
  return acc * xpow;
}

std::string Laurent::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    Rat c = it->second;
    if (!first) os << (c < 0 ? " - " : " + ");
    if (first && c < 0) os << "-";
    first = false;
    Rat a = abs(c);
    long e = it->first;
    if (a != 1 || e == 0) os << a.get_str();
    if (e != 0) {
      if (a != 1) os << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

bool try_divide(const Laurent& a, const Laurent& b, Laurent& quot) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  quot = Laurent();
  if (a.is_zero()) return true;
  // q^k is a unit, so divisibility reduces to ordinary polynomial division
  // after shifting both arguments to minimum degree 0.
  long ashift = a.min_deg(), bshift = b.min_deg();
  Laurent ra = a.shifted(-ashift);
  Laurent rb = b.shifted(-bshift);
  long bdeg = rb.max_deg();
  Rat blead = rb.coeff(bdeg);
  Laurent q;
  while (!ra.is_zero() && ra.max_deg() >= bdeg) {
    long e = ra.max_deg() - bdeg;
    Rat c = ra.coeff(ra.max_deg()) / blead;
    q += Laurent::monomial(e, c);
    ra -= rb.shifted(e).scaled(c);
  }
  if (!ra.is_zero()) return false;
  quot = q.shifted(ashift - bshift);
  return true;
}

Laurent laurent_gcd(Laurent a, Laurent b) {
  if (a.is_zero() && b.is_zero()) return Laurent();
  auto normalize = [](Laurent p) {
    if (p.is_zero()) return p;
    p = p.shifted(-p.min_deg());
    return p.scaled(1 / p.coeff(0));
  };
  a = normalize(a);
  b = normalize(b);
  // Euclid on ordinary polynomials (min_deg 0 after normalization).
  while (!b.is_zero()) {
    long bdeg = b.max_deg();
    Rat blead = b.coeff(bdeg);
    Laurent r = a;
    while (!r.is_zero() && r.max_deg() >= bdeg) {
      Rat c = r.coeff(r.max_deg()) / blead;
      r -= b.shifted(r.max_deg() - bdeg).scaled(c);
    }
    a = b;
    b = normalize(r);
  }
  return normalize(a);
}

}  // namespace spweb
