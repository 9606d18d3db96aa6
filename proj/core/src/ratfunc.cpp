#include "spweb/ratfunc.hpp"

#include <sstream>

namespace spweb {

RatFunc::RatFunc(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Laurent(1);
    return;
  }
  Laurent g = laurent_gcd(num_, den_);
  if (!(g == Laurent(1))) {
    Laurent qn, qd;
    bool okn = try_divide(num_, g, qn);
    bool okd = try_divide(den_, g, qd);
    if (!okn || !okd) throw std::logic_error("gcd does not divide");
    num_ = qn;
    den_ = qd;
  }
  // den: lowest exponent 0, lowest coefficient 1
  long sh = den_.min_deg();
  Rat lc = den_.coeff(sh);
  den_ = den_.shifted(-sh).scaled(1 / lc);
  num_ = num_.shifted(-sh).scaled(1 / lc);
}

RatFunc RatFunc::operator-() const {
  RatFunc r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return RatFunc(den_, num_);
}

Rat RatFunc::eval(const Rat& r) const {
  Rat d = den_.eval(r);
  if (d == 0) throw PoleAtPoint("denominator vanishes at " + rat_str(r));
  return num_.eval(r) / d;
}

std::string RatFunc::str() const {
  if (is_polynomial()) return num_.str();
  std::ostringstream os;
  os << "(" << num_.str() << ") / (" << den_.str() << ")";
  return os.str();
}

static nlohmann::json poly_json(const Laurent& p) {
  nlohmann::json j = nlohmann::json::object();
  for (auto& [e, c] : p.coeffs()) j[std::to_string(e)] = rat_str(c);
  return j;
}

static Laurent poly_from_json(const nlohmann::json& j) {
  Laurent p;
  for (auto it = j.begin(); it != j.end(); ++it)
    p.set(std::stol(it.key()), rat_parse(it.value().get<std::string>()));
  return p;
}

nlohmann::json RatFunc::to_json() const {
  return nlohmann::json{{"num", poly_json(num_)}, {"den", poly_json(den_)}};
}

RatFunc RatFunc::from_json(const nlohmann::json& j) {
  return RatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

RatFunc qint(long k) {
  Laurent p;
  if (k < 0) return -qint(-k);
  for (long e = k - 1; e >= -(k - 1); e -= 2) p.set(e, rat_of(1));
  return RatFunc(p);
}

RatFunc qint_base(long k, long d) {
  if (d <= 0) throw std::domain_error("qint_base: base exponent must be positive");
  if (k < 0) return -qint_base(-k, d);
  Laurent p;
  for (long e = k - 1; e >= -(k - 1); e -= 2) p.set(e * d, rat_of(1));
  return RatFunc(p);
}

RatFunc qfact(long k) {
  if (k < 0) throw std::domain_error("qfact of negative integer");
  RatFunc r(1);
  for (long j = 1; j <= k; ++j) r *= qint(j);
  return r;
}

RatFunc qbinom(long m, long k) {
  if (k < 0) throw std::domain_error("qbinom: k must be nonnegative");
  RatFunc r(1);
  for (long j = 1; j <= k; ++j) r *= qint(m - j + 1) / qint(j);
  return r;
}

}  // namespace spweb
