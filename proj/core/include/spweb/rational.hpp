#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace spweb {

// Arbitrary-precision rational, the coefficient ring everywhere.
using Rat = mpq_class;

inline Rat rat_of(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace spweb
