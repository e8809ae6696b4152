#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace coulomb {

// Exact arbitrary-precision rational. All coefficient arithmetic in this
// project is exact; there is no floating point anywhere in the kernel.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Floor division helpers for lattice bookkeeping.
inline long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline long ceil_div(long a, long b) { return -floor_div(-a, b); }

}  // namespace coulomb
