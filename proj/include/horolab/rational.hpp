#pragma once

// exact arithmetic used by the measured-action layer and the tree-side
// boundary computations.  everything that the contract calls "exact" goes
// through these types; floating point is confined to the disk model.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "horolab/errors.hpp"

namespace horolab {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int int_pow(Int base, unsigned long long e) {
  Int acc = 1;
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

// base^e with negative exponents allowed; base must be nonzero when e < 0
inline Rational rat_pow(const Rational& base, long long e) {
  if (e >= 0) {
    Rational acc = 1;
    Rational b = base;
    unsigned long long k = static_cast<unsigned long long>(e);
    while (k) {
      if (k & 1) acc *= b;
      b *= b;
      k >>= 1;
    }
    return acc;
  }
  if (base == 0) throw Error("rat_pow: zero base with negative exponent");
  return 1 / rat_pow(base, -e);
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline std::string rat_str(const Rational& q) { return q.str(); }

// accepts "n", "-n", "n/d"
inline Rational rat_parse(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw ConfigError("not a rational literal: '" + s + "'");
  }
}

}  // namespace horolab
