#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace sandgroup {

/// Arbitrary-precision signed integer used for every exact quantity.
using Integer = mpz_class;

inline Integer gcd_of(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// gcd of a family; the empty family has gcd 0.
inline Integer gcd_of(std::span<const Integer> values) {
  Integer g = 0;
  for (const auto& v : values) {
    g = gcd_of(g, v);
    if (g == 1) break;
  }
  return g;
}

inline Integer abs_of(const Integer& a) {
  Integer r;
  mpz_abs(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

inline std::string to_string(const Integer& a) { return a.get_str(); }

inline Integer parse_integer(const std::string& text) { return Integer(text, 10); }

}  // namespace sandgroup
