#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace orbit_euler {

using Integer = mpz_class;
using Rational = mpq_class;

// "num/den", or just "num" for integers.
inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational r(Integer(std::to_string(num)), Integer(std::to_string(den)));
  r.canonicalize();
  return r;
}

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

}  // namespace orbit_euler
