#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "core/polynomial.hpp"

namespace orbit_euler {

using Composition = std::vector<std::uint32_t>;

// [d](q) = q^{d-1} + ... + q + 1
IntPolynomial q_bracket(std::uint32_t d);
// [d]((-1)^d q)
IntPolynomial twisted_bracket(std::uint32_t d);
// [m]!(q) = [1](q) [2](q) ... [m](q)
IntPolynomial q_factorial(std::uint32_t m);
// [m]!/([m_1]! ... [m_k]!), m = sum of parts.
IntPolynomial gaussian_multinomial(const Composition& parts);

// All 2^{m-1} ordered partitions of m, lexicographic.
std::vector<Composition> ordered_partitions(std::uint32_t m);
// Partitions of n as weakly decreasing sequences, in reverse lexicographic
// order starting from (n).
std::vector<Composition> integer_partitions(std::uint32_t n);

struct IdentityCheck {
  std::string name;
  IntPolynomial lhs;
  IntPolynomial rhs;
  bool informational = false;  // reported but not judged
  bool holds() const { return lhs == rhs; }
};

struct IdentityReport {
  std::string family;
  std::uint32_t m = 0;
  std::vector<IdentityCheck> checks;
  bool passed() const;
};

// Type A_{m-1}: the two Gaussian-multinomial identities, their q = 1
// specializations, and Witt's identity for the symmetric group.
IdentityReport verify_witt_A(std::uint32_t m);
// Type B_{m-1}, m >= 2. The second exponent is
// sum_{i<k} C(m_i,2) + (m_k - 1)^2.
IdentityReport verify_witt_B(std::uint32_t m);

enum class TwistedParity { kEven, kOdd };  // size 2m or 2m+1
enum class TwistedReading {
  // Second sum over d = s+1 .. top with s = 2m_k (even) or 2m_k+1 (odd);
  // exponents 2 sum C(m_i,2) and 2 sum_{i<k} C(m_i,2) + C(s,2).
  kCorrected,
  // Products and exponents exactly as displayed: d = 2m_k+2 .. top and
  // sum C(m_i,2) in both sums.
  kLiteral,
};
IdentityReport verify_twisted_A(std::uint32_t m, TwistedParity parity,
                                TwistedReading reading = TwistedReading::kCorrected);

// n! [x^n] exp(x + x^p/p + x^{p^2}/p^2 + ...)
Integer egf_p_singular_symmetric(std::uint32_t n, std::uint32_t p);

// (1/n!) sum_{lambda |- n} T(lambda) prod_{b in lambda} (q^b - 1)_p.
// Throws PDividesQ when p | q.
Integer cross_char_class_count(std::uint32_t n, std::uint64_t q, std::uint32_t p);

}  // namespace orbit_euler
