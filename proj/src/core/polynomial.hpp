#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "core/rational.hpp"

namespace orbit_euler {

// Polynomial in q with arbitrary-precision integer coefficients, constant
// term first. Trailing zeros are always stripped, so the zero polynomial
// has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(long c);  // NOLINT: constants convert implicitly
  explicit IntPolynomial(std::vector<Integer> coefficients);

  static IntPolynomial monomial(const Integer& c, std::size_t degree);
  static IntPolynomial q() { return monomial(1, 1); }

  bool is_zero() const noexcept { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  Integer coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
  const std::vector<Integer>& coefficients() const noexcept { return c_; }

  Integer evaluate(const Integer& x) const;

  // p(-q)
  IntPolynomial negate_variable() const;
  // p(q^k)
  IntPolynomial substitute_power(std::size_t k) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator-(IntPolynomial a);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  // "q^2+q+1"; "0" for zero.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> c_;
};

struct PolynomialDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
};
// Division by a polynomial with leading coefficient +-1 (all divisors used
// here are products of q-brackets).
PolynomialDivision divide(const IntPolynomial& a, const IntPolynomial& b);
// Throws NonExactDivision when the remainder is nonzero.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace orbit_euler
