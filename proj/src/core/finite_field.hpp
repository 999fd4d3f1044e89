#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace orbit_euler {

// F_q for q <= 64, table driven. A field symbol is an integer in [0, q) whose
// base-p digits are the coefficients (constant first) of a polynomial in the
// adjoined root x, reduced modulo the defining polynomial. Symbol 0 is zero,
// symbol 1 is one. Prime fields use arithmetic mod p.
//
// Defining polynomials for q = p^e with e > 1 (Conway polynomials):
//   4: x^2+x+1        8: x^3+x+1        16: x^4+x+1      32: x^5+x^2+1
//   64: x^6+x^4+x^3+x+1                 9: x^2+2x+2      27: x^3+2x+1
//   25: x^2+4x+2      49: x^2+6x+3
class FiniteField {
 public:
  static constexpr std::uint32_t kMaxOrder = 64;

  // Throws InvalidArgument unless q is a prime power <= 64.
  explicit FiniteField(std::uint32_t q);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return e_; }
  std::uint32_t order() const noexcept { return q_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return add_[a * q_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept { return mul_[a * q_ + b]; }
  std::uint32_t neg(std::uint32_t a) const noexcept { return neg_[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return add(a, neg(b)); }
  // a must be nonzero.
  std::uint32_t inv(std::uint32_t a) const noexcept { return inv_[a]; }
  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const noexcept;

  // Smallest symbol generating the multiplicative group.
  std::uint32_t primitive_element() const noexcept { return primitive_; }

  // Monic defining polynomial, constant term first; {0, 1} for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  std::string symbol_name(std::uint32_t a) const;

 private:
  std::uint32_t p_ = 0;
  std::uint32_t e_ = 0;
  std::uint32_t q_ = 0;
  std::uint32_t primitive_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> neg_;
  std::vector<std::uint8_t> inv_;
};

// Square matrix over a FiniteField, stored row-major as field symbols.
struct FqMatrix {
  std::uint32_t n = 0;
  std::vector<std::uint8_t> entries;

  std::uint32_t at(std::uint32_t r, std::uint32_t c) const noexcept {
    return entries[r * n + c];
  }

  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;
};

struct FqMatrixHash {
  std::size_t operator()(const FqMatrix& m) const noexcept;
};

FqMatrix identity_matrix(std::uint32_t n);
FqMatrix multiply(const FiniteField& field, const FqMatrix& a, const FqMatrix& b);
std::uint32_t determinant(const FiniteField& field, const FqMatrix& m);
std::string to_string(const FiniteField& field, const FqMatrix& m);

}  // namespace orbit_euler
