#pragma once

// Brute-force reference computations for the test suites. Nothing here
// includes project headers: groups come in as raw multiplication callbacks,
// fields and polynomials are rebuilt from scratch.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using Mul = std::function<std::uint32_t(std::uint32_t, std::uint32_t)>;

std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

// #{g : g^{|G|_p} = e}, element 0 the identity.
std::uint64_t p_singular_count(std::uint32_t order, const Mul& mul, std::uint32_t p);
// #{g : g^n = e}
std::uint64_t solutions_of_xn(std::uint32_t order, const Mul& mul, std::uint64_t n);
// Conjugacy classes (by conjugating with every element) whose members have
// p-power order.
std::uint64_t p_singular_class_count(std::uint32_t order, const Mul& mul, std::uint32_t p);

// Elements of S_n whose cycle lengths are all powers of p, by walking every
// permutation with std::next_permutation.
std::uint64_t permutations_p_singular(std::uint32_t n, std::uint32_t p);

// Number of H-fixed right cosets Kx, with the cosets listed explicitly.
std::uint64_t fixed_cosets(std::uint32_t order, const Mul& mul, const std::vector<std::uint32_t>& h,
                           const std::vector<std::uint32_t>& k);
// |{x : x^{-1} H x <= K}| and |{x : x H x^{-1} <= K}|.
std::uint64_t transporter_right(std::uint32_t order, const Mul& mul, const std::vector<std::uint32_t>& h,
                                const std::vector<std::uint32_t>& k);
std::uint64_t transporter_left(std::uint32_t order, const Mul& mul, const std::vector<std::uint32_t>& h,
                               const std::vector<std::uint32_t>& k);
// Distinct conjugates x^{-1} K x containing H.
std::uint64_t conjugates_containing(std::uint32_t order, const Mul& mul, const std::vector<std::uint32_t>& h,
                                    const std::vector<std::uint32_t>& k);

// GF(p^e) as F_p[x]/(f) with f the first monic irreducible of degree e in
// lexicographic order of coefficients. Elements are coefficient vectors
// packed as base-p integers.
class PolyField {
 public:
  PolyField(std::uint32_t p, std::uint32_t e);
  std::uint32_t order() const { return q_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const;

 private:
  std::vector<std::uint32_t> unpack(std::uint32_t a) const;
  std::uint32_t pack(const std::vector<std::uint32_t>& v) const;
  std::uint32_t p_, e_, q_;
  std::vector<std::uint32_t> modulus_;  // monic, low degree first, size e+1
};

// Elements of F_q^x of p-power order, q = p0^e, by field arithmetic alone.
std::uint64_t multiplicative_p_singular(std::uint32_t p0, std::uint32_t e, std::uint32_t p);

// Poset given by leq[a][b]; chi = sum of the Moebius function over all
// pairs a <= b.
mpq_class moebius_euler(const std::vector<std::vector<bool>>& leq);
// Random partial order on n points: a random DAG on a random
// permutation, transitively closed.
std::vector<std::vector<bool>> random_poset(std::uint32_t n, double density, std::mt19937_64& rng);

// q-identities evaluated at an integer q (no polynomial arithmetic).
mpz_class bracket_at(std::uint32_t d, const mpz_class& q);
mpz_class twisted_bracket_at(std::uint32_t d, const mpz_class& q);
std::vector<std::vector<std::uint32_t>> compositions(std::uint32_t m);
// lhs - rhs of each displayed identity at q; all zero when it holds.
mpz_class witt_A_first_at(std::uint32_t m, const mpz_class& q);
mpz_class witt_A_second_at(std::uint32_t m, const mpz_class& q);
mpz_class witt_B_first_at(std::uint32_t m, const mpz_class& q);
mpz_class witt_B_second_at(std::uint32_t m, const mpz_class& q);
mpz_class twisted_first_at(std::uint32_t m, bool odd, const mpz_class& q);
mpz_class twisted_second_at(std::uint32_t m, bool odd, const mpz_class& q);

}  // namespace oracle
