#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace orbit_euler {

// Bijection of {0..n-1}. Composition `then(a, b)` applies a first, then b,
// which matches the right-action convention used for group tables.
class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidArgument if images is not a bijection.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::uint32_t n);
  // Cycle on the listed points; other points fixed.
  static Permutation cycle(std::uint32_t n, const std::vector<std::uint32_t>& points);

  std::uint32_t degree() const noexcept { return static_cast<std::uint32_t>(images_.size()); }
  std::uint32_t operator[](std::uint32_t i) const noexcept { return images_[i]; }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  // Sorted cycle lengths (fixed points included).
  std::vector<std::uint32_t> cycle_type() const;
  std::uint64_t order() const;
  std::string to_cycle_string() const;

  friend Permutation then(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

Permutation then(const Permutation& a, const Permutation& b);
Permutation power(const Permutation& a, std::uint64_t k);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

// Counts elements of S_n with g^{n!_p} = e by walking all n! permutations
// directly (no Cayley table, so n up to ~10 is practical). Both the power
// test and the cycle-type order test are evaluated and must agree.
std::uint64_t count_p_singular_permutations(std::uint32_t n, std::uint32_t p);

}  // namespace orbit_euler
