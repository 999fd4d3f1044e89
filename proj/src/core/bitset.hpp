#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace orbit_euler {

// Fixed-universe bitset. Used for subgroup membership (universe = parent
// group order) and for poset relation rows.
class BitSet {
 public:
  BitSet() = default;
  explicit BitSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return universe_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::size_t count() const noexcept;
  bool none() const noexcept;
  bool is_subset_of(const BitSet& other) const noexcept;

  BitSet& operator&=(const BitSet& other) noexcept;
  BitSet& operator|=(const BitSet& other) noexcept;

  // Indices of set bits, ascending.
  std::vector<std::uint32_t> members() const;

  std::size_t hash() const noexcept;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend bool operator==(const BitSet& a, const BitSet& b) noexcept {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  // Canonical order: the set holding the lowest element of the symmetric
  // difference sorts first. For subgroups this is "lowest enumeration order".
  friend std::strong_ordering operator<=>(const BitSet& a, const BitSet& b) noexcept;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitSetHash {
  std::size_t operator()(const BitSet& b) const noexcept { return b.hash(); }
};

}  // namespace orbit_euler
