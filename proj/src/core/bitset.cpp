#include "core/bitset.hpp"

namespace orbit_euler {

std::size_t BitSet::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool BitSet::none() const noexcept {
  for (auto w : words_)
    if (w) return false;
  return true;
}

bool BitSet::is_subset_of(const BitSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

BitSet& BitSet::operator&=(const BitSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitSet& BitSet::operator|=(const BitSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

std::vector<std::uint32_t> BitSet::members() const {
  std::vector<std::uint32_t> out;
  out.reserve(count());
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    auto w = words_[wi];
    while (w) {
      const int bit = std::countr_zero(w);
      out.push_back(static_cast<std::uint32_t>(wi * 64 + static_cast<std::size_t>(bit)));
      w &= w - 1;
    }
  }
  return out;
}

std::size_t BitSet::hash() const noexcept {
  // FNV-1a over the words.
  std::uint64_t h = 1469598103934665603ull;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ universe_);
}

std::strong_ordering operator<=>(const BitSet& a, const BitSet& b) noexcept {
  if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    const auto diff = a.words_[i] ^ b.words_[i];
    if (diff == 0) continue;
    const auto lowest = diff & (~diff + 1);
    return (a.words_[i] & lowest) ? std::strong_ordering::less
                                  : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace orbit_euler
