#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "core/bitset.hpp"
#include "core/finite_group.hpp"

namespace orbit_euler {

// A subgroup of a parent FiniteGroup, held as a membership bitset over the
// parent's element indices. The parent is not stored: every operation takes
// it explicitly, and passing a different group is a logic error.
class Subgroup {
 public:
  // Checks identity membership and closure; throws NotClosed otherwise.
  Subgroup(const FiniteGroup& g, BitSet members);

  // Skips the closure check. For sets that are subgroups by construction.
  static Subgroup trusted(BitSet members);

  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(ElementIndex x) const noexcept { return bits_.test(x); }
  const BitSet& bits() const noexcept { return bits_; }
  const std::vector<ElementIndex>& elements() const noexcept { return elements_; }

  bool is_subgroup_of(const Subgroup& other) const noexcept {
    return bits_.is_subset_of(other.bits_);
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) noexcept {
    return a.bits_ == b.bits_;
  }

 private:
  explicit Subgroup(BitSet members);

  BitSet bits_;
  std::vector<ElementIndex> elements_;
};

struct SubgroupHash {
  std::size_t operator()(const Subgroup& h) const noexcept { return h.bits().hash(); }
};

// A G-conjugacy class of subgroups.
struct SubgroupClass {
  Subgroup representative;        // lowest member in BitSet order
  std::vector<Subgroup> members;  // all conjugates, sorted by BitSet order
  std::size_t length() const noexcept { return members.size(); }
};

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);

// Smallest subgroup containing the given elements.
Subgroup generate_subgroup(const FiniteGroup& g, std::span<const ElementIndex> generators);
// <H, x>
Subgroup join(const FiniteGroup& g, const Subgroup& h, ElementIndex x);
Subgroup join(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

// H^x = x^{-1} H x
Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, ElementIndex x);

Subgroup intersection(const Subgroup& a, const Subgroup& b);

}  // namespace orbit_euler
