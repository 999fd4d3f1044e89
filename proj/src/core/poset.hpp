#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "core/bitset.hpp"
#include "core/linear.hpp"
#include "core/subgroup.hpp"

namespace orbit_euler {

// Finite partial order on objects 0..size-1. Row a of the relation is the
// up-set {b : a <= b}. Validated (reflexive, antisymmetric, transitive) on
// construction; throws InvalidArgument otherwise.
class FinitePoset {
 public:
  FinitePoset() = default;
  explicit FinitePoset(std::vector<BitSet> up);
  static FinitePoset from_relation(const std::vector<std::vector<bool>>& leq);
  static FinitePoset chain(std::size_t n);
  static FinitePoset antichain(std::size_t n);

  std::size_t size() const noexcept { return up_.size(); }
  bool empty() const noexcept { return up_.empty(); }
  bool leq(std::size_t a, std::size_t b) const noexcept { return up_[a].test(b); }
  const BitSet& up(std::size_t a) const noexcept { return up_[a]; }

  FinitePoset opposite() const;
  // Objects listed so that a <= b implies a comes first. Ties go to the
  // lowest index.
  std::vector<std::size_t> linear_extension() const;

 private:
  std::vector<BitSet> up_;
};

// zeta[a][b] = 1 iff a <= b.
RationalMatrix zeta_of_poset(const FinitePoset& p);

// Unique weighting of a poset zeta, by back-substitution along a linear
// extension: k_a = 1 - sum_{b > a} k_b.
WeightVector poset_weighting(const FinitePoset& p);
WeightVector poset_coweighting(const FinitePoset& p);

// chi(P); 0 for the empty poset.
Rational euler_poset(const FinitePoset& p);
// chi(P) - 1
Rational reduced_euler_poset(const FinitePoset& p);

// Alternating count of nonempty chains a_0 < ... < a_k in P, tallied by
// length. Independent of the weighting route.
Rational chain_count_euler(const FinitePoset& p);

// Inclusion order on the given subgroups (indexed as given).
FinitePoset subgroup_poset(std::span<const Subgroup> subs);

// Nontrivial p-subgroups of g under inclusion, in all_p_subgroups order.
// Empty when p does not divide |g|.
struct PSubgroupPoset {
  std::vector<Subgroup> subgroups;
  FinitePoset poset;
};
PSubgroupPoset nontrivial_p_subgroup_poset(const FiniteGroup& g, std::uint32_t p);

}  // namespace orbit_euler
