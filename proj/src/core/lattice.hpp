#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "core/subgroup.hpp"

namespace orbit_euler {

// Subgroup-lattice queries over a Cayley-table group. Functions taking an
// `ambient` subgroup A work inside A (e.g. a Sylow subgroup of A); the
// overloads without it use A = G. Output orders are deterministic.

// Built greedily: repeatedly adjoin the lowest-index element of N_A(H) \ H
// whose coset has order p, until |H| = |A|_p. Trivial when p does not divide |A|.
Subgroup sylow_p(const FiniteGroup& g, std::uint32_t p);
Subgroup sylow_p(const FiniteGroup& g, const Subgroup& ambient, std::uint32_t p);

// All subgroups of p-power order, trivial included, sorted by
// (order ascending, BitSet order).
std::vector<Subgroup> all_p_subgroups(const FiniteGroup& g, std::uint32_t p);

// Every subgroup of a p-group P (P given as a subgroup of g), by joining
// cyclic subgroups upward from the trivial group.
std::vector<Subgroup> subgroups_of_p_group(const FiniteGroup& g, const Subgroup& p_group);

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& ambient, const Subgroup& h);

bool is_normal(const FiniteGroup& g, const Subgroup& h);

// |{x in G : H^x <= K}|
std::uint64_t transporter_count(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

// Intersection of the Sylow p-subgroups.
Subgroup o_p(const FiniteGroup& g, std::uint32_t p);
Subgroup o_p(const FiniteGroup& g, const Subgroup& ambient, std::uint32_t p);

// H == O_p(N_G(H)). Throws NotPSubgroup if |H| is not a power of p.
bool is_p_radical(const FiniteGroup& g, const Subgroup& h, std::uint32_t p);

// Cyclic subgroups of p-power order, trivial included, sorted as above.
std::vector<Subgroup> cyclic_p_subgroups(const FiniteGroup& g, std::uint32_t p);

// Partition of a conjugation-closed family into classes, sorted by
// (order ascending, representative BitSet order). Throws NotClosed if some
// conjugate leaves the family.
std::vector<SubgroupClass> conjugacy_classes_of_subgroups(const FiniteGroup& g,
                                                          std::span<const Subgroup> subs);

// Conjugacy class of a single subgroup.
SubgroupClass conjugacy_class(const FiniteGroup& g, const Subgroup& h);

std::vector<SubgroupClass> p_radical_classes(const FiniteGroup& g, std::uint32_t p);

// Conjugacy classes of elements, each sorted, ordered by smallest member.
std::vector<std::vector<ElementIndex>> element_conjugacy_classes(const FiniteGroup& g);

}  // namespace orbit_euler
