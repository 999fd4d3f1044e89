#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "core/finite_group.hpp"

namespace orbit_euler {

// Order cap in effect: kMaxGroupOrder unless ORBIT_EULER_CAP holds a smaller
// positive integer. Values above the hard limit are clamped.
std::size_t default_order_cap();

// Builds a group from a spec string
//   S<n> | A<n> | C<n> | D<2n> | GL(<n>,<q>) | SL(<n>,<q>) | <spec>x<spec>
// with `x` left-associative and no whitespace. Construction is
// deterministic. GL/SL results carry a MatrixRealization.
// Throws ParseError on malformed specs, CapExceeded above `cap`.
FiniteGroup catalog_group(std::string_view spec, std::size_t cap = default_order_cap());

// Order implied by a spec, computed without building the group.
std::uint64_t catalog_order(std::string_view spec);

// Named generators used for GL(n,q) / SL(n,q): elementary transvections at
// the simple root positions (both signs) for an additive basis of F_q, plus
// diag(w, 1, ..., 1) with w primitive for GL.
std::vector<FqMatrix> linear_group_generators(const FiniteField& field, std::uint32_t n,
                                              bool special);

// The fixed sweep list used by `verify` and the acceptance suite. Every
// entry parses; orders range up to a few hundred.
const std::vector<std::string>& standard_catalog();

}  // namespace orbit_euler
