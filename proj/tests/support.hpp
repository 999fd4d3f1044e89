#pragma once

#include <cstdint>
#include <vector>

#include "core/finite_group.hpp"
#include "core/subgroup.hpp"
#include "oracles.hpp"

namespace test_support {

inline oracle::Mul mul_of(const orbit_euler::FiniteGroup& g) {
  return [&g](std::uint32_t a, std::uint32_t b) { return g.mul(a, b); };
}

inline std::uint32_t order_of(const orbit_euler::FiniteGroup& g) { return static_cast<std::uint32_t>(g.order()); }

inline std::vector<std::uint32_t> elements(const orbit_euler::Subgroup& h) {
  return {h.elements().begin(), h.elements().end()};
}

template <class T>
std::vector<std::vector<std::uint64_t>> rows(std::initializer_list<std::initializer_list<T>> r) {
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& row : r) out.emplace_back(row.begin(), row.end());
  return out;
}

}  // namespace test_support
