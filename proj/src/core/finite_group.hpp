#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/error.hpp"
#include "core/finite_field.hpp"

namespace orbit_euler {

using ElementIndex = std::uint32_t;

// Hard limit on materialized groups: the Cayley table is quadratic in the order.
inline constexpr std::size_t kMaxGroupOrder = 4096;

// Matrix provenance for groups built as GL(n,q) or SL(n,q); element i of the
// group is matrices[i].
struct MatrixRealization {
  std::shared_ptr<const FiniteField> field;
  std::uint32_t n = 0;
  bool special = false;
  std::vector<FqMatrix> matrices;
};

// A finite group materialized as a dense Cayley table over element indices
// 0..order-1. Element 0 is the identity. Immutable after construction.
class FiniteGroup {
 public:
  // `table[a * order + b]` is the index of a*b. Validates the group axioms
  // (associativity exhaustively up to order 64, by 10^4 sampled triples
  // above) and throws InvalidArgument on failure.
  FiniteGroup(std::size_t order, std::vector<std::uint16_t> table, std::string origin,
              std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return order_; }
  ElementIndex identity() const noexcept { return 0; }

  ElementIndex mul(ElementIndex a, ElementIndex b) const noexcept {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  ElementIndex inv(ElementIndex a) const noexcept { return inverse_[a]; }
  // g^{-1} h g
  ElementIndex conjugate(ElementIndex h, ElementIndex g) const noexcept {
    return mul(mul(inverse_[g], h), g);
  }
  ElementIndex power(ElementIndex a, std::uint64_t k) const noexcept;

  // Least k >= 1 with a^k = e.
  std::uint32_t element_order(ElementIndex a) const;

  const std::string& origin() const noexcept { return origin_; }
  // Human-readable element name; falls back to "g<i>".
  std::string label(ElementIndex a) const;

  const MatrixRealization* matrices() const noexcept { return matrices_.get(); }
  void attach_matrices(std::shared_ptr<const MatrixRealization> m) { matrices_ = std::move(m); }

  // Re-runs the axiom checks; throws InvalidArgument on failure.
  void validate() const;

 private:
  std::size_t order_;
  std::vector<std::uint16_t> table_;
  std::vector<ElementIndex> inverse_;
  std::vector<std::uint32_t> orders_;
  std::string origin_;
  std::vector<std::string> labels_;
  std::shared_ptr<const MatrixRealization> matrices_;
};

template <class T>
struct GeneratedGroup {
  FiniteGroup group;
  std::vector<T> elements;  // elements[i] realizes group index i
};

// Closure of `generators` under `compose`. Elements are enumerated breadth
// first from the identity, multiplying on the right by generators in the
// given order, so the result is deterministic.
//
// Throws InvalidArgument for an empty generator list, CapExceeded once the
// closure passes `cap`, NotInvertible if the closure has no identity or some
// element lacks an inverse.
template <class T, class Compose, class Hash = std::hash<T>>
GeneratedGroup<T> generate_group(std::span<const T> generators, Compose compose,
                                 std::size_t cap, std::string origin,
                                 std::function<std::string(const T&)> labeler = {}) {
  if (generators.empty())
    throw Error(ErrorCode::kInvalidArgument, "generate_group needs at least one generator");
  cap = std::min(cap, kMaxGroupOrder);
  auto cap_error = [&] {
    return Error(ErrorCode::kCapExceeded,
                 origin + ": closure exceeds order cap " + std::to_string(cap));
  };

  // Semigroup closure: every finite product of generators.
  std::unordered_map<T, std::size_t, Hash> seen;
  std::vector<T> pool;
  for (const auto& g : generators) {
    if (seen.emplace(g, pool.size()).second) pool.push_back(g);
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (const auto& s : generators) {
      T y = compose(pool[i], s);
      if (seen.emplace(y, pool.size()).second) {
        if (pool.size() + 1 > cap) throw cap_error();
        pool.push_back(std::move(y));
      }
    }
  }

  std::optional<T> identity;
  for (const auto& x : pool) {
    if (compose(x, x) == x) {
      identity = x;
      break;
    }
  }
  if (!identity) throw Error(ErrorCode::kNotInvertible, origin + ": closure has no identity");

  // BFS from the identity with right multiplication by generators.
  const std::size_t gens = generators.size();
  std::unordered_map<T, std::size_t, Hash> index;
  std::vector<T> elements{*identity};
  std::vector<std::size_t> parent{0};
  std::vector<std::size_t> via{0};
  index.emplace(*identity, 0);
  std::vector<std::uint32_t> right;  // right[i * gens + s] = index of e_i * g_s
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t s = 0; s < gens; ++s) {
      T y = compose(elements[i], generators[s]);
      auto [it, inserted] = index.emplace(y, elements.size());
      if (inserted) {
        elements.push_back(std::move(y));
        parent.push_back(i);
        via.push_back(s);
      }
      right.push_back(static_cast<std::uint32_t>(it->second));
    }
  }
  const std::size_t n = elements.size();
  if (n != pool.size())
    throw Error(ErrorCode::kNotInvertible, origin + ": closure is not a group");

  // Column j = column parent(j) followed by right multiplication by via(j).
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i) table[i * n] = static_cast<std::uint16_t>(i);
  for (std::size_t j = 1; j < n; ++j) {
    const auto pj = parent[j];
    const auto s = via[j];
    for (std::size_t i = 0; i < n; ++i)
      table[i * n + j] = static_cast<std::uint16_t>(right[table[i * n + pj] * gens + s]);
  }

  std::vector<std::string> labels;
  if (labeler) {
    labels.reserve(n);
    for (const auto& e : elements) labels.push_back(labeler(e));
  }
  FiniteGroup group(n, std::move(table), std::move(origin), std::move(labels));
  return GeneratedGroup<T>{std::move(group), std::move(elements)};
}

class Subgroup;

struct QuotientGroup {
  FiniteGroup group;
  std::vector<ElementIndex> projection;  // parent index -> coset index
};

// G/N. Cosets are numbered by their smallest parent index, so the identity
// coset is 0. Throws NotNormal if N is not normal in G.
QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& n);

// Componentwise product; (a, b) gets index a * |H| + b.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           std::size_t cap = kMaxGroupOrder);

struct InducedGroup {
  FiniteGroup group;
  std::vector<ElementIndex> embedding;  // local index -> parent index (ascending)
};

// The subgroup H as a standalone group, elements kept in parent order.
InducedGroup induced_group(const FiniteGroup& g, const Subgroup& h);

}  // namespace orbit_euler
