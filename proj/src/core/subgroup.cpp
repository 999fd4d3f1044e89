#include "core/subgroup.hpp"

namespace orbit_euler {

Subgroup::Subgroup(BitSet members) : bits_(std::move(members)), elements_(bits_.members()) {}

Subgroup::Subgroup(const FiniteGroup& g, BitSet members) : Subgroup(std::move(members)) {
  if (bits_.universe() != g.order())
    throw Error(ErrorCode::kInvalidArgument, "subgroup universe does not match parent order");
  if (!bits_.test(0)) throw Error(ErrorCode::kNotClosed, "subset misses the identity");
  for (auto a : elements_) {
    if (!bits_.test(g.inv(a))) throw Error(ErrorCode::kNotClosed, "subset not closed under inverse");
    for (auto b : elements_)
      if (!bits_.test(g.mul(a, b)))
        throw Error(ErrorCode::kNotClosed, "subset not closed under multiplication");
  }
  if (g.order() % elements_.size() != 0)
    throw Error(ErrorCode::kInconsistent, "subgroup order does not divide group order");
}

Subgroup Subgroup::trusted(BitSet members) { return Subgroup(std::move(members)); }

Subgroup trivial_subgroup(const FiniteGroup& g) {
  BitSet bits(g.order());
  bits.set(0);
  return Subgroup::trusted(std::move(bits));
}

Subgroup whole_group(const FiniteGroup& g) {
  BitSet bits(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) bits.set(i);
  return Subgroup::trusted(std::move(bits));
}

namespace {

// BFS closure of `seed` (which must contain the identity) under right
// multiplication by `generators`.
Subgroup close_under(const FiniteGroup& g, BitSet bits, std::vector<ElementIndex> frontier,
                     std::span<const ElementIndex> generators) {
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    const auto x = frontier[i];
    for (auto s : generators) {
      const auto y = g.mul(x, s);
      if (!bits.test(y)) {
        bits.set(y);
        frontier.push_back(y);
      }
    }
  }
  return Subgroup::trusted(std::move(bits));
}

}  // namespace

Subgroup generate_subgroup(const FiniteGroup& g, std::span<const ElementIndex> generators) {
  BitSet bits(g.order());
  bits.set(0);
  return close_under(g, std::move(bits), {0}, generators);
}

Subgroup join(const FiniteGroup& g, const Subgroup& h, ElementIndex x) {
  if (h.contains(x)) return h;
  // Generated by H's elements together with x; seeding with H means only
  // products that leave H need exploring.
  std::vector<ElementIndex> gens = h.elements();
  gens.push_back(x);
  return close_under(g, h.bits(), h.elements(), gens);
}

Subgroup join(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  if (k.is_subgroup_of(h)) return h;
  if (h.is_subgroup_of(k)) return k;
  std::vector<ElementIndex> gens = h.elements();
  gens.insert(gens.end(), k.elements().begin(), k.elements().end());
  return close_under(g, h.bits(), h.elements(), gens);
}

Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, ElementIndex x) {
  BitSet bits(g.order());
  for (auto e : h.elements()) bits.set(g.conjugate(e, x));
  return Subgroup::trusted(std::move(bits));
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  BitSet bits = a.bits();
  bits &= b.bits();
  return Subgroup::trusted(std::move(bits));
}

}  // namespace orbit_euler
