#include "core/poset.hpp"

#include <queue>

#include "core/error.hpp"
#include "core/lattice.hpp"

namespace orbit_euler {

FinitePoset::FinitePoset(std::vector<BitSet> up) : up_(std::move(up)) {
  const std::size_t n = up_.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (up_[a].universe() != n) throw Error(ErrorCode::kInvalidArgument, "relation row has wrong size");
    if (!up_[a].test(a)) throw Error(ErrorCode::kInvalidArgument, "relation is not reflexive");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (auto b : up_[a].members()) {
      if (b != a && up_[b].test(a))
        throw Error(ErrorCode::kInvalidArgument, "relation is not antisymmetric");
      // a <= b implies up(b) is inside up(a)
      if (!up_[b].is_subset_of(up_[a]))
        throw Error(ErrorCode::kInvalidArgument, "relation is not transitive");
    }
  }
}

FinitePoset FinitePoset::from_relation(const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = leq.size();
  std::vector<BitSet> up(n, BitSet(n));
  for (std::size_t a = 0; a < n; ++a) {
    if (leq[a].size() != n) throw Error(ErrorCode::kInvalidArgument, "relation is not square");
    for (std::size_t b = 0; b < n; ++b)
      if (leq[a][b]) up[a].set(b);
  }
  return FinitePoset(std::move(up));
}

FinitePoset FinitePoset::chain(std::size_t n) {
  std::vector<BitSet> up(n, BitSet(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) up[a].set(b);
  return FinitePoset(std::move(up));
}

FinitePoset FinitePoset::antichain(std::size_t n) {
  std::vector<BitSet> up(n, BitSet(n));
  for (std::size_t a = 0; a < n; ++a) up[a].set(a);
  return FinitePoset(std::move(up));
}

FinitePoset FinitePoset::opposite() const {
  const std::size_t n = size();
  std::vector<BitSet> up(n, BitSet(n));
  for (std::size_t a = 0; a < n; ++a)
    for (auto b : up_[a].members()) up[b].set(a);
  return FinitePoset(std::move(up));
}

std::vector<std::size_t> FinitePoset::linear_extension() const {
  const std::size_t n = size();
  std::vector<std::size_t> below(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (auto b : up_[a].members())
      if (b != a) ++below[b];
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t a = 0; a < n; ++a)
    if (below[a] == 0) ready.push(a);
  std::vector<std::size_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    const auto a = ready.top();
    ready.pop();
    order.push_back(a);
    for (auto b : up_[a].members())
      if (b != a && --below[b] == 0) ready.push(b);
  }
  return order;
}

RationalMatrix zeta_of_poset(const FinitePoset& p) {
  RationalMatrix z(p.size(), p.size());
  for (std::size_t a = 0; a < p.size(); ++a)
    for (auto b : p.up(a).members()) z.at(a, b) = 1;
  return z;
}

WeightVector poset_weighting(const FinitePoset& p) {
  const auto order = p.linear_extension();
  std::vector<Rational> k(p.size());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto a = *it;
    Rational v = 1;
    for (auto b : p.up(a).members())
      if (b != a) v -= k[b];
    k[a] = v;
  }
  return WeightVector{std::move(k), WeightSide::kWeighting, true};
}

WeightVector poset_coweighting(const FinitePoset& p) {
  auto w = poset_weighting(p.opposite());
  w.side = WeightSide::kCoweighting;
  return w;
}

Rational euler_poset(const FinitePoset& p) { return poset_weighting(p).sum(); }

Rational reduced_euler_poset(const FinitePoset& p) { return euler_poset(p) - 1; }

Rational chain_count_euler(const FinitePoset& p) {
  const std::size_t n = p.size();
  const auto order = p.linear_extension();
  // chains[a][j] = number of chains with j+1 elements whose top is a
  std::vector<std::vector<Integer>> chains(n);
  std::vector<Integer> by_length;
  for (auto a : order) {
    std::vector<Integer> c{Integer(1)};
    for (auto b : order) {
      if (b == a) break;
      if (!p.leq(b, a)) continue;
      if (c.size() < chains[b].size() + 1) c.resize(chains[b].size() + 1, Integer(0));
      for (std::size_t j = 0; j < chains[b].size(); ++j) c[j + 1] += chains[b][j];
    }
    if (by_length.size() < c.size()) by_length.resize(c.size(), Integer(0));
    for (std::size_t j = 0; j < c.size(); ++j) by_length[j] += c[j];
    chains[a] = std::move(c);
  }
  Integer chi = 0;
  for (std::size_t j = 0; j < by_length.size(); ++j) chi += (j % 2 == 0) ? by_length[j] : -by_length[j];
  return Rational(chi);
}

FinitePoset subgroup_poset(std::span<const Subgroup> subs) {
  const std::size_t n = subs.size();
  std::vector<BitSet> up(n, BitSet(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (subs[a].is_subgroup_of(subs[b])) up[a].set(b);
  return FinitePoset(std::move(up));
}

PSubgroupPoset nontrivial_p_subgroup_poset(const FiniteGroup& g, std::uint32_t p) {
  auto subs = all_p_subgroups(g, p);
  std::erase_if(subs, [](const Subgroup& h) { return h.order() == 1; });
  auto poset = subgroup_poset(subs);
  return PSubgroupPoset{std::move(subs), std::move(poset)};
}

}  // namespace orbit_euler
