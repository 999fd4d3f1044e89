#include "core/lattice.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "core/arith.hpp"

namespace orbit_euler {
namespace {

void require_prime(std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.bits() < b.bits();
}

bool conjugate_is_subset(const FiniteGroup& g, const Subgroup& h, ElementIndex x,
                         const Subgroup& k) {
  for (auto e : h.elements())
    if (!k.contains(g.conjugate(e, x))) return false;
  return true;
}

}  // namespace

Subgroup normalizer(const FiniteGroup& g, const Subgroup& ambient, const Subgroup& h) {
  BitSet bits(g.order());
  for (auto x : ambient.elements())
    if (conjugate_is_subset(g, h, x, h)) bits.set(x);
  return Subgroup::trusted(std::move(bits));
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  return normalizer(g, whole_group(g), h);
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (ElementIndex x = 0; x < g.order(); ++x)
    if (!conjugate_is_subset(g, h, x, h)) return false;
  return true;
}

Subgroup sylow_p(const FiniteGroup& g, const Subgroup& ambient, std::uint32_t p) {
  require_prime(p);
  const auto target = p_part(ambient.order(), p);
  auto h = trivial_subgroup(g);
  while (h.order() < target) {
    const auto n = normalizer(g, ambient, h);
    bool grown = false;
    for (auto x : n.elements()) {
      if (!h.contains(x) && h.contains(g.power(x, p))) {
        h = join(g, h, x);
        grown = true;
        break;
      }
    }
    if (!grown) throw Error(ErrorCode::kInconsistent, "no element of order p in N(H)/H");
  }
  if (h.order() != target) throw Error(ErrorCode::kInconsistent, "Sylow construction overshot");
  return h;
}

Subgroup sylow_p(const FiniteGroup& g, std::uint32_t p) { return sylow_p(g, whole_group(g), p); }

std::vector<Subgroup> subgroups_of_p_group(const FiniteGroup& g, const Subgroup& p_group) {
  std::vector<Subgroup> cyclics;
  {
    std::unordered_set<BitSet, BitSetHash> seen;
    for (auto x : p_group.elements()) {
      const ElementIndex gen[] = {x};
      auto c = generate_subgroup(g, gen);
      if (seen.insert(c.bits()).second) cyclics.push_back(std::move(c));
    }
  }
  std::vector<Subgroup> out{trivial_subgroup(g)};
  std::unordered_set<BitSet, BitSetHash> seen{out.front().bits()};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& c : cyclics) {
      if (c.is_subgroup_of(out[i])) continue;
      auto j = join(g, out[i], c);
      if (seen.insert(j.bits()).second) out.push_back(std::move(j));
    }
  }
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

std::vector<Subgroup> all_p_subgroups(const FiniteGroup& g, std::uint32_t p) {
  require_prime(p);
  const auto sylow = sylow_p(g, p);
  std::unordered_set<BitSet, BitSetHash> seen;
  std::vector<Subgroup> out;
  for (const auto& s : subgroups_of_p_group(g, sylow)) {
    for (ElementIndex x = 0; x < g.order(); ++x) {
      auto c = conjugate(g, s, x);
      if (seen.insert(c.bits()).second) out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

std::uint64_t transporter_count(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  std::uint64_t count = 0;
  for (ElementIndex x = 0; x < g.order(); ++x)
    if (conjugate_is_subset(g, h, x, k)) ++count;
  return count;
}

Subgroup o_p(const FiniteGroup& g, const Subgroup& ambient, std::uint32_t p) {
  const auto sylow = sylow_p(g, ambient, p);
  BitSet bits = sylow.bits();
  for (auto x : ambient.elements()) {
    bits &= conjugate(g, sylow, x).bits();
    if (bits.count() == 1) break;
  }
  return Subgroup::trusted(std::move(bits));
}

Subgroup o_p(const FiniteGroup& g, std::uint32_t p) { return o_p(g, whole_group(g), p); }

bool is_p_radical(const FiniteGroup& g, const Subgroup& h, std::uint32_t p) {
  require_prime(p);
  if (!is_power_of(h.order(), p))
    throw Error(ErrorCode::kNotPSubgroup, "subgroup of order " + std::to_string(h.order()) +
                                              " is not a " + std::to_string(p) + "-subgroup");
  return o_p(g, normalizer(g, h), p) == h;
}

std::vector<Subgroup> cyclic_p_subgroups(const FiniteGroup& g, std::uint32_t p) {
  require_prime(p);
  std::unordered_set<BitSet, BitSetHash> seen;
  std::vector<Subgroup> out;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    if (!is_power_of(g.element_order(x), p)) continue;
    const ElementIndex gen[] = {x};
    auto c = generate_subgroup(g, gen);
    if (seen.insert(c.bits()).second) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

SubgroupClass conjugacy_class(const FiniteGroup& g, const Subgroup& h) {
  std::unordered_set<BitSet, BitSetHash> seen;
  std::vector<Subgroup> members;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    auto c = conjugate(g, h, x);
    if (seen.insert(c.bits()).second) members.push_back(std::move(c));
  }
  std::sort(members.begin(), members.end(),
            [](const Subgroup& a, const Subgroup& b) { return a.bits() < b.bits(); });
  auto rep = members.front();
  return SubgroupClass{std::move(rep), std::move(members)};
}

std::vector<SubgroupClass> conjugacy_classes_of_subgroups(const FiniteGroup& g,
                                                          std::span<const Subgroup> subs) {
  std::unordered_map<BitSet, bool, BitSetHash> visited;
  for (const auto& s : subs) visited.emplace(s.bits(), false);

  std::vector<SubgroupClass> classes;
  for (const auto& s : subs) {
    if (visited.at(s.bits())) continue;
    auto cls = conjugacy_class(g, s);
    for (const auto& m : cls.members) {
      auto it = visited.find(m.bits());
      if (it == visited.end())
        throw Error(ErrorCode::kNotClosed, "subgroup family is not closed under conjugation");
      it->second = true;
    }
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    return subgroup_less(a.representative, b.representative);
  });
  return classes;
}

std::vector<SubgroupClass> p_radical_classes(const FiniteGroup& g, std::uint32_t p) {
  const auto subs = all_p_subgroups(g, p);
  auto classes = conjugacy_classes_of_subgroups(g, subs);
  std::erase_if(classes, [&](const SubgroupClass& c) { return !is_p_radical(g, c.representative, p); });
  return classes;
}

namespace {

// Greedy generating set: each new generator is the least element outside
// the subgroup generated so far.
std::vector<ElementIndex> greedy_generators(const FiniteGroup& g) {
  std::vector<ElementIndex> gens;
  std::vector<bool> in(g.order(), false);
  in[0] = true;
  std::size_t size = 1;
  for (ElementIndex x = 1; x < g.order() && size < g.order(); ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    std::fill(in.begin(), in.end(), false);
    std::vector<ElementIndex> queue{0};
    in[0] = true;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (auto s : gens) {
        const auto y = g.mul(queue[i], s);
        if (!in[y]) {
          in[y] = true;
          queue.push_back(y);
        }
      }
    size = queue.size();
  }
  return gens;
}

}  // namespace

std::vector<std::vector<ElementIndex>> element_conjugacy_classes(const FiniteGroup& g) {
  const auto gens = greedy_generators(g);
  std::vector<bool> seen(g.order(), false);
  std::vector<std::vector<ElementIndex>> classes;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<ElementIndex> cls{x};
    seen[x] = true;
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (auto s : gens) {
        const auto c = g.conjugate(cls[i], s);
        if (!seen[c]) {
          seen[c] = true;
          cls.push_back(c);
        }
      }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace orbit_euler
