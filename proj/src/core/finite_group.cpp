#include "core/finite_group.hpp"

#include <random>

#include "core/subgroup.hpp"

namespace orbit_euler {

FiniteGroup::FiniteGroup(std::size_t order, std::vector<std::uint16_t> table,
                         std::string origin, std::vector<std::string> labels)
    : order_(order),
      table_(std::move(table)),
      origin_(std::move(origin)),
      labels_(std::move(labels)) {
  if (order_ == 0 || order_ > kMaxGroupOrder)
    throw Error(ErrorCode::kCapExceeded, origin_ + ": order out of range");
  if (table_.size() != order_ * order_)
    throw Error(ErrorCode::kInvalidArgument, origin_ + ": table size mismatch");
  if (!labels_.empty() && labels_.size() != order_)
    throw Error(ErrorCode::kInvalidArgument, origin_ + ": label count mismatch");

  inverse_.assign(order_, 0);
  for (std::size_t a = 0; a < order_; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < order_; ++b) {
      if (table_[a * order_ + b] == 0) {
        inverse_[a] = static_cast<ElementIndex>(b);
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorCode::kInvalidArgument, origin_ + ": element without inverse");
  }

  std::vector<std::size_t> divisors;
  for (std::size_t d = 1; d <= order_; ++d)
    if (order_ % d == 0) divisors.push_back(d);
  orders_.assign(order_, 0);
  for (std::size_t a = 0; a < order_; ++a) {
    for (auto d : divisors)
      if (power(static_cast<ElementIndex>(a), d) == 0) {
        orders_[a] = static_cast<std::uint32_t>(d);
        break;
      }
    if (orders_[a] == 0) throw Error(ErrorCode::kInvalidArgument, origin_ + ": element order does not divide |G|");
  }
  validate();
}

void FiniteGroup::validate() const {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::kInvalidArgument, origin_ + ": " + why);
  };
  const auto n = order_;
  for (std::size_t a = 0; a < n; ++a) {
    if (mul(0, static_cast<ElementIndex>(a)) != a || mul(static_cast<ElementIndex>(a), 0) != a)
      fail("element 0 is not neutral");
  }
  std::vector<std::uint8_t> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      auto& s = seen[table_[r * n + c]];
      if (s) fail("row is not a permutation");
      s = 1;
    }
  }
  std::vector<bool> column_seen(n * n, false);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t bit = c * n + table_[r * n + c];
      if (column_seen[bit]) fail("column is not a permutation");
      column_seen[bit] = true;
    }
  for (std::size_t a = 0; a < n; ++a) {
    const auto ai = static_cast<ElementIndex>(a);
    if (mul(ai, inv(ai)) != 0 || mul(inv(ai), ai) != 0) fail("inverse is not two-sided");
  }
  auto assoc = [&](ElementIndex a, ElementIndex b, ElementIndex c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("multiplication is not associative");
  };
  if (n <= 64) {
    for (ElementIndex a = 0; a < n; ++a)
      for (ElementIndex b = 0; b < n; ++b)
        for (ElementIndex c = 0; c < n; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed ^ n);
    std::uniform_int_distribution<ElementIndex> pick(0, static_cast<ElementIndex>(n - 1));
    for (int i = 0; i < 10000; ++i) assoc(pick(rng), pick(rng), pick(rng));
  }
}

ElementIndex FiniteGroup::power(ElementIndex a, std::uint64_t k) const noexcept {
  ElementIndex result = 0;
  ElementIndex base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::uint32_t FiniteGroup::element_order(ElementIndex a) const {
  if (a >= order_) throw Error(ErrorCode::kInvalidArgument, "element index out of range");
  return orders_[a];
}

std::string FiniteGroup::label(ElementIndex a) const {
  if (a < labels_.size()) return labels_[a];
  return "g" + std::to_string(a);
}

QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& n) {
  const auto& members = n.elements();
  for (ElementIndex x = 0; x < g.order(); ++x) {
    for (auto h : members) {
      if (!n.contains(g.conjugate(h, x)))
        throw Error(ErrorCode::kNotNormal, g.origin() + ": subgroup is not normal");
    }
  }

  // Left and right cosets coincide; number them by smallest member.
  constexpr ElementIndex kUnset = ~ElementIndex{0};
  std::vector<ElementIndex> coset(g.order(), kUnset);
  std::vector<ElementIndex> reps;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    if (coset[x] != kUnset) continue;
    const auto id = static_cast<ElementIndex>(reps.size());
    reps.push_back(x);
    for (auto h : members) coset[g.mul(h, x)] = id;
  }

  const std::size_t q = reps.size();
  std::vector<std::uint16_t> table(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      table[i * q + j] = static_cast<std::uint16_t>(coset[g.mul(reps[i], reps[j])]);

  std::vector<std::string> labels;
  labels.reserve(q);
  for (auto r : reps) labels.push_back(g.label(r) + "N");
  FiniteGroup quotient(q, std::move(table), g.origin() + "/N", std::move(labels));

  for (ElementIndex a = 0; a < g.order(); ++a)
    for (ElementIndex b = 0; b < g.order(); ++b)
      if (coset[g.mul(a, b)] != quotient.mul(coset[a], coset[b]))
        throw Error(ErrorCode::kInconsistent, "projection is not a homomorphism");

  return QuotientGroup{std::move(quotient), std::move(coset)};
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::size_t cap) {
  const std::size_t n = g.order() * h.order();
  if (n > std::min(cap, kMaxGroupOrder))
    throw Error(ErrorCode::kCapExceeded,
                g.origin() + "x" + h.origin() + ": order " + std::to_string(n) + " exceeds cap");
  const std::size_t m = h.order();
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto ag = static_cast<ElementIndex>(a / m);
    const auto ah = static_cast<ElementIndex>(a % m);
    for (std::size_t b = 0; b < n; ++b) {
      const auto bg = static_cast<ElementIndex>(b / m);
      const auto bh = static_cast<ElementIndex>(b % m);
      table[a * n + b] = static_cast<std::uint16_t>(g.mul(ag, bg) * m + h.mul(ah, bh));
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t a = 0; a < n; ++a)
    labels.push_back("(" + g.label(static_cast<ElementIndex>(a / m)) + "," +
                     h.label(static_cast<ElementIndex>(a % m)) + ")");
  return FiniteGroup(n, std::move(table), g.origin() + "x" + h.origin(), std::move(labels));
}

InducedGroup induced_group(const FiniteGroup& g, const Subgroup& h) {
  const auto& members = h.elements();
  const std::size_t n = members.size();
  std::vector<ElementIndex> local(g.order(), 0);
  for (std::size_t i = 0; i < n; ++i) local[members[i]] = static_cast<ElementIndex>(i);
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i * n + j] = static_cast<std::uint16_t>(local[g.mul(members[i], members[j])]);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (auto m : members) labels.push_back(g.label(m));
  FiniteGroup sub(n, std::move(table), g.origin() + "<" + std::to_string(n) + ">", std::move(labels));
  return InducedGroup{std::move(sub), members};
}

}  // namespace orbit_euler
