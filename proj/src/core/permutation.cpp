#include "core/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "core/arith.hpp"
#include "core/error.hpp"

namespace orbit_euler {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v])
      throw Error(ErrorCode::kInvalidArgument, "images do not form a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::uint32_t n) {
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images));
}

Permutation Permutation::cycle(std::uint32_t n, const std::vector<std::uint32_t>& points) {
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 0u);
  for (std::size_t i = 0; i < points.size(); ++i)
    images[points[i]] = points[(i + 1) % points.size()];
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  Permutation out;
  out.images_ = std::move(inv);
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<std::uint32_t> Permutation::cycle_type() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<std::uint32_t> lengths;
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint32_t len = 0;
    for (auto j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::uint64_t Permutation::order() const {
  std::uint64_t o = 1;
  for (auto len : cycle_type()) o = std::lcm(o, static_cast<std::uint64_t>(len));
  return o;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    os << '(';
    for (auto j = i; !seen[j]; j = images_[j]) {
      if (j != i) os << ' ';
      os << j;
      seen[j] = true;
    }
    os << ')';
  }
  const auto s = os.str();
  return s.empty() ? "()" : s;
}

Permutation then(const Permutation& a, const Permutation& b) {
  Permutation out;
  out.images_.resize(a.images_.size());
  for (std::size_t i = 0; i < a.images_.size(); ++i) out.images_[i] = b.images_[a.images_[i]];
  return out;
}

Permutation power(const Permutation& a, std::uint64_t k) {
  auto result = Permutation::identity(a.degree());
  auto base = a;
  while (k) {
    if (k & 1) result = then(result, base);
    base = then(base, base);
    k >>= 1;
  }
  return result;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t count_p_singular_permutations(std::uint32_t n, std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::kInvalidArgument, "p must be prime");
  std::uint64_t factorial = 1;
  for (std::uint32_t i = 2; i <= n; ++i) factorial *= i;
  const auto exponent = p_part(factorial, p);

  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 0u);
  std::uint64_t by_power = 0;
  std::uint64_t by_order = 0;
  do {
    const Permutation g(images);
    if (power(g, exponent).is_identity()) ++by_power;
    if (is_power_of(g.order(), p)) ++by_order;
  } while (std::next_permutation(images.begin(), images.end()));
  if (by_power != by_order)
    throw Error(ErrorCode::kInconsistent, "p-singular counts disagree");
  return by_power;
}

}  // namespace orbit_euler
