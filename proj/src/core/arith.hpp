#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace orbit_euler {

constexpr bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Largest power of p dividing n (n > 0).
constexpr std::uint64_t p_part(std::uint64_t n, std::uint64_t p) noexcept {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

constexpr std::uint64_t p_prime_part(std::uint64_t n, std::uint64_t p) noexcept {
  return n / p_part(n, p);
}

constexpr bool is_power_of(std::uint64_t n, std::uint64_t p) noexcept {
  return n > 0 && p_part(n, p) == n;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= n; ++d)
    if (n % d == 0 && is_prime(d)) out.push_back(d);
  return out;
}

}  // namespace orbit_euler
