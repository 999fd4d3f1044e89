#include "core/finite_field.hpp"

#include <map>
#include <sstream>
#include <utility>

#include "core/error.hpp"

namespace orbit_euler {
namespace {

const std::map<std::uint32_t, std::vector<std::uint32_t>>& conway_table() {
  static const std::map<std::uint32_t, std::vector<std::uint32_t>> table{
      {4, {1, 1, 1}},
      {8, {1, 1, 0, 1}},
      {16, {1, 1, 0, 0, 1}},
      {32, {1, 0, 1, 0, 0, 1}},
      {64, {1, 1, 0, 1, 1, 0, 1}},
      {9, {2, 2, 1}},
      {27, {1, 2, 0, 1}},
      {25, {2, 4, 1}},
      {49, {3, 6, 1}},
  };
  return table;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q) {
  if (q < 2) return {0, 0};
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return {0, 0};
  return {p, e};
}

std::vector<std::uint32_t> digits(std::uint32_t a, std::uint32_t p, std::uint32_t e) {
  std::vector<std::uint32_t> d(e);
  for (std::uint32_t i = 0; i < e; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

std::uint32_t from_digits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint32_t a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
  return a;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t q) {
  const auto [p, e] = prime_power(q);
  if (p == 0 || q > kMaxOrder) {
    throw Error(ErrorCode::kInvalidArgument,
                "field order " + std::to_string(q) + " is not a prime power <= 64");
  }
  p_ = p;
  e_ = e;
  q_ = q;
  if (e == 1) {
    modulus_ = {0, 1};
  } else {
    modulus_ = conway_table().at(q);
  }

  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.resize(q);

  for (std::uint32_t a = 0; a < q; ++a) {
    const auto da = digits(a, p, e);
    std::vector<std::uint32_t> dn(e);
    for (std::uint32_t i = 0; i < e; ++i) dn[i] = (p - da[i]) % p;
    neg_[a] = static_cast<std::uint8_t>(from_digits(dn, p));
    for (std::uint32_t b = 0; b < q; ++b) {
      const auto db = digits(b, p, e);
      std::vector<std::uint32_t> ds(e);
      for (std::uint32_t i = 0; i < e; ++i) ds[i] = (da[i] + db[i]) % p;
      add_[a * q + b] = static_cast<std::uint8_t>(from_digits(ds, p));

      // Schoolbook product, then reduce by the monic modulus from the top.
      std::vector<std::uint32_t> prod(2 * e - 1, 0);
      for (std::uint32_t i = 0; i < e; ++i)
        for (std::uint32_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      for (std::size_t deg = prod.size(); deg-- > e;) {
        const auto c = prod[deg];
        if (c == 0) continue;
        for (std::uint32_t i = 0; i <= e; ++i) {
          auto& t = prod[deg - e + i];
          t = (t + (p - c) * modulus_[i]) % p;
        }
      }
      prod.resize(e);
      mul_[a * q + b] = static_cast<std::uint8_t>(from_digits(prod, p));
    }
  }

  for (std::uint32_t a = 1; a < q; ++a)
    for (std::uint32_t b = 1; b < q; ++b)
      if (mul(a, b) == 1) inv_[a] = static_cast<std::uint8_t>(b);

  for (std::uint32_t a = 1; a < q; ++a) {
    std::uint32_t x = a;
    std::uint32_t ord = 1;
    while (x != 1) {
      x = mul(x, a);
      ++ord;
    }
    if (ord == q - 1) {
      primitive_ = a;
      break;
    }
  }
}

std::uint32_t FiniteField::pow(std::uint32_t a, std::uint64_t k) const noexcept {
  std::uint32_t result = 1;
  std::uint32_t base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::string FiniteField::symbol_name(std::uint32_t a) const {
  if (e_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  std::ostringstream os;
  const auto d = digits(a, p_, e_);
  bool first = true;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << d[i];
    } else {
      if (d[i] != 1) os << d[i];
      os << 'x';
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

std::size_t FqMatrixHash::operator()(const FqMatrix& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : m.entries) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

FqMatrix identity_matrix(std::uint32_t n) {
  FqMatrix m{n, std::vector<std::uint8_t>(n * n, 0)};
  for (std::uint32_t i = 0; i < n; ++i) m.entries[i * n + i] = 1;
  return m;
}

FqMatrix multiply(const FiniteField& field, const FqMatrix& a, const FqMatrix& b) {
  const auto n = a.n;
  FqMatrix c{n, std::vector<std::uint8_t>(n * n, 0)};
  for (std::uint32_t r = 0; r < n; ++r) {
    for (std::uint32_t col = 0; col < n; ++col) {
      std::uint32_t acc = 0;
      for (std::uint32_t k = 0; k < n; ++k) acc = field.add(acc, field.mul(a.at(r, k), b.at(k, col)));
      c.entries[r * n + col] = static_cast<std::uint8_t>(acc);
    }
  }
  return c;
}

std::uint32_t determinant(const FiniteField& field, const FqMatrix& m) {
  const auto n = m.n;
  std::vector<std::uint32_t> a(m.entries.begin(), m.entries.end());
  std::uint32_t det = 1;
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t pivot = col;
    while (pivot < n && a[pivot * n + col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::uint32_t k = 0; k < n; ++k) std::swap(a[pivot * n + k], a[col * n + k]);
      det = field.neg(det);
    }
    const auto pv = a[col * n + col];
    det = field.mul(det, pv);
    const auto pinv = field.inv(pv);
    for (std::uint32_t r = col + 1; r < n; ++r) {
      const auto f = field.mul(a[r * n + col], pinv);
      if (f == 0) continue;
      for (std::uint32_t k = col; k < n; ++k)
        a[r * n + k] = field.sub(a[r * n + k], field.mul(f, a[col * n + k]));
    }
  }
  return det;
}

std::string to_string(const FiniteField& field, const FqMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::uint32_t r = 0; r < m.n; ++r) {
    if (r) os << ';';
    for (std::uint32_t c = 0; c < m.n; ++c) {
      if (c) os << ',';
      os << field.symbol_name(m.at(r, c));
    }
  }
  os << ']';
  return os.str();
}

}  // namespace orbit_euler
