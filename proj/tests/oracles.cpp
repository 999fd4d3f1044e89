#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle {
namespace {

std::uint32_t inverse_of(std::uint32_t order, const Mul& mul, std::uint32_t x) {
  for (std::uint32_t y = 0; y < order; ++y)
    if (mul(x, y) == 0) return y;
  throw std::logic_error("no inverse");
}

std::uint64_t element_order(const Mul& mul, std::uint32_t x) {
  std::uint64_t k = 1;
  for (std::uint32_t y = x; y != 0; y = mul(y, x)) ++k;
  return k;
}

bool is_p_power(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<std::uint32_t> inverses(std::uint32_t order, const Mul& mul) {
  std::vector<std::uint32_t> inv(order);
  for (std::uint32_t x = 0; x < order; ++x) inv[x] = inverse_of(order, mul, x);
  return inv;
}

mpz_class ipow(const mpz_class& b, std::uint64_t e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

std::uint64_t c2(std::uint64_t n) { return n * (n > 0 ? n - 1 : 0) / 2; }

mpz_class factorial_at(std::uint32_t m, const mpz_class& q) {
  mpz_class f = 1;
  for (std::uint32_t d = 1; d <= m; ++d) f *= bracket_at(d, q);
  return f;
}

mpz_class exact(const mpq_class& x) {
  if (x.get_den() != 1) throw std::logic_error("term is not an integer");
  return x.get_num();
}

mpz_class sign(std::size_t k) { return k % 2 ? -1 : 1; }

}  // namespace

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) n /= p, r *= p;
  return r;
}

std::uint64_t p_singular_count(std::uint32_t order, const Mul& mul, std::uint32_t p) {
  const auto pp = p_part(order, p);
  std::uint64_t n = 0;
  for (std::uint32_t g = 0; g < order; ++g) {
    std::uint32_t x = 0;
    for (std::uint64_t i = 0; i < pp; ++i) x = mul(x, g);
    if (x == 0) ++n;
  }
  return n;
}

std::uint64_t solutions_of_xn(std::uint32_t order, const Mul& mul, std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint32_t g = 0; g < order; ++g) {
    std::uint32_t x = 0;
    for (std::uint64_t i = 0; i < n; ++i) x = mul(x, g);
    if (x == 0) ++count;
  }
  return count;
}

std::uint64_t p_singular_class_count(std::uint32_t order, const Mul& mul, std::uint32_t p) {
  const auto inv = inverses(order, mul);
  std::vector<bool> seen(order, false);
  std::uint64_t n = 0;
  for (std::uint32_t x = 0; x < order; ++x) {
    if (seen[x]) continue;
    for (std::uint32_t g = 0; g < order; ++g) seen[mul(mul(inv[g], x), g)] = true;
    if (is_p_power(element_order(mul, x), p)) ++n;
  }
  return n;
}

std::uint64_t permutations_p_singular(std::uint32_t n, std::uint32_t p) {
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    std::vector<bool> done(n, false);
    bool ok = true;
    for (std::uint32_t i = 0; i < n && ok; ++i) {
      if (done[i]) continue;
      std::uint64_t len = 0;
      for (std::uint32_t j = i; !done[j]; j = perm[j]) done[j] = true, ++len;
      ok = is_p_power(len, p);
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::uint64_t fixed_cosets(std::uint32_t order, const Mul& mul, const std::vector<std::uint32_t>& h,
                           const std::vector<std::uint32_t>& k) {
  std::set<std::set<std::uint32_t>> cosets;
  for (std::uint32_t x = 0; x < order; ++x) {
    std::set<std::uint32_t> c;
    for (auto y : k) c.insert(mul(y, x));
    cosets.insert(c);
  }
  std::uint64_t fixed = 0;
  for (const auto& c : cosets) {
    bool ok = true;
    for (auto a : h) {
      for (auto y : c)
        if (!c.count(mul(y, a))) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (ok) ++fixed;
  }
  return fixed;
}

std::uint64_t transporter_right(std::uint32_t order, const Mul& mul, const std::vector<std::uint32_t>& h,
                                const std::vector<std::uint32_t>& k) {
  const auto inv = inverses(order, mul);
  const std::set<std::uint32_t> ks(k.begin(), k.end());
  std::uint64_t n = 0;
  for (std::uint32_t x = 0; x < order; ++x) {
    bool ok = true;
    for (auto a : h) ok = ok && ks.count(mul(mul(inv[x], a), x));
    if (ok) ++n;
  }
  return n;
}

std::uint64_t transporter_left(std::uint32_t order, const Mul& mul, const std::vector<std::uint32_t>& h,
                               const std::vector<std::uint32_t>& k) {
  const auto inv = inverses(order, mul);
  const std::set<std::uint32_t> ks(k.begin(), k.end());
  std::uint64_t n = 0;
  for (std::uint32_t x = 0; x < order; ++x) {
    bool ok = true;
    for (auto a : h) ok = ok && ks.count(mul(mul(x, a), inv[x]));
    if (ok) ++n;
  }
  return n;
}

std::uint64_t conjugates_containing(std::uint32_t order, const Mul& mul, const std::vector<std::uint32_t>& h,
                                    const std::vector<std::uint32_t>& k) {
  const auto inv = inverses(order, mul);
  std::set<std::set<std::uint32_t>> conj;
  for (std::uint32_t x = 0; x < order; ++x) {
    std::set<std::uint32_t> c;
    for (auto y : k) c.insert(mul(mul(inv[x], y), x));
    conj.insert(c);
  }
  std::uint64_t n = 0;
  for (const auto& c : conj)
    if (std::all_of(h.begin(), h.end(), [&](std::uint32_t a) { return c.count(a) > 0; })) ++n;
  return n;
}

// ---- fields

PolyField::PolyField(std::uint32_t p, std::uint32_t e) : p_(p), e_(e), q_(1) {
  for (std::uint32_t i = 0; i < e; ++i) q_ *= p;
  if (e == 1) {
    modulus_ = {0, 1};
    return;
  }
  // First monic f of degree e with no monic factor of degree 1..e/2.
  auto poly_mod = [&](std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b) {
    // b monic
    while (a.size() >= b.size()) {
      const auto lead = a.back();
      const auto shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + (p - 1) * lead % p * b[i]) % p;
      a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
  };
  auto digits = [&](std::uint32_t code, std::uint32_t n) {
    std::vector<std::uint32_t> v(n);
    for (auto& d : v) d = code % p, code /= p;
    return v;
  };
  for (std::uint32_t code = 0; code < q_; ++code) {
    auto f = digits(code, e);
    f.push_back(1);
    bool irreducible = true;
    for (std::uint32_t d = 1; d <= e / 2 && irreducible; ++d) {
      std::uint32_t count = 1;
      for (std::uint32_t i = 0; i < d; ++i) count *= p;
      for (std::uint32_t c = 0; c < count && irreducible; ++c) {
        auto g = digits(c, d);
        g.push_back(1);
        if (poly_mod(f, g).empty()) irreducible = false;
      }
    }
    if (irreducible) {
      modulus_ = f;
      return;
    }
  }
  throw std::logic_error("no irreducible polynomial");
}

std::vector<std::uint32_t> PolyField::unpack(std::uint32_t a) const {
  std::vector<std::uint32_t> v(e_);
  for (auto& d : v) d = a % p_, a /= p_;
  return v;
}

std::uint32_t PolyField::pack(const std::vector<std::uint32_t>& v) const {
  std::uint32_t a = 0;
  for (std::size_t i = e_; i-- > 0;) a = a * p_ + v[i];
  return a;
}

std::uint32_t PolyField::mul(std::uint32_t a, std::uint32_t b) const {
  if (e_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  const auto x = unpack(a), y = unpack(b);
  std::vector<std::uint32_t> z(2 * e_ - 1, 0);
  for (std::uint32_t i = 0; i < e_; ++i)
    for (std::uint32_t j = 0; j < e_; ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % p_;
  for (std::size_t top = z.size(); top-- > e_;) {
    const auto lead = z[top];
    if (!lead) continue;
    for (std::uint32_t i = 0; i <= e_; ++i)
      z[top - e_ + i] = (z[top - e_ + i] + (p_ - lead) * modulus_[i]) % p_;
  }
  z.resize(e_);
  return pack(z);
}

std::uint32_t PolyField::pow(std::uint32_t a, std::uint64_t k) const {
  std::uint32_t r = 1, b = a;
  while (k) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

std::uint64_t multiplicative_p_singular(std::uint32_t p0, std::uint32_t e, std::uint32_t p) {
  const PolyField f(p0, e);
  const auto pp = p_part(f.order() - 1, p);
  std::uint64_t n = 0;
  for (std::uint32_t x = 1; x < f.order(); ++x)
    if (f.pow(x, pp) == 1) ++n;
  return n;
}

// ---- posets

mpq_class moebius_euler(const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = leq.size();
  // Order the points so that a < b implies index(a) < index(b).
  std::vector<std::size_t> below(n, 0), order(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (leq[b][a]) ++below[a];
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return below[x] < below[y]; });
  mpq_class chi = 0;
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<mpz_class> mu(n, 0);
    for (auto b : order) {
      if (!leq[a][b]) continue;
      if (b == a) {
        mu[b] = 1;
      } else {
        mpz_class s = 0;
        for (std::size_t c = 0; c < n; ++c)
          if (c != b && leq[a][c] && leq[c][b]) s += mu[c];
        mu[b] = -s;
      }
      chi += mu[b];
    }
  }
  return chi;
}

std::vector<std::vector<bool>> random_poset(std::uint32_t n, double density, std::mt19937_64& rng) {
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution edge(density);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::uint32_t i = 0; i < n; ++i) {
    leq[perm[i]][perm[i]] = true;
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (edge(rng)) leq[perm[i]][perm[j]] = true;
  }
  for (std::uint32_t k = 0; k < n; ++k)
    for (std::uint32_t i = 0; i < n; ++i)
      if (leq[i][k])
        for (std::uint32_t j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = true;
  return leq;
}

// ---- q-identities

mpz_class bracket_at(std::uint32_t d, const mpz_class& q) {
  mpz_class s = 0;
  for (std::uint32_t i = 0; i < d; ++i) s += ipow(q, i);
  return s;
}

mpz_class twisted_bracket_at(std::uint32_t d, const mpz_class& q) {
  return bracket_at(d, d % 2 ? mpz_class(-q) : q);
}

std::vector<std::vector<std::uint32_t>> compositions(std::uint32_t m) {
  std::vector<std::vector<std::uint32_t>> out;
  // bit i of mask set: cut after position i+1
  for (std::uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
    std::vector<std::uint32_t> c;
    std::uint32_t run = 1;
    for (std::uint32_t i = 0; i + 1 < m; ++i) {
      if (mask >> i & 1u) {
        c.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    c.push_back(run);
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

mpz_class witt_A_first_at(std::uint32_t m, const mpz_class& q) {
  mpz_class s = 0;
  for (const auto& c : compositions(m)) {
    mpq_class t(factorial_at(m, q));
    for (auto x : c) t /= factorial_at(x, q);
    s += sign(c.size()) * exact(t);
  }
  return s - sign(m) * ipow(q, c2(m));
}

mpz_class witt_A_second_at(std::uint32_t m, const mpz_class& q) {
  mpz_class s = 0;
  for (const auto& c : compositions(m)) {
    mpq_class t(factorial_at(m, q));
    std::uint64_t e = 0;
    for (auto x : c) t /= factorial_at(x, q), e += c2(x);
    s += sign(c.size()) * exact(t) * ipow(q, e);
  }
  return s - sign(m);
}

namespace {

mpz_class witt_B_term(const std::vector<std::uint32_t>& c, std::uint32_t m, const mpz_class& q) {
  mpq_class t(1);
  for (std::uint32_t d = c.back(); d <= m - 1; ++d) t *= bracket_at(2 * d, q);
  for (std::size_t i = 0; i + 1 < c.size(); ++i) t /= factorial_at(c[i], q);
  return sign(c.size()) * exact(t);
}

}  // namespace

mpz_class witt_B_first_at(std::uint32_t m, const mpz_class& q) {
  mpz_class s = 0;
  for (const auto& c : compositions(m)) s += witt_B_term(c, m, q);
  return s - sign(m) * ipow(q, static_cast<std::uint64_t>(m - 1) * (m - 1));
}

mpz_class witt_B_second_at(std::uint32_t m, const mpz_class& q) {
  mpz_class s = 0;
  for (const auto& c : compositions(m)) {
    std::uint64_t e = static_cast<std::uint64_t>(c.back() - 1) * (c.back() - 1);
    for (std::size_t i = 0; i + 1 < c.size(); ++i) e += c2(c[i]);
    s += witt_B_term(c, m, q) * ipow(q, e);
  }
  return s - sign(m);
}

namespace {

// Parabolics of SU(top): Levi GL(m_1,q^2) x ... x GL(m_k,q^2) x SU(s) with
// the unitary block of size s. Two families: s = 0 (resp. 1) with all k
// parts general linear, and s = 2 m_k (resp. 2 m_k + 1) with the last part
// turned unitary.
mpz_class twisted_sum_at(std::uint32_t m, bool odd, const mpz_class& q, bool weighted) {
  const std::uint32_t top = 2 * m + (odd ? 1 : 0);
  const mpz_class q2 = q * q;
  mpz_class total = 0;
  for (const auto& c : compositions(m)) {
    mpq_class a(1);
    for (std::uint32_t d = 1; d <= top; ++d) a *= twisted_bracket_at(d, q);
    std::uint64_t ea = 0;
    for (auto x : c) a /= factorial_at(x, q2), ea += 2 * c2(x);
    const std::uint32_t s = 2 * c.back() + (odd ? 1 : 0);
    mpq_class b(1);
    for (std::uint32_t d = s + 1; d <= top; ++d) b *= twisted_bracket_at(d, q);
    std::uint64_t eb = c2(s);
    for (std::size_t i = 0; i + 1 < c.size(); ++i) b /= factorial_at(c[i], q2), eb += 2 * c2(c[i]);
    mpz_class ta = exact(a), tb = exact(b);
    if (weighted) ta *= ipow(q, ea), tb *= ipow(q, eb);
    total += sign(c.size()) * (ta - tb);
  }
  return total;
}

}  // namespace

mpz_class twisted_first_at(std::uint32_t m, bool odd, const mpz_class& q) {
  const std::uint32_t top = 2 * m + (odd ? 1 : 0);
  return twisted_sum_at(m, odd, q, false) - sign(m) * ipow(q, c2(top));
}

mpz_class twisted_second_at(std::uint32_t m, bool odd, const mpz_class& q) {
  return twisted_sum_at(m, odd, q, true) - sign(m);
}

}  // namespace oracle
