#include "core/qidentities.hpp"

#include <functional>

#include "core/arith.hpp"
#include "core/error.hpp"

namespace orbit_euler {
namespace {

std::uint64_t choose2(std::uint64_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

IntPolynomial signed_power(bool negative, std::uint64_t degree) {
  return IntPolynomial::monomial(negative ? -1 : 1, degree);
}

IntPolynomial constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

Integer factorial(std::uint32_t n) {
  Integer f = 1;
  for (std::uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer pow_int(std::uint64_t base, std::uint32_t e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

Integer p_part_of(const Integer& x, std::uint32_t p) {
  Integer r = 1;
  Integer y = x;
  while (y != 0 && y % p == 0) {
    y /= p;
    r *= p;
  }
  return r;
}

IntPolynomial product_of_factorials(const Composition& parts, std::size_t count, std::size_t sub) {
  IntPolynomial d = 1;
  for (std::size_t i = 0; i < count; ++i) d *= q_factorial(parts[i]).substitute_power(sub);
  return d;
}

}  // namespace

IntPolynomial q_bracket(std::uint32_t d) {
  if (d == 0) throw Error(ErrorCode::kInvalidArgument, "[d](q) needs d >= 1");
  return IntPolynomial(std::vector<Integer>(d, Integer(1)));
}

IntPolynomial twisted_bracket(std::uint32_t d) {
  return d % 2 == 1 ? q_bracket(d).negate_variable() : q_bracket(d);
}

IntPolynomial q_factorial(std::uint32_t m) {
  IntPolynomial f = 1;
  for (std::uint32_t d = 1; d <= m; ++d) f *= q_bracket(d);
  return f;
}

IntPolynomial gaussian_multinomial(const Composition& parts) {
  std::uint32_t m = 0;
  for (auto x : parts) {
    if (x == 0) throw Error(ErrorCode::kInvalidArgument, "composition parts must be positive");
    m += x;
  }
  return divide_exact(q_factorial(m), product_of_factorials(parts, parts.size(), 1));
}

std::vector<Composition> ordered_partitions(std::uint32_t m) {
  std::vector<Composition> out;
  Composition cur;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t rest) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t f = 1; f <= rest; ++f) {
      cur.push_back(f);
      rec(rest - f);
      cur.pop_back();
    }
  };
  if (m > 0) rec(m);
  return out;
}

std::vector<Composition> integer_partitions(std::uint32_t n) {
  std::vector<Composition> out;
  Composition cur;
  std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t rest, std::uint32_t max) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t f = std::min(rest, max); f >= 1; --f) {
      cur.push_back(f);
      rec(rest - f, f);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

bool IdentityReport::passed() const {
  for (const auto& c : checks)
    if (!c.informational && !c.holds()) return false;
  return true;
}

IdentityReport verify_witt_A(std::uint32_t m) {
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "type A needs m >= 1");
  const bool odd = m % 2 == 1;
  IntPolynomial first, second;
  Integer witt = 0;
  for (const auto& c : ordered_partitions(m)) {
    const bool neg = c.size() % 2 == 1;
    const auto g = gaussian_multinomial(c);
    std::uint64_t e = 0;
    for (auto x : c) e += choose2(x);
    first += neg ? -g : g;
    second += (neg ? -g : g) * IntPolynomial::monomial(1, e);
    // |W : W_J| with |J| = m - k
    Integer index = factorial(m);
    for (auto x : c) index /= factorial(x);
    witt += ((m - c.size()) % 2 == 0) ? index : Integer(-index);
  }
  IdentityReport r{"A", m, {}};
  r.checks.push_back({"first", first, signed_power(odd, choose2(m))});
  r.checks.push_back({"second", second, signed_power(odd, 0)});
  r.checks.push_back({"first at q=1", constant(first.evaluate(1)), constant(odd ? -1 : 1)});
  r.checks.push_back({"second at q=1", constant(second.evaluate(1)), constant(odd ? -1 : 1)});
  r.checks.push_back({"Witt", constant(witt), 1});
  return r;
}

IdentityReport verify_witt_B(std::uint32_t m) {
  if (m < 2) throw Error(ErrorCode::kInvalidArgument, "type B needs m >= 2");
  const bool odd = m % 2 == 1;
  IntPolynomial first, second;
  Integer witt = 0;
  // |W(B_{m-1})| = 2^{m-1} (m-1)!
  const Integer w_order = pow_int(2, m - 1) * factorial(m - 1);
  for (const auto& c : ordered_partitions(m)) {
    const std::size_t k = c.size();
    const bool neg = k % 2 == 1;
    IntPolynomial num = 1;
    for (std::uint32_t d = c.back(); d <= m - 1; ++d) num *= q_bracket(2 * d);
    auto t = divide_exact(num, product_of_factorials(c, k - 1, 1));
    if (neg) t = -t;
    std::uint64_t e = 0;
    for (std::size_t i = 0; i + 1 < k; ++i) e += choose2(c[i]);
    e += static_cast<std::uint64_t>(c.back() - 1) * (c.back() - 1);
    first += t;
    second += t * IntPolynomial::monomial(1, e);
    Integer sub = pow_int(2, c.back() - 1) * factorial(c.back() - 1);
    for (std::size_t i = 0; i + 1 < k; ++i) sub *= factorial(c[i]);
    const Integer index = w_order / sub;
    witt += ((m - k) % 2 == 0) ? index : Integer(-index);
  }
  IdentityReport r{"B", m, {}};
  r.checks.push_back({"first", first, signed_power(odd, static_cast<std::uint64_t>(m - 1) * (m - 1))});
  r.checks.push_back({"second", second, signed_power(odd, 0)});
  r.checks.push_back({"first at q=1", constant(first.evaluate(1)), constant(odd ? -1 : 1)});
  r.checks.push_back({"second at q=1", constant(second.evaluate(1)), constant(odd ? -1 : 1)});
  r.checks.push_back({"Witt", constant(witt), 1});
  return r;
}

IdentityReport verify_twisted_A(std::uint32_t m, TwistedParity parity, TwistedReading reading) {
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "twisted type A needs m >= 1");
  const std::uint32_t extra = parity == TwistedParity::kOdd ? 1 : 0;
  const std::uint32_t top = 2 * m + extra;
  const bool corrected = reading == TwistedReading::kCorrected;
  const bool odd = m % 2 == 1;

  IntPolynomial full = 1;
  for (std::uint32_t d = 1; d <= top; ++d) full *= twisted_bracket(d);

  IntPolynomial s1, s2, s1w, s2w;
  for (const auto& c : ordered_partitions(m)) {
    const std::size_t k = c.size();
    const bool neg = k % 2 == 1;
    auto t1 = divide_exact(full, product_of_factorials(c, k, 2));
    const std::uint32_t s = 2 * c.back() + extra;
    const std::uint32_t start = corrected ? s + 1 : 2 * c.back() + 2;
    IntPolynomial tail = 1;
    for (std::uint32_t d = start; d <= top; ++d) tail *= twisted_bracket(d);
    auto t2 = divide_exact(tail, product_of_factorials(c, k - 1, 2));
    if (neg) {
      t1 = -t1;
      t2 = -t2;
    }
    std::uint64_t head = 0;
    for (std::size_t i = 0; i + 1 < k; ++i) head += choose2(c[i]);
    const std::uint64_t all = head + choose2(c.back());
    const std::uint64_t e1 = corrected ? 2 * all : all;
    const std::uint64_t e2 = corrected ? 2 * head + choose2(s) : all;
    s1 += t1;
    s2 += t2;
    s1w += t1 * IntPolynomial::monomial(1, e1);
    s2w += t2 * IntPolynomial::monomial(1, e2);
  }
  IdentityReport r{std::string(parity == TwistedParity::kEven ? "2A-even" : "2A-odd") +
                       (corrected ? "" : " (literal)"),
                   m,
                   {}};
  const auto second_lhs = s1w - s2w;
  r.checks.push_back({"first", s1 - s2, signed_power(odd, choose2(top))});
  r.checks.push_back({"second", second_lhs, signed_power(odd, 0)});
  r.checks.push_back({"second at q=1", constant(second_lhs.evaluate(1)), constant(odd ? -1 : 1)});
  return r;
}

Integer egf_p_singular_symmetric(std::uint32_t n, std::uint32_t p) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "n must be positive");
  if (!is_prime(p)) throw Error(ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
  // g = x + x^p/p + x^{p^2}/p^2 + ..., truncated at degree n
  std::vector<Rational> g(n + 1, Rational(0));
  for (std::uint64_t pk = 1; pk <= n; pk *= p) g[pk] = Rational(1, pk);
  // f = exp(g): f_0 = 1, j f_j = sum_{i=1}^{j} i g_i f_{j-i}
  std::vector<Rational> f(n + 1, Rational(0));
  f[0] = 1;
  for (std::uint32_t j = 1; j <= n; ++j) {
    Rational acc = 0;
    for (std::uint32_t i = 1; i <= j; ++i)
      if (sgn(g[i]) != 0) acc += g[i] * f[j - i] * i;
    f[j] = acc / j;
  }
  const Rational coeff = f[n] * factorial(n);
  if (!is_integral(coeff)) throw Error(ErrorCode::kNonIntegral, "EGF coefficient " + to_string(coeff));
  return coeff.get_num();
}

Integer cross_char_class_count(std::uint32_t n, std::uint64_t q, std::uint32_t p) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "n must be positive");
  if (!is_prime(p)) throw Error(ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
  if (q < 2) throw Error(ErrorCode::kInvalidArgument, "q must be a prime power");
  if (q % p == 0) throw Error(ErrorCode::kPDividesQ, std::to_string(p) + " divides " + std::to_string(q));
  const Integer nfact = factorial(n);
  Integer total = 0;
  for (const auto& lambda : integer_partitions(n)) {
    // z_lambda = prod_b b^{m_b} m_b!
    Integer z = 1;
    for (std::size_t i = 0; i < lambda.size();) {
      std::size_t j = i;
      while (j < lambda.size() && lambda[j] == lambda[i]) ++j;
      z *= pow_int(lambda[i], static_cast<std::uint32_t>(j - i)) * factorial(static_cast<std::uint32_t>(j - i));
      i = j;
    }
    if (nfact % z != 0) throw Error(ErrorCode::kInconsistent, "z_lambda does not divide n!");
    Integer term = nfact / z;
    for (auto b : lambda) term *= p_part_of(pow_int(q, b) - 1, p);
    total += term;
  }
  if (total % nfact != 0) throw Error(ErrorCode::kNonIntegral, "class count is not an integer");
  return total / nfact;
}

}  // namespace orbit_euler
