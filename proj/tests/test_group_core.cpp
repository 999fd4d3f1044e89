#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "core/catalog.hpp"
#include "core/error.hpp"
#include "core/finite_field.hpp"
#include "core/finite_group.hpp"
#include "core/lattice.hpp"
#include "core/permutation.hpp"
#include "support.hpp"

using namespace orbit_euler;
using test_support::mul_of;

namespace {

std::size_t count_of_order(const FiniteGroup& g, std::uint32_t k) {
  std::size_t n = 0;
  for (ElementIndex a = 0; a < g.order(); ++a)
    if (g.element_order(a) == k) ++n;
  return n;
}

// 3x3 over F_2 as 9 bits; Gaussian elimination on rows.
bool invertible_f2(unsigned bits) {
  unsigned r[3] = {bits & 7u, (bits >> 3) & 7u, (bits >> 6) & 7u};
  for (int col = 0; col < 3; ++col) {
    int pivot = -1;
    for (int i = col; i < 3; ++i)
      if (r[i] >> col & 1u) pivot = i;
    if (pivot < 0) return false;
    std::swap(r[col], r[pivot]);
    for (int i = 0; i < 3; ++i)
      if (i != col && (r[i] >> col & 1u)) r[i] ^= r[col];
  }
  return true;
}

bool isomorphic_brute(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order() || a.order() > 8) return false;
  std::vector<ElementIndex> phi(a.order());
  std::iota(phi.begin(), phi.end(), 0);
  do {
    if (phi[0] != 0) continue;
    bool hom = true;
    for (ElementIndex x = 0; x < a.order() && hom; ++x)
      for (ElementIndex y = 0; y < a.order() && hom; ++y) hom = phi[a.mul(x, y)] == b.mul(phi[x], phi[y]);
    if (hom) return true;
  } while (std::next_permutation(phi.begin(), phi.end()));
  return false;
}

}  // namespace

TEST_CASE("permutations compose left to right") {
  const auto a = Permutation::cycle(3, {0, 1});
  const auto b = Permutation::cycle(3, {1, 2});
  const auto ab = then(a, b);
  CHECK(ab[0] == 2);  // 0 -> 1 -> 2
  CHECK(ab.order() == 3);
  CHECK(then(ab, ab.inverse()).is_identity());
  CHECK(power(ab, 3).is_identity());
  CHECK(Permutation::cycle(4, {0, 1, 2, 3}).order() == 4);
  CHECK(Permutation::cycle(4, {0, 1, 2, 3}).cycle_type() == std::vector<std::uint32_t>{4});
  CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
}

TEST_CASE("closure of generators") {
  SUBCASE("a 3-cycle on 3 points") {
    const std::vector<Permutation> gens{Permutation::cycle(3, {0, 1, 2})};
    auto gg = generate_group<Permutation, decltype(&then), PermutationHash>(gens, &then, 4096, "c3");
    CHECK(gg.group.order() == 3);
  }
  SUBCASE("adjacent transpositions on 4 points") {
    std::vector<Permutation> gens;
    for (std::uint32_t i = 0; i < 3; ++i) gens.push_back(Permutation::cycle(4, {i, i + 1}));
    auto gg = generate_group<Permutation, decltype(&then), PermutationHash>(gens, &then, 4096, "s4");
    std::vector<std::uint32_t> pts{0, 1, 2, 3};
    std::size_t all = 0;
    do ++all;
    while (std::next_permutation(pts.begin(), pts.end()));
    CHECK(gg.group.order() == all);
  }
  SUBCASE("GL(3,2) generators") {
    const FiniteField f2(2);
    const auto gens = linear_group_generators(f2, 3, false);
    auto compose = [&](const FqMatrix& a, const FqMatrix& b) { return multiply(f2, a, b); };
    auto gg = generate_group<FqMatrix, decltype(compose), FqMatrixHash>(gens, compose, 4096, "gl32");
    unsigned invertible = 0;
    for (unsigned bits = 0; bits < 512; ++bits) invertible += invertible_f2(bits);
    CHECK(invertible == (8 - 1) * (8 - 2) * (8 - 4));
    CHECK(gg.group.order() == invertible);
  }
  SUBCASE("cap") {
    std::vector<Permutation> gens{Permutation::cycle(5, {0, 1}), Permutation::cycle(5, {0, 1, 2, 3, 4})};
    try {
      generate_group<Permutation, decltype(&then), PermutationHash>(gens, &then, 100, "s5");
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kCapExceeded);
    }
  }
}

TEST_CASE("Cayley table validation") {
  // Z/3 with a broken row
  std::vector<std::uint16_t> t{0, 1, 2, 1, 2, 0, 2, 2, 1};
  CHECK_THROWS_AS(FiniteGroup(3, t, "bad"), Error);
  std::vector<std::uint16_t> ok{0, 1, 2, 1, 2, 0, 2, 0, 1};
  CHECK(FiniteGroup(3, ok, "z3").order() == 3);
}

TEST_CASE("element orders in S4") {
  const auto s4 = catalog_group("S4");
  CHECK(s4.element_order(s4.identity()) == 1);
  CHECK(count_of_order(s4, 1) == 1);
  CHECK(count_of_order(s4, 2) == 9);
  CHECK(count_of_order(s4, 3) == 8);
  CHECK(count_of_order(s4, 4) == 6);
}

TEST_CASE("quotients") {
  const auto s4 = catalog_group("S4");
  SUBCASE("G/G") { CHECK(quotient_group(s4, whole_group(s4)).group.order() == 1); }
  SUBCASE("S4 / V4 is S3") {
    const auto v4 = o_p(s4, 2);
    REQUIRE(v4.order() == 4);
    const auto q = quotient_group(s4, v4);
    CHECK(q.group.order() == 6);
    CHECK(isomorphic_brute(q.group, catalog_group("S3")));
    CHECK_FALSE(isomorphic_brute(q.group, catalog_group("C6")));
  }
  SUBCASE("N(D8)/D8") {
    const auto d8 = sylow_p(s4, 2);
    const auto n = normalizer(s4, d8);
    CHECK(n == d8);
    const auto ind = induced_group(s4, n);
    BitSet local(ind.group.order());
    for (std::size_t i = 0; i < ind.embedding.size(); ++i)
      if (d8.contains(ind.embedding[i])) local.set(i);
    CHECK(quotient_group(ind.group, Subgroup(ind.group, local)).group.order() == 1);
  }
  SUBCASE("non-normal") {
    const auto h = generate_subgroup(s4, std::vector<ElementIndex>{1});
    if (!is_normal(s4, h)) CHECK_THROWS_AS(quotient_group(s4, h), Error);
  }
}

TEST_CASE("direct products") {
  const auto v = catalog_group("C2xC2");
  CHECK(v.order() == 4);
  for (ElementIndex a = 1; a < 4; ++a) CHECK(v.element_order(a) == 2);
  CHECK(catalog_group("S3xC2").order() == 12);
  const auto c6 = catalog_group("C2xC3");
  CHECK(count_of_order(c6, 6) > 0);
}

TEST_CASE("catalog specs") {
  CHECK(catalog_group("S4").order() == 24);
  CHECK(catalog_group("GL(3,2)").order() == 168);
  CHECK(catalog_group("C6xS3").order() == 36);
  CHECK(catalog_group("SL(2,3)").order() == 24);
  CHECK(catalog_group("D8").order() == 8);
  CHECK(catalog_group("A5").order() == 60);
  CHECK(catalog_order("S7") == 5040);
  for (const char* bad : {"Q8", "S", "", "GL(3,6)", "C4x", "xC4", "GL(2,2"}) {
    CAPTURE(bad);
    try {
      catalog_group(bad);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK((e.code() == ErrorCode::kParse || e.code() == ErrorCode::kInvalidArgument));
    }
  }
  try {
    catalog_group("S7");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCapExceeded);
  }
}

TEST_CASE("order cap from the environment") {
  ::setenv("ORBIT_EULER_CAP", "100", 1);
  CHECK(default_order_cap() == 100);
  CHECK_THROWS_AS(catalog_group("S5"), Error);
  ::setenv("ORBIT_EULER_CAP", "999999", 1);
  CHECK(default_order_cap() == kMaxGroupOrder);
  ::unsetenv("ORBIT_EULER_CAP");
  CHECK(default_order_cap() == kMaxGroupOrder);
}

TEST_CASE("every catalog entry builds with the advertised order") {
  for (const auto& spec : standard_catalog()) {
    CAPTURE(std::string(spec));
    const auto g = catalog_group(spec);
    CHECK(g.order() == catalog_order(spec));
  }
}

TEST_CASE("finite fields") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u}) {
    CAPTURE(q);
    const FiniteField f(q);
    CHECK(f.order() == q);
    std::uint32_t x = 1, k = 0;
    do {
      x = f.mul(x, f.primitive_element());
      ++k;
    } while (x != 1);
    CHECK(k == q - 1);
    for (std::uint32_t a = 1; a < q; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    for (std::uint32_t a = 0; a < q; a += 3)
      for (std::uint32_t b = 0; b < q; b += 5)
        for (std::uint32_t c = 0; c < q; c += 7)
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
  }
  CHECK_THROWS_AS(FiniteField(6), Error);
  CHECK_THROWS_AS(FiniteField(81), Error);
}

TEST_CASE("GL(1,q) against field arithmetic") {
  for (auto [p, e] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {5u, 1u}, {7u, 1u}}) {
    std::uint32_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) q *= p;
    const auto g = catalog_group("GL(1," + std::to_string(q) + ")");
    CHECK(g.order() == q - 1);
    for (std::uint32_t r : {2u, 3u, 5u, 7u})
      if (p != r) CHECK(oracle::p_singular_count(g.order(), mul_of(g), r) == oracle::multiplicative_p_singular(p, e, r));
  }
}
