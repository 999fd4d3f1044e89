#include <doctest.h>

#include <set>

#include "core/catalog.hpp"
#include "core/error.hpp"
#include "core/lattice.hpp"
#include "support.hpp"

using namespace orbit_euler;
using test_support::elements;
using test_support::mul_of;
using test_support::order_of;

namespace {

// Every p-subgroup, by raw closure: grow each known p-subgroup by one
// element at a time and keep the results of p-power order.
std::set<std::set<std::uint32_t>> closure_p_subgroups(const FiniteGroup& g, std::uint32_t p) {
  std::set<std::set<std::uint32_t>> out{{0}};
  std::vector<std::set<std::uint32_t>> todo{{0}};
  while (!todo.empty()) {
    const auto base = todo.back();
    todo.pop_back();
    for (ElementIndex a = 0; a < g.order(); ++a) {
      if (base.count(a)) continue;
      std::set<std::uint32_t> h = base;
      h.insert(a);
      std::vector<std::uint32_t> queue(h.begin(), h.end());
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
          for (auto y : {g.mul(queue[i], queue[j]), g.mul(queue[j], queue[i])})
            if (h.insert(y).second) queue.push_back(y);
      std::size_t n = h.size();
      while (n % p == 0) n /= p;
      if (n == 1 && out.insert(h).second) todo.push_back(h);
    }
  }
  return out;
}

Subgroup transposition_group(const FiniteGroup& s4) {
  for (ElementIndex a = 1; a < s4.order(); ++a) {
    if (s4.element_order(a) != 2) continue;
    const auto h = generate_subgroup(s4, std::vector<ElementIndex>{a});
    if (conjugacy_class(s4, h).length() == 6) return h;
  }
  throw std::logic_error("no transposition");
}

}  // namespace

TEST_CASE("Sylow subgroups") {
  const auto s4 = catalog_group("S4");
  CHECK(sylow_p(s4, 2).order() == 8);
  CHECK(sylow_p(s4, 3).order() == 3);
  CHECK(sylow_p(s4, 5).order() == 1);
  CHECK(sylow_p(catalog_group("GL(3,2)"), 2).order() == 8);
  CHECK(sylow_p(catalog_group("A5"), 2).order() == 4);
}

TEST_CASE("all p-subgroups") {
  CHECK(all_p_subgroups(catalog_group("C2"), 2).size() == 2);
  SUBCASE("S3 by subset scan") {
    const auto s3 = catalog_group("S3");
    std::size_t found = 0;
    for (unsigned mask = 0; mask < 64; ++mask) {
      if (!(mask & 1u)) continue;
      std::vector<std::uint32_t> h;
      for (std::uint32_t i = 0; i < 6; ++i)
        if (mask >> i & 1u) h.push_back(i);
      bool closed = true;
      for (auto x : h)
        for (auto y : h) closed = closed && (mask >> s3.mul(x, y) & 1u);
      if (closed && (h.size() == 1 || h.size() == 2)) ++found;
    }
    CHECK(found == 4);
    CHECK(all_p_subgroups(s3, 2).size() == found);
  }
  for (const char* spec : {"S4", "D8", "A4", "GL(2,3)", "D8xC2"}) {
    CAPTURE(std::string(spec));
    const auto g = catalog_group(spec);
    for (std::uint32_t p : {2u, 3u}) {
      std::set<std::set<std::uint32_t>> lib;
      for (const auto& h : all_p_subgroups(g, p)) lib.insert(std::set<std::uint32_t>(h.elements().begin(), h.elements().end()));
      CHECK(lib == closure_p_subgroups(g, p));
    }
  }
  SUBCASE("S4 Sylow 2 classes") {
    const auto s4 = catalog_group("S4");
    std::size_t d8 = 0, normal_v4 = 0;
    for (const auto& h : all_p_subgroups(s4, 2)) {
      if (h.order() == 8) ++d8;
      if (h.order() == 4 && is_normal(s4, h)) ++normal_v4;
    }
    CHECK(d8 == 3);
    CHECK(normal_v4 == 1);
  }
}

TEST_CASE("normalizers") {
  const auto s4 = catalog_group("S4");
  const auto v4 = o_p(s4, 2);
  CHECK(normalizer(s4, v4) == whole_group(s4));
  const auto d8 = sylow_p(s4, 2);
  CHECK(normalizer(s4, d8) == d8);
  const auto s3 = catalog_group("S3");
  for (const auto& h : all_p_subgroups(s3, 2))
    if (h.order() == 2) CHECK(normalizer(s3, h) == h);
}

TEST_CASE("O_p") {
  CHECK(o_p(catalog_group("S3"), 3).order() == 3);
  CHECK(o_p(catalog_group("S4"), 2).order() == 4);
  CHECK(o_p(catalog_group("GL(3,2)"), 2).order() == 1);
  CHECK(o_p(catalog_group("SL(2,3)"), 2).order() == 8);
}

TEST_CASE("p-radical subgroups") {
  const auto s4 = catalog_group("S4");
  CHECK(is_p_radical(s4, sylow_p(s4, 2), 2));
  CHECK(is_p_radical(s4, o_p(s4, 2), 2));
  CHECK_FALSE(is_p_radical(s4, transposition_group(s4), 2));
  CHECK_FALSE(is_p_radical(s4, trivial_subgroup(s4), 2));
  CHECK(is_p_radical(catalog_group("GL(3,2)"), trivial_subgroup(catalog_group("GL(3,2)")), 2));
  try {
    is_p_radical(s4, sylow_p(s4, 3), 2);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotPSubgroup);
  }
}

TEST_CASE("cyclic p-subgroups") {
  CHECK(cyclic_p_subgroups(catalog_group("C4"), 2).size() == 3);
  CHECK(cyclic_p_subgroups(catalog_group("S4"), 2).size() == 1 + 9 + 3);
  CHECK(cyclic_p_subgroups(catalog_group("S3"), 3).size() == 2);
}

TEST_CASE("conjugacy classes of subgroups") {
  const auto s4 = catalog_group("S4");
  const auto radical = p_radical_classes(s4, 2);
  REQUIRE(radical.size() == 2);
  CHECK(radical[0].representative.order() == 4);
  CHECK(radical[0].length() == 1);
  CHECK(radical[1].representative.order() == 8);
  CHECK(radical[1].length() == 3);

  const auto s3 = catalog_group("S3");
  const auto subs = all_p_subgroups(s3, 2);
  CHECK(conjugacy_classes_of_subgroups(s3, subs).size() == 2);

  const std::vector<Subgroup> single{o_p(s4, 2)};
  const auto one = conjugacy_classes_of_subgroups(s4, single);
  REQUIRE(one.size() == 1);
  CHECK(one[0].length() == 1);

  const std::vector<Subgroup> open{sylow_p(s4, 2)};
  try {
    conjugacy_classes_of_subgroups(s4, open);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotClosed);
  }
}

TEST_CASE("transporters") {
  const auto s4 = catalog_group("S4");
  const auto d8 = sylow_p(s4, 2);
  const auto v4 = o_p(s4, 2);
  CHECK(transporter_count(s4, trivial_subgroup(s4), d8) == 24);
  CHECK(transporter_count(s4, d8, d8) == 8);
  CHECK(transporter_count(s4, v4, d8) == 24);
  for (const auto& [h, k] : {std::pair{d8, d8}, {v4, d8}, {v4, v4}, {d8, v4}}) {
    const auto right = oracle::transporter_right(order_of(s4), mul_of(s4), elements(h), elements(k));
    const auto left = oracle::transporter_left(order_of(s4), mul_of(s4), elements(h), elements(k));
    CHECK(transporter_count(s4, h, k) == right);
    CHECK(right == left);
  }
}

TEST_CASE("element conjugacy classes") {
  const auto s4 = catalog_group("S4");
  const auto classes = element_conjugacy_classes(s4);
  CHECK(classes.size() == 5);
  std::size_t total = 0;
  for (const auto& c : classes) total += c.size();
  CHECK(total == 24);
  for (const char* spec : {"GL(2,3)", "A5", "D12", "SL(2,5)"}) {
    const auto g = catalog_group(spec);
    for (std::uint32_t p : {2u, 3u, 5u}) {
      std::uint64_t n = 0;
      for (const auto& c : element_conjugacy_classes(g)) {
        auto k = g.element_order(c.front());
        while (k % p == 0) k /= p;
        if (k == 1) ++n;
      }
      CHECK(n == oracle::p_singular_class_count(order_of(g), mul_of(g), p));
    }
  }
}
