#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "core/linear.hpp"
#include "core/subgroup.hpp"

namespace orbit_euler {

// |O_G(H,K)| = |{x : H^x <= K}| / |K|. Also counted as the H-fixed right
// cosets of K; throws Inconsistent if the two disagree.
std::uint64_t mark(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

// mark(H,K) * |K| / |N_G(K)|, checked against the number of conjugates of
// K containing H.
std::uint64_t modified_mark(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

// Conjugates L of K with H <= L, and with L <= H.
std::uint64_t conjugates_containing(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);
std::uint64_t conjugates_contained_in(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

// p-radical classes ordered by descending subgroup order, ties by
// representative BitSet order. Tables below use this layout, which makes
// them lower triangular.
std::vector<SubgroupClass> radical_classes_for_tables(const FiniteGroup& g, std::uint32_t p);

// entries[i][j] is indexed by (row class H, column class K).
struct ClassTable {
  std::vector<SubgroupClass> classes;
  std::vector<std::vector<std::uint64_t>> entries;

  RationalMatrix matrix() const { return RationalMatrix::from_integers(entries); }
};

ClassTable table_of_marks(const FiniteGroup& g, std::vector<SubgroupClass> classes);
ClassTable modified_table(const FiniteGroup& g, std::vector<SubgroupClass> classes);
ClassTable table_of_marks_p_radical(const FiniteGroup& g, std::uint32_t p);
ClassTable modified_table_p_radical(const FiniteGroup& g, std::uint32_t p);

// Zeta matrix of the orbit category restricted to all p-radical subgroups
// (not collapsed to classes), rows/columns grouped by class in table order.
struct SubgroupTable {
  std::vector<Subgroup> subgroups;
  std::vector<std::size_t> class_of;
  RationalMatrix zeta;
};
SubgroupTable orbit_zeta_p_radical(const FiniteGroup& g, std::uint32_t p);

// Reduced Euler characteristic of the poset of nontrivial p-subgroups.
Rational chi_tilde_p_poset(const FiniteGroup& g, std::uint32_t p);

std::uint64_t count_p_singular_brute(const FiniteGroup& g, std::uint32_t p);
std::uint64_t count_p_singular_cyclic(const FiniteGroup& g, std::uint32_t p);
std::uint64_t count_p_singular_euler(const FiniteGroup& g, std::uint32_t p);

// Per-class data for a p-radical class [K].
struct RadicalClassInfo {
  SubgroupClass cls;
  std::size_t normalizer_order;
  std::size_t quotient_order;   // |N_G(K)/K|
  Rational chi_tilde_quotient;  // chi~(S^{p+*}(N_G(K)/K))
  Rational weight() const { return -chi_tilde_quotient; }
};
std::vector<RadicalClassInfo> radical_class_info(const FiniteGroup& g, std::uint32_t p);

struct Verdict {
  bool passed = true;
  std::vector<std::pair<std::string, std::string>> witnesses;

  void note(std::string key, std::string value) {
    witnesses.emplace_back(std::move(key), std::move(value));
  }
};

// #{g : g^n = e} divisible by n. Throws NotADivisor when n does not divide |G|.
Verdict frobenius_check(const FiniteGroup& g, std::uint64_t n);
// Frobenius for every divisor n of |G|.
Verdict frobenius_all_divisors(const FiniteGroup& g);
// |G|_p divides chi~(S_G^{p+*}).
Verdict brown_check(const FiniteGroup& g, std::uint32_t p);
// Sum over all p-radical K of -chi~(S^{p+*}(N(K)/K)) equals 1.
Verdict check_radical_sum(const FiniteGroup& g, std::uint32_t p);
// Row sums of the modified table against the weights equal 1 for every
// radical class H. Non-radical p-subgroup rows are recorded, not judged.
Verdict check_radical_rows(const FiniteGroup& g, std::uint32_t p);
// |G_p| + chi~(S_G^{p+*}) + sum over nontrivial radical classes = 0, plus
// the two divisibility facts about each summand.
Verdict check_chiOG_balance(const FiniteGroup& g, std::uint32_t p);

struct PSingularReport {
  std::string group;
  std::uint32_t prime = 0;
  std::size_t order = 0;
  std::uint64_t p_part = 0;
  std::uint64_t count_brute = 0;
  std::uint64_t count_cyclic = 0;
  std::uint64_t count_euler = 0;
  std::vector<RadicalClassInfo> classes;
  ClassTable tom;
  ClassTable modified_tom;
  std::vector<Rational> weighting_tom;
  std::vector<Rational> weighting_modified;
  Rational chi_tom;
  Verdict frobenius;
  Verdict brown;
  Verdict radical_sum;
  Verdict radical_rows;
  Verdict chiOG;

  bool counts_agree() const { return count_brute == count_cyclic && count_cyclic == count_euler; }
  bool all_passed() const;
};

PSingularReport analyze(const FiniteGroup& g, std::uint32_t p);

}  // namespace orbit_euler
