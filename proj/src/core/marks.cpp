#include "core/marks.hpp"

#include <algorithm>
#include <numeric>

#include "core/arith.hpp"
#include "core/error.hpp"
#include "core/lattice.hpp"
#include "core/poset.hpp"

namespace orbit_euler {
namespace {

std::string str(std::uint64_t v) { return std::to_string(v); }

void require_prime(std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
}

// H-fixed points on the right cosets Kx: Kxh = Kx for all h in H.
std::uint64_t fixed_cosets(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  BitSet seen(g.order());
  std::uint64_t fixed = 0;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    if (seen.test(x)) continue;
    for (auto y : k.elements()) seen.set(g.mul(y, x));
    bool all = true;
    for (auto e : h.elements()) {
      if (!k.contains(g.mul(g.mul(x, e), g.inv(x)))) {
        all = false;
        break;
      }
    }
    if (all) ++fixed;
  }
  return fixed;
}

// N_G(K)/K as a standalone group.
FiniteGroup normalizer_quotient(const FiniteGroup& g, const Subgroup& k, const Subgroup& n) {
  auto induced = induced_group(g, n);
  std::vector<ElementIndex> local(g.order(), 0);
  for (ElementIndex i = 0; i < induced.embedding.size(); ++i) local[induced.embedding[i]] = i;
  BitSet kbits(induced.group.order());
  for (auto x : k.elements()) kbits.set(local[x]);
  return quotient_group(induced.group, Subgroup::trusted(std::move(kbits))).group;
}

Rational weighted_row(const ClassTable& mod, std::size_t row, const std::vector<RadicalClassInfo>& info) {
  Rational s = 0;
  for (std::size_t j = 0; j < info.size(); ++j)
    s += Rational(Integer(str(mod.entries[row][j]))) * info[j].weight();
  return s;
}

}  // namespace

std::uint64_t mark(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  const auto t = transporter_count(g, h, k);
  if (t % k.order() != 0) throw Error(ErrorCode::kInconsistent, "transporter not a union of K-cosets");
  const auto m = t / k.order();
  if (fixed_cosets(g, h, k) != m) throw Error(ErrorCode::kInconsistent, "mark routes disagree");
  return m;
}

std::uint64_t conjugates_containing(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  std::uint64_t n = 0;
  for (const auto& l : conjugacy_class(g, k).members)
    if (h.is_subgroup_of(l)) ++n;
  return n;
}

std::uint64_t conjugates_contained_in(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  std::uint64_t n = 0;
  for (const auto& l : conjugacy_class(g, k).members)
    if (l.is_subgroup_of(h)) ++n;
  return n;
}

std::uint64_t modified_mark(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  const auto num = mark(g, h, k) * k.order();
  const auto den = normalizer(g, k).order();
  if (num % den != 0) throw Error(ErrorCode::kNonIntegral, "modified mark is not an integer");
  const auto m = num / den;
  if (conjugates_containing(g, h, k) != m)
    throw Error(ErrorCode::kInconsistent, "modified mark disagrees with supergroup count");
  return m;
}

std::vector<SubgroupClass> radical_classes_for_tables(const FiniteGroup& g, std::uint32_t p) {
  auto classes = p_radical_classes(g, p);
  std::stable_sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.representative.order() != b.representative.order())
      return a.representative.order() > b.representative.order();
    return a.representative.bits() < b.representative.bits();
  });
  return classes;
}

ClassTable table_of_marks(const FiniteGroup& g, std::vector<SubgroupClass> classes) {
  const auto n = classes.size();
  std::vector<std::vector<std::uint64_t>> e(n, std::vector<std::uint64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[i][j] = mark(g, classes[i].representative, classes[j].representative);
  return ClassTable{std::move(classes), std::move(e)};
}

ClassTable modified_table(const FiniteGroup& g, std::vector<SubgroupClass> classes) {
  const auto n = classes.size();
  std::vector<std::vector<std::uint64_t>> e(n, std::vector<std::uint64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      e[i][j] = modified_mark(g, classes[i].representative, classes[j].representative);
  return ClassTable{std::move(classes), std::move(e)};
}

ClassTable table_of_marks_p_radical(const FiniteGroup& g, std::uint32_t p) {
  return table_of_marks(g, radical_classes_for_tables(g, p));
}

ClassTable modified_table_p_radical(const FiniteGroup& g, std::uint32_t p) {
  return modified_table(g, radical_classes_for_tables(g, p));
}

SubgroupTable orbit_zeta_p_radical(const FiniteGroup& g, std::uint32_t p) {
  SubgroupTable t;
  const auto classes = radical_classes_for_tables(g, p);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (const auto& m : classes[c].members) {
      t.subgroups.push_back(m);
      t.class_of.push_back(c);
    }
  const auto n = t.subgroups.size();
  t.zeta = RationalMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t.zeta.at(i, j) = Rational(Integer(str(mark(g, t.subgroups[i], t.subgroups[j]))));
  return t;
}

Rational chi_tilde_p_poset(const FiniteGroup& g, std::uint32_t p) {
  return reduced_euler_poset(nontrivial_p_subgroup_poset(g, p).poset);
}

std::uint64_t count_p_singular_brute(const FiniteGroup& g, std::uint32_t p) {
  require_prime(p);
  const auto pp = p_part(g.order(), p);
  std::uint64_t by_power = 0;
  std::uint64_t by_order = 0;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    if (g.power(x, pp) == g.identity()) ++by_power;
    if (is_power_of(g.element_order(x), p)) ++by_order;
  }
  if (by_power != by_order) throw Error(ErrorCode::kInconsistent, "p-singular tests disagree");
  return by_power;
}

std::uint64_t count_p_singular_cyclic(const FiniteGroup& g, std::uint32_t p) {
  require_prime(p);
  const Rational inv_p(1, p);
  Rational total = inv_p;
  for (const auto& c : cyclic_p_subgroups(g, p))
    total += (1 - inv_p) * static_cast<unsigned long>(c.order());
  if (!is_integral(total)) throw Error(ErrorCode::kNonIntegral, "cyclic-subgroup count " + to_string(total));
  return total.get_num().get_ui();
}

std::vector<RadicalClassInfo> radical_class_info(const FiniteGroup& g, std::uint32_t p) {
  std::vector<RadicalClassInfo> out;
  for (auto& cls : radical_classes_for_tables(g, p)) {
    const auto n = normalizer(g, cls.representative);
    const auto q = normalizer_quotient(g, cls.representative, n);
    auto chi = chi_tilde_p_poset(q, p);
    out.push_back(RadicalClassInfo{std::move(cls), n.order(), q.order(), std::move(chi)});
  }
  return out;
}

std::uint64_t count_p_singular_euler(const FiniteGroup& g, std::uint32_t p) {
  require_prime(p);
  Rational total = 0;
  for (const auto& c : radical_class_info(g, p))
    total += c.weight() * static_cast<unsigned long>(c.cls.representative.order() * c.cls.length());
  if (!is_integral(total) || sgn(total) < 0)
    throw Error(ErrorCode::kNonIntegral, "Euler count " + to_string(total));
  return total.get_num().get_ui();
}

Verdict frobenius_check(const FiniteGroup& g, std::uint64_t n) {
  if (n == 0 || g.order() % n != 0)
    throw Error(ErrorCode::kNotADivisor, std::to_string(n) + " does not divide " + std::to_string(g.order()));
  std::uint64_t solutions = 0;
  for (ElementIndex x = 0; x < g.order(); ++x)
    if (g.power(x, n) == g.identity()) ++solutions;
  Verdict v;
  v.passed = solutions % n == 0;
  v.note("n=" + str(n), str(solutions));
  return v;
}

Verdict frobenius_all_divisors(const FiniteGroup& g) {
  Verdict all;
  for (auto n : divisors(g.order())) {
    auto v = frobenius_check(g, n);
    all.passed = all.passed && v.passed;
    for (auto& w : v.witnesses) all.witnesses.push_back(std::move(w));
  }
  return all;
}

namespace {

Verdict brown(std::size_t order, std::uint32_t p, const Rational& chi) {
  const auto pp = p_part(order, p);
  Verdict v;
  v.passed = is_integral(chi) && chi.get_num() % Integer(str(pp)) == 0;
  v.note("p_part", str(pp));
  v.note("chi_tilde", to_string(chi));
  return v;
}

}  // namespace

Verdict brown_check(const FiniteGroup& g, std::uint32_t p) {
  require_prime(p);
  return brown(g.order(), p, chi_tilde_p_poset(g, p));
}

namespace {

Verdict radical_sum_check(const std::vector<RadicalClassInfo>& info) {
  Rational s = 0;
  for (const auto& c : info) s += c.weight() * static_cast<unsigned long>(c.cls.length());
  Verdict v;
  v.passed = s == 1;
  v.note("sum", to_string(s));
  return v;
}

Verdict radical_rows_check(const FiniteGroup& g, std::uint32_t p, const std::vector<RadicalClassInfo>& info,
                    const ClassTable& mod) {
  Verdict v;
  for (std::size_t i = 0; i < info.size(); ++i) {
    const auto s = weighted_row(mod, i, info);
    v.passed = v.passed && s == 1;
    v.note("row " + str(i) + " (order " + str(info[i].cls.representative.order()) + ")", to_string(s));
  }
  // Non-radical p-subgroups: reported only.
  const auto subs = all_p_subgroups(g, p);
  for (const auto& cls : conjugacy_classes_of_subgroups(g, subs)) {
    if (is_p_radical(g, cls.representative, p)) continue;
    Rational s = 0;
    for (std::size_t j = 0; j < info.size(); ++j)
      s += Rational(Integer(str(modified_mark(g, cls.representative, info[j].cls.representative)))) *
           info[j].weight();
    v.note("non-radical order " + str(cls.representative.order()) + " (informational)", to_string(s));
  }
  return v;
}

Verdict chiOG_balance(const FiniteGroup& g, std::uint32_t p, std::uint64_t gp, const Rational& chi_g,
                      const std::vector<RadicalClassInfo>& info) {
  const auto pp = p_part(g.order(), p);
  Verdict v;
  Rational total = Rational(Integer(str(gp))) + chi_g;
  v.note("|G_p|", str(gp));
  v.note("chi_tilde(S_G)", to_string(chi_g));
  for (const auto& c : info) {
    if (c.cls.representative.order() == 1) continue;
    const auto qp = p_part(c.quotient_order, p);
    const auto qpp = p_prime_part(c.quotient_order, p);
    const Rational first = c.chi_tilde_quotient / static_cast<unsigned long>(qp);
    if (g.order() % qpp != 0) {
      v.passed = false;
      v.note("non-divisor", str(qpp));
      continue;
    }
    const auto second = g.order() / qpp;
    if (!is_integral(first)) {
      v.passed = false;
      v.note("non-integral chi~/|Q|_p at order " + str(c.cls.representative.order()), to_string(first));
    }
    if (second % pp != 0) {
      v.passed = false;
      v.note("|G|/|Q|_p' not divisible by |G|_p", str(second));
    }
    const Rational term = first * static_cast<unsigned long>(second);
    v.note("term order " + str(c.cls.representative.order()), to_string(term));
    total += term;
  }
  v.passed = v.passed && total == 0;
  v.note("balance", to_string(total));
  return v;
}

std::vector<SubgroupClass> classes_of(const std::vector<RadicalClassInfo>& info) {
  std::vector<SubgroupClass> classes;
  for (const auto& c : info) classes.push_back(c.cls);
  return classes;
}

}  // namespace

Verdict check_radical_sum(const FiniteGroup& g, std::uint32_t p) {
  return radical_sum_check(radical_class_info(g, p));
}

Verdict check_radical_rows(const FiniteGroup& g, std::uint32_t p) {
  const auto info = radical_class_info(g, p);
  return radical_rows_check(g, p, info, modified_table(g, classes_of(info)));
}

Verdict check_chiOG_balance(const FiniteGroup& g, std::uint32_t p) {
  return chiOG_balance(g, p, count_p_singular_brute(g, p), chi_tilde_p_poset(g, p), radical_class_info(g, p));
}

bool PSingularReport::all_passed() const {
  return counts_agree() && frobenius.passed && brown.passed && radical_sum.passed && radical_rows.passed &&
         chiOG.passed;
}

PSingularReport analyze(const FiniteGroup& g, std::uint32_t p) {
  require_prime(p);
  PSingularReport r;
  r.group = g.origin();
  r.prime = p;
  r.order = g.order();
  r.p_part = p_part(g.order(), p);
  r.count_brute = count_p_singular_brute(g, p);
  r.count_cyclic = count_p_singular_cyclic(g, p);
  r.classes = radical_class_info(g, p);
  Rational euler = 0;
  for (const auto& c : r.classes)
    euler += c.weight() * static_cast<unsigned long>(c.cls.representative.order() * c.cls.length());
  if (!is_integral(euler) || sgn(euler) < 0)
    throw Error(ErrorCode::kNonIntegral, "Euler count " + to_string(euler));
  r.count_euler = euler.get_num().get_ui();

  const auto classes = classes_of(r.classes);
  r.tom = table_of_marks(g, classes);
  r.modified_tom = modified_table(g, classes);
  r.weighting_tom = weighting(r.tom.matrix()).values;
  r.weighting_modified = weighting(r.modified_tom.matrix()).values;
  r.chi_tom = euler_characteristic(r.tom.matrix());

  const auto chi_g = chi_tilde_p_poset(g, p);
  r.frobenius = frobenius_all_divisors(g);
  r.brown = brown(g.order(), p, chi_g);
  r.radical_sum = radical_sum_check(r.classes);
  r.radical_rows = radical_rows_check(g, p, r.classes, r.modified_tom);
  r.chiOG = chiOG_balance(g, p, r.count_brute, chi_g, r.classes);
  return r;
}

}  // namespace orbit_euler
