#include "core/lie.hpp"

#include <bit>

#include "core/arith.hpp"
#include "core/error.hpp"
#include "core/lattice.hpp"
#include "core/poset.hpp"

namespace orbit_euler {
namespace {

const MatrixRealization& realization(const FiniteGroup& k) {
  const auto* m = k.matrices();
  if (m == nullptr)
    throw Error(ErrorCode::kNotLieCatalog, k.origin() + " has no matrix realization");
  return *m;
}

void require_characteristic(const FiniteGroup& k, std::uint32_t p) {
  const auto c = realization(k).field->characteristic();
  if (c != p)
    throw Error(ErrorCode::kInvalidArgument, "prime " + std::to_string(p) +
                                                 " is not the defining characteristic " + std::to_string(c));
}

std::string str(std::uint64_t v) { return std::to_string(v); }

int sign(RootSet j) { return std::popcount(j) % 2 == 0 ? 1 : -1; }

bool contains(RootSet i, RootSet j) { return (i & j) == j; }

}  // namespace

std::uint32_t rank_of(const FiniteGroup& k) { return realization(k).n - 1; }

std::string root_set_name(RootSet j, std::uint32_t rank) {
  std::string s = "{";
  bool first = true;
  for (std::uint32_t i = 0; i < rank; ++i) {
    if (!(j >> i & 1u)) continue;
    if (!first) s += ",";
    s += "a" + std::to_string(i + 1);
    first = false;
  }
  return s + "}";
}

ParabolicDatum parabolic(const FiniteGroup& k, RootSet j) {
  const auto& real = realization(k);
  const std::uint32_t n = real.n;
  if (n == 0 || j >= (RootSet{1} << (n - 1)))
    throw Error(ErrorCode::kInvalidArgument, "root subset out of range");

  std::vector<std::uint32_t> block(n, 0);
  for (std::uint32_t r = 1; r < n; ++r) block[r] = block[r - 1] + ((j >> (r - 1) & 1u) ? 0 : 1);
  std::vector<std::uint32_t> sizes(block[n - 1] + 1, 0);
  for (auto b : block) ++sizes[b];

  BitSet p_bits(k.order()), u_bits(k.order()), l_bits(k.order());
  for (ElementIndex x = 0; x < k.order(); ++x) {
    const auto& m = real.matrices[x];
    bool in_p = true, unipotent = true, diagonal = true;
    for (std::uint32_t r = 0; r < n && in_p; ++r)
      for (std::uint32_t c = 0; c < n; ++c) {
        const auto v = m.at(r, c);
        if (block[r] > block[c]) {
          if (v != 0) { in_p = false; break; }
        } else if (block[r] == block[c]) {
          if (v != (r == c ? 1u : 0u)) unipotent = false;
        } else if (v != 0) {
          diagonal = false;
        }
      }
    if (!in_p) continue;
    p_bits.set(x);
    if (unipotent) u_bits.set(x);
    if (diagonal) l_bits.set(x);
  }
  ParabolicDatum d{j, std::move(sizes), Subgroup(k, std::move(p_bits)), Subgroup(k, std::move(u_bits)),
                   Subgroup(k, std::move(l_bits))};

  const auto p = real.field->characteristic();
  if (d.P.order() != d.U.order() * d.L.order() || intersection(d.U, d.L).order() != 1)
    throw Error(ErrorCode::kInconsistent, "P_J is not U_J L_J");
  if (!(o_p(k, d.P, p) == d.U)) throw Error(ErrorCode::kInconsistent, "U_J is not O_p(P_J)");
  if (!(normalizer(k, d.U) == d.P)) throw Error(ErrorCode::kInconsistent, "P_J is not N_K(U_J)");
  return d;
}

std::vector<ParabolicDatum> all_parabolics(const FiniteGroup& k) {
  const auto r = rank_of(k);
  std::vector<ParabolicDatum> out;
  for (RootSet j = 0; j < (RootSet{1} << r); ++j) out.push_back(parabolic(k, j));
  return out;
}

Verdict verify_lemma_PIPJ(const FiniteGroup& k, std::uint32_t p) {
  require_characteristic(k, p);
  const auto par = all_parabolics(k);
  const auto n = par.size();
  Verdict v;
  for (std::size_t i = 0; i < n; ++i) {
    std::string row;
    for (std::size_t j = 0; j < n; ++j) {
      const auto brute = modified_mark(k, par[i].U, par[j].U);
      const std::uint64_t formula = contains(par[i].J, par[j].J) ? par[i].P.order() / par[j].P.order() : 0;
      if (brute != formula) {
        v.passed = false;
        v.note("mismatch (" + str(i) + "," + str(j) + ")", str(brute) + " vs " + str(formula));
      }
      row += (j ? " " : "") + str(brute);
    }
    v.note("row " + root_set_name(par[i].J, rank_of(k)), row);
  }

  // The U_J form a transversal of the p-radical classes.
  const auto classes = p_radical_classes(k, p);
  std::vector<int> hits(classes.size(), 0);
  for (const auto& d : par) {
    if (!is_p_radical(k, d.U, p)) {
      v.passed = false;
      v.note("not radical", root_set_name(d.J, rank_of(k)));
      continue;
    }
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (const auto& m : classes[c].members)
        if (m == d.U) ++hits[c];
  }
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (hits[c] != 1) {
      v.passed = false;
      v.note("class of order " + str(classes[c].representative.order()) + " hit", str(hits[c]));
    }
  v.note("radical classes", str(classes.size()));
  return v;
}

Verdict verify_solomon(const FiniteGroup& k, std::uint32_t p) {
  require_characteristic(k, p);
  const auto par = all_parabolics(k);
  const auto& top = par.back();
  std::int64_t s = 0;
  for (const auto& d : par) s += sign(d.J) * static_cast<std::int64_t>(top.P.order() / d.P.order());
  Verdict v;
  v.passed = s == static_cast<std::int64_t>(p_part(k.order(), p));
  v.note("alternating sum", std::to_string(s));
  v.note("|K|_p", str(p_part(k.order(), p)));
  return v;
}

Verdict verify_cor_solomon(const FiniteGroup& k, std::uint32_t p, RootSet i) {
  require_characteristic(k, p);
  const auto par = all_parabolics(k);
  if (i >= par.size()) throw Error(ErrorCode::kInvalidArgument, "root subset out of range");
  const auto& pi = par[i];
  std::int64_t first = 0, second = 0;
  for (const auto& d : par) {
    if (!contains(i, d.J)) continue;
    const auto index = static_cast<std::int64_t>(pi.P.order() / d.P.order());
    first += sign(d.J) * index;
    second += sign(d.J) * index * static_cast<std::int64_t>(p_part(d.L.order(), p));
  }
  const auto lp = static_cast<std::int64_t>(p_part(pi.L.order(), p));
  Verdict v;
  v.passed = first == lp && second == 1;
  v.note("I", root_set_name(i, rank_of(k)));
  v.note("sum |P_I:P_J|", std::to_string(first) + " (|L_I|_p = " + std::to_string(lp) + ")");
  v.note("sum |P_I:P_J||L_J|_p", std::to_string(second));
  return v;
}

Verdict verify_solomon_tits(const FiniteGroup& k, std::uint32_t p) {
  require_characteristic(k, p);
  const auto par = all_parabolics(k);
  Verdict v;
  std::vector<Rational> signed_vec;
  for (const auto& d : par) {
    const auto levi = induced_group(k, d.L).group;
    const Rational lhs = -chi_tilde_p_poset(levi, p);
    const Rational rhs = sign(d.J) * static_cast<long>(p_part(d.L.order(), p));
    v.passed = v.passed && lhs == rhs;
    v.note("I=" + root_set_name(d.J, rank_of(k)), to_string(lhs) + " vs " + to_string(rhs));
    signed_vec.push_back(rhs);
  }
  // The signed vector is the weighting of the modified table in J order.
  const auto n = par.size();
  RationalMatrix mod(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      mod.at(i, j) = static_cast<unsigned long>(modified_mark(k, par[i].U, par[j].U));
  const auto w = weighting(mod);
  const bool weighting_matches = w.values == signed_vec;
  v.passed = v.passed && weighting_matches;
  std::string ws;
  for (std::size_t i = 0; i < n; ++i) ws += (i ? " " : "") + to_string(w.values[i]);
  v.note("modified-table weighting", ws);
  return v;
}

Verdict verify_steinberg(const FiniteGroup& k, std::uint32_t p) {
  const auto count = count_p_singular_brute(k, p);
  const auto pp = p_part(k.order(), p);
  Verdict v;
  v.passed = count == pp * pp;
  v.note("|K_p|", str(count));
  v.note("|K|_p^2", str(pp * pp));
  return v;
}

Verdict verify_gen_steinberg(const FiniteGroup& k, std::uint32_t p) {
  require_characteristic(k, p);
  const auto pp = p_part(k.order(), p);
  Verdict v;
  for (const auto& d : all_parabolics(k)) {
    const auto pg = induced_group(k, d.P).group;
    const auto count = count_p_singular_brute(pg, p);
    const auto lhs = count * d.U.order();
    v.passed = v.passed && lhs == pp * pp;
    v.note("J=" + root_set_name(d.J, rank_of(k)), str(count) + "*" + str(d.U.order()) + " = " + str(lhs));
  }
  v.note("|K|_p^2", str(pp * pp));
  return v;
}

Verdict verify_parabolic_lattice(const FiniteGroup& k, std::uint32_t p) {
  require_characteristic(k, p);
  const auto par = all_parabolics(k);
  const auto pp = p_part(k.order(), p);
  Verdict v;
  for (const auto& d : par) {
    if (!par.front().P.is_subgroup_of(d.P) || d.P.order() % pp != 0) {
      v.passed = false;
      v.note("bad parabolic", root_set_name(d.J, rank_of(k)));
    }
    for (const auto& e : par)
      if (intersection(d.P, e.P).order() != par[d.J & e.J].P.order()) {
        v.passed = false;
        v.note("P_I ∩ P_J", root_set_name(d.J, rank_of(k)) + " " + root_set_name(e.J, rank_of(k)));
      }
  }
  v.note("parabolics", str(par.size()));
  return v;
}

bool LieReport::all_passed() const {
  for (const auto& [name, v] : verdicts)
    if (!v.passed) return false;
  return true;
}

LieReport lie_report(const FiniteGroup& k, std::uint32_t p) {
  require_characteristic(k, p);
  LieReport r;
  r.group = k.origin();
  r.prime = p;
  for (const auto& d : all_parabolics(k))
    r.parabolics.push_back(
        ParabolicSummary{d.J, d.P.order(), d.U.order(), d.L.order(), p_part(d.L.order(), p)});
  r.verdicts.emplace_back("lemma_PIPJ", verify_lemma_PIPJ(k, p));
  r.verdicts.emplace_back("solomon", verify_solomon(k, p));
  Verdict cor;
  for (RootSet i = 0; i < r.parabolics.size(); ++i) {
    auto c = verify_cor_solomon(k, p, i);
    cor.passed = cor.passed && c.passed;
    for (auto& w : c.witnesses) cor.witnesses.push_back(std::move(w));
  }
  r.verdicts.emplace_back("cor_solomon", std::move(cor));
  r.verdicts.emplace_back("solomon_tits", verify_solomon_tits(k, p));
  r.verdicts.emplace_back("steinberg", verify_steinberg(k, p));
  r.verdicts.emplace_back("gen_steinberg", verify_gen_steinberg(k, p));
  r.verdicts.emplace_back("parabolic_lattice", verify_parabolic_lattice(k, p));
  return r;
}

}  // namespace orbit_euler
