#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "core/marks.hpp"
#include "core/subgroup.hpp"

namespace orbit_euler {

// Subsets J of the fundamental roots {a_1, ..., a_{n-1}} are bitmasks:
// bit i-1 set means a_i in J. a_i in J merges the blocks on either side of
// the gap between rows i and i+1, so P_J stabilizes the flag whose jumps
// sit at the roots outside J.
using RootSet = std::uint32_t;

struct ParabolicDatum {
  RootSet J = 0;
  std::vector<std::uint32_t> blocks;  // block sizes, top-left first
  Subgroup P;  // block upper triangular
  Subgroup U;  // identity diagonal blocks
  Subgroup L;  // block diagonal
};

std::uint32_t rank_of(const FiniteGroup& k);  // n - 1

// Throws NotLieCatalog if k has no matrix realization. Checks
// |P| = |U||L|, U ∩ L = 1, U = O_p(P) and P = N_K(U); throws Inconsistent
// otherwise.
ParabolicDatum parabolic(const FiniteGroup& k, RootSet j);
// All 2^{n-1} standard parabolics, indexed by J.
std::vector<ParabolicDatum> all_parabolics(const FiniteGroup& k);

// Modified marks of the U_J two ways: brute force and |P_I : P_J| for
// I ⊇ J, else 0. Also checks that the U_J represent every p-radical class
// exactly once.
Verdict verify_lemma_PIPJ(const FiniteGroup& k, std::uint32_t p);
Verdict verify_solomon(const FiniteGroup& k, std::uint32_t p);
// Both alternating sums for one I.
Verdict verify_cor_solomon(const FiniteGroup& k, std::uint32_t p, RootSet i);
// -chi~(S^{p+*}(L_I)) = (-1)^{|I|} |L_I|_p for every I, and the signed
// vector is the weighting of the modified table.
Verdict verify_solomon_tits(const FiniteGroup& k, std::uint32_t p);
// |K_p| = |K|_p^2. Accepts any group, so non-Lie controls can be run.
Verdict verify_steinberg(const FiniteGroup& k, std::uint32_t p);
// |(P_J)_p| |U_J| = |K|_p^2 for every J.
Verdict verify_gen_steinberg(const FiniteGroup& k, std::uint32_t p);
// B <= P_J, |K|_p divides |P_J|, P_I ∩ P_J = P_{I ∩ J}.
Verdict verify_parabolic_lattice(const FiniteGroup& k, std::uint32_t p);

struct ParabolicSummary {
  RootSet J;
  std::size_t order_P;
  std::size_t order_U;
  std::size_t order_L;
  std::uint64_t levi_p_part;
};

struct LieReport {
  std::string group;
  std::uint32_t prime = 0;
  std::vector<ParabolicSummary> parabolics;
  std::vector<std::pair<std::string, Verdict>> verdicts;
  bool all_passed() const;
};

LieReport lie_report(const FiniteGroup& k, std::uint32_t p);

std::string root_set_name(RootSet j, std::uint32_t rank);

}  // namespace orbit_euler
