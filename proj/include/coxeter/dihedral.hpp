#pragma once

// Maximal dihedral reflection subgroups W(t, t') = W_w for w = t t'.
//
// For w a product of two distinct reflections, R_w = {t in T : t w in T} is
// the reflection set of the unique maximal dihedral reflection subgroup
// containing any two reflections whose product is w. Membership is always
// decided by that criterion; the subgroup itself is never generated.

#include <optional>
#include <utility>
#include <vector>

#include "coxeter/core.hpp"
#include "coxeter/reflection.hpp"

namespace coxeter {

struct RankTwoElement {
  Element elem;
  Reflection first;
  Reflection second;
};

/// w = t t'. Throws DomainError when t == t'.
RankTwoElement make_rank_two(const CoxeterSystem& sys, const Reflection& t, const Reflection& t2);

/// For w' = s w t with l(w) = l(w') + 2 and both s w', w' t reflections,
/// returns n >= 1 such that (st)^n is a reduced expression of w.
///
/// Each hypothesis that fails is reported in the DomainError message. If no n
/// exists up to l(w)/2, or s == t, an InvariantError is raised: the
/// hypotheses force both conclusions.
std::size_t alternating_exponent(const CoxeterSystem& sys, const Element& w, Generator s,
                                 Generator t);

/// t in R_w, i.e. t w is a reflection.
bool refl_in_max_dihedral(const CoxeterSystem& sys, const Reflection& t, const RankTwoElement& w);

/// x in W_w: x = 1, x in R_w, or r x in R_w for r = w.first.
bool member_max_dihedral(const CoxeterSystem& sys, const Element& x, const RankTwoElement& w);

struct MaxDihedral {
  RankTwoElement core;
  std::vector<Reflection> known_reflections;  // R_w truncated at exhausted_to, ShortLex
  std::optional<std::pair<Reflection, Reflection>> canonical_pair;
  std::size_t exhausted_to = 0;
};

/// Members of R_w of length <= max_len. R_w is infinite when W_w is, so the
/// result is a truncation recorded in exhausted_to.
MaxDihedral enumerate_R_w(const CoxeterSystem& sys, const RankTwoElement& w, std::size_t max_len);

/// Detects the canonical simple pair of W_w: the reflections r of R_w whose
/// left inversion set meets R_w only in r. Records it on `handle` and checks
/// that alternating conjugation by the pair produces every known reflection.
/// Throws DomainError unless exactly two candidates appear within the bound.
std::pair<Reflection, Reflection> canonical_pair(const CoxeterSystem& sys, MaxDihedral& handle);
std::pair<Reflection, Reflection> canonical_pair(const CoxeterSystem& sys, const RankTwoElement& w,
                                                 std::size_t max_len);

/// Reflections of the dihedral reflection subgroup generated by r1 and r2
/// with length <= max_len: the alternating products r1, r2, r1 r2 r1, ...
/// Uses that the length in W bounds the length in the subgroup w.r.t. its
/// canonical generators.
std::vector<Reflection> dihedral_reflections(const CoxeterSystem& sys, const Reflection& r1,
                                             const Reflection& r2, std::size_t max_len);

}  // namespace coxeter
