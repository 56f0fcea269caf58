#include "coxeter/dihedral.hpp"

#include <algorithm>
#include <set>

namespace coxeter {

RankTwoElement make_rank_two(const CoxeterSystem& sys, const Reflection& t, const Reflection& t2) {
  if (t == t2)
    throw DomainError("make_rank_two: reflections coincide ([" + format_word(sys, t.elem.nf) +
                      "])");
  return RankTwoElement{product(sys, t.elem, t2.elem), t, t2};
}

std::size_t alternating_exponent(const CoxeterSystem& sys, const Element& w, Generator s,
                                 Generator t) {
  check_word(sys, Word{s, t});
  const auto inner = right_multiply(sys, left_multiply(sys, s, w), t);  // w' = s w t
  std::vector<std::string> failures;
  if (w.length() != inner.length() + 2)
    failures.push_back("l(w) = " + std::to_string(w.length()) + " but l(s w t) = " +
                       std::to_string(inner.length()));
  if (!is_reflection(sys, left_multiply(sys, s, inner)))
    failures.push_back("s w' is not a reflection");
  if (!is_reflection(sys, right_multiply(sys, inner, t)))
    failures.push_back("w' t is not a reflection");
  if (!failures.empty()) {
    std::string msg = "alternating_exponent: hypotheses fail for w = [" + format_word(sys, w.nf) +
                      "], s = " + format_word(sys, {s}) + ", t = " + format_word(sys, {t}) + ":";
    for (const auto& f : failures) msg += " " + f + ";";
    throw DomainError(msg);
  }
  if (s == t)
    throw InvariantError("alternating_exponent: hypotheses hold with s = t for [" +
                         format_word(sys, w.nf) + "]");
  Word alternating;
  for (std::size_t n = 1; 2 * n <= w.length(); ++n) {
    alternating.push_back(s);
    alternating.push_back(t);
    if (is_reduced(sys, alternating) && normal_form(sys, alternating) == w) return n;
  }
  throw InvariantError("alternating_exponent: no (st)^n equals [" + format_word(sys, w.nf) + "]");
}

bool refl_in_max_dihedral(const CoxeterSystem& sys, const Reflection& t, const RankTwoElement& w) {
  return is_reflection(sys, product(sys, t.elem, w.elem)).has_value();
}

bool member_max_dihedral(const CoxeterSystem& sys, const Element& x, const RankTwoElement& w) {
  if (x.is_identity()) return true;
  if (auto r = is_reflection(sys, x)) return refl_in_max_dihedral(sys, *r, w);
  // A rotation of W_w times a reflection of W_w is a reflection of W_w.
  if (auto r = is_reflection(sys, product(sys, w.first.elem, x)))
    return refl_in_max_dihedral(sys, *r, w);
  return false;
}

MaxDihedral enumerate_R_w(const CoxeterSystem& sys, const RankTwoElement& w, std::size_t max_len) {
  MaxDihedral out;
  out.core = w;
  out.exhausted_to = max_len;
  for (auto& r : enumerate_reflections(sys, max_len)) {
    if (refl_in_max_dihedral(sys, r, w)) out.known_reflections.push_back(std::move(r));
  }
  return out;
}

std::vector<Reflection> dihedral_reflections(const CoxeterSystem& sys, const Reflection& r1,
                                             const Reflection& r2, std::size_t max_len) {
  std::set<Reflection> found;
  const auto step = product(sys, r1.elem, r2.elem);
  auto rotation = identity();  // (r1 r2)^k
  const std::size_t last = max_len + r1.elem.length() + r2.elem.length();
  for (std::size_t k = 0; k <= last; ++k) {
    // (r1 r2)^k r1 and r2 (r1 r2)^k
    for (const auto& candidate :
         {product(sys, rotation, r1.elem), product(sys, r2.elem, rotation)}) {
      if (candidate.length() <= max_len) found.insert(*is_reflection(sys, candidate));
    }
    rotation = product(sys, rotation, step);
    if (rotation.is_identity()) break;
  }
  return {found.begin(), found.end()};
}

std::pair<Reflection, Reflection> canonical_pair(const CoxeterSystem& sys, MaxDihedral& handle) {
  const std::set<Reflection> known(handle.known_reflections.begin(),
                                   handle.known_reflections.end());
  std::vector<Reflection> candidates;
  for (const auto& r : handle.known_reflections) {
    const auto inversions = inversion_set(sys, r.elem);
    const auto inside = std::count_if(inversions.members.begin(), inversions.members.end(),
                                      [&](const Reflection& q) { return known.count(q) > 0; });
    if (inside == 1) candidates.push_back(r);
  }
  if (candidates.size() != 2)
    throw DomainError("canonical_pair: found " + std::to_string(candidates.size()) +
                      " canonical candidates for w = [" + format_word(sys, handle.core.elem.nf) +
                      "] within length " + std::to_string(handle.exhausted_to) +
                      "; bound too small or inconsistent, retry with a larger max_len");
  const auto generated =
      dihedral_reflections(sys, candidates[0], candidates[1], handle.exhausted_to);
  if (std::vector<Reflection>(known.begin(), known.end()) != generated)
    throw InvariantError("canonical_pair: pair ([" + format_word(sys, candidates[0].elem.nf) +
                         "], [" + format_word(sys, candidates[1].elem.nf) +
                         "]) does not generate the known part of R_w for w = [" +
                         format_word(sys, handle.core.elem.nf) + "]");
  handle.canonical_pair = std::make_pair(candidates[0], candidates[1]);
  return *handle.canonical_pair;
}

std::pair<Reflection, Reflection> canonical_pair(const CoxeterSystem& sys, const RankTwoElement& w,
                                                 std::size_t max_len) {
  auto handle = enumerate_R_w(sys, w, max_len);
  return canonical_pair(sys, handle);
}

}  // namespace coxeter
