#pragma once

// Left/right divisor balance and presentations of interval groups.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "coxeter/absolute_order.hpp"
#include "coxeter/core.hpp"

namespace coxeter {

struct DivisorReport {
  bool balanced = false;
  std::vector<Element> left;   // u with l_T(u) + l_T(u^-1 w) = l_T(w), ShortLex
  std::vector<Element> right;  // u with l_T(w u^-1) + l_T(u) = l_T(w), ShortLex
  bool truncated = false;      // reflections were limited to length <= cutoff
};

/// Compares the left and right divisors of w for l_T(w) <= 3. Both sides are
/// built layer by layer from the same reflection pool: every reflection in a
/// finite group, otherwise the reflections of length <= cutoff.
DivisorReport divisor_balance(const CoxeterSystem& sys, const Element& w,
                              std::optional<std::size_t> cutoff = std::nullopt,
                              TLengthMode mode = TLengthMode::cross_checked);

struct Presentation {
  std::vector<Element> generators;  // nontrivial elements of [1, w]_T, ShortLex
  // {a, b, c}: generators[a] generators[b] = generators[c] with ranks adding.
  std::vector<std::array<std::size_t, 3>> relations;
};

/// One generator per nontrivial element of the interval and one relation per
/// factorization a b = c inside it. Refuses posets that are truncated, not
/// based at the identity, or not lattices.
Presentation emit_presentation(const CoxeterSystem& sys, const IntervalPoset& p);

/// "generators: k", "g<i> := <word>" lines, "relations:", then
/// "g<i> g<j> = g<k>" lines; indices are 1-based.
std::string serialize(const CoxeterSystem& sys, const Presentation& pres);

}  // namespace coxeter
