#pragma once

// Reflections, inversion sets, reflection length and the absolute order.

#include <optional>
#include <vector>

#include "coxeter/core.hpp"

namespace coxeter {

/// An element of T together with a palindromic reduced expression, which
/// exhibits it as a conjugate u s u^-1 of a generator.
struct Reflection {
  Element elem;
  Word palindrome;

  friend bool operator==(const Reflection& a, const Reflection& b) { return a.elem == b.elem; }
  friend auto operator<=>(const Reflection& a, const Reflection& b) { return a.elem <=> b.elem; }
};

/// Returns the certificate when `a` is a reflection. The candidate palindrome
/// is built from the first half of the normal form, t1..t(n+1) tn..t1, and
/// compared with `a`.
std::optional<Reflection> is_reflection(const CoxeterSystem& sys, const Element& a);

/// Turns an odd-length reduced expression t1..t(2n+1) of a reflection into the
/// palindrome t1..t(n+1) tn..t1. Throws DomainError if `w` is not reduced, has
/// even length, or does not represent a reflection.
Word palindromize(const CoxeterSystem& sys, const Word& w);

/// {t in T : l(t) <= max_len}, sorted ShortLex.
std::vector<Reflection> enumerate_reflections(const CoxeterSystem& sys, std::size_t max_len);

struct InversionSet {
  Element owner;
  std::vector<Reflection> members;  // sorted ShortLex
};

/// Left inversions {t : l(t a) < l(a)}, built from the prefixes of nf(a).
InversionSet inversion_set(const CoxeterSystem& sys, const Element& a);
/// Same set built from a chosen reduced expression of the owner.
InversionSet inversion_set_of_word(const CoxeterSystem& sys, const Word& reduced);

enum class TLengthMode { recursive, oracle, cross_checked };

struct TLengthResult {
  std::size_t value = 0;
  std::vector<Reflection> witness;  // product equals the queried element
  TLengthMode mode = TLengthMode::cross_checked;
};

/// Reflection length l_T(a).
///
/// recursive: l_T(1) = 0, otherwise 1 + min over left inversions t of
/// l_T(t a), memoized.
/// oracle: iterative deepening over products of reflections of length at
/// most `oracle_bound` (default 2 l(a) - 1). Throws DomainError when no
/// factorization exists within the bound.
/// cross_checked: runs both and throws InvariantError if they disagree.
TLengthResult reflection_length(const CoxeterSystem& sys, const Element& a,
                                TLengthMode mode = TLengthMode::cross_checked,
                                std::optional<std::size_t> oracle_bound = std::nullopt);

/// Decides l_T(a) == k. The oracle side only searches factorizations into
/// at most k reflections, so large values of l_T are never materialized.
bool has_reflection_length(const CoxeterSystem& sys, const Element& a, std::size_t k,
                           TLengthMode mode = TLengthMode::cross_checked);

/// u <=_T v iff l_T(u) + l_T(u^-1 v) = l_T(v).
bool absolute_le(const CoxeterSystem& sys, const Element& u, const Element& v,
                 TLengthMode mode = TLengthMode::cross_checked);

const char* to_string(TLengthMode mode);
std::optional<TLengthMode> parse_tlength_mode(std::string_view text);

}  // namespace coxeter
