#pragma once

// Intervals [u, v]_T of the absolute order, bowtie detection and lattice
// checks for intervals of height at most 3.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxeter/core.hpp"
#include "coxeter/reflection.hpp"

namespace coxeter {

struct IntervalPoset {
  Element bottom;
  Element top;
  std::vector<Element> elements;  // sorted by rank, then ShortLex
  std::vector<std::size_t> ranks;  // ranks[i] = l_T(bottom^-1 elements[i])
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper) indices
  bool complete = false;
  std::optional<std::size_t> cutoff;  // reflection length bound when !complete

  std::size_t height() const { return ranks.empty() ? 0 : ranks.back(); }
  std::optional<std::size_t> index_of(const Element& x) const;
  std::size_t rank_of(const Element& x) const;
  std::vector<std::size_t> rank_sizes() const;
};

/// Builds [u, v]_T for l_T(u^-1 v) <= 3 by working in [1, u^-1 v]_T and
/// translating back by left multiplication with u.
///
/// Rank 1 holds the reflections t <=_T u^-1 v, restricted to l(t) <= cutoff
/// when a cutoff is given; rank 2 holds the products of two distinct atoms
/// lying below the top. The result is complete when the group is finite and
/// no cutoff truncated its reflections. Infinite groups require a cutoff.
IntervalPoset build_interval(const CoxeterSystem& sys, const Element& u, const Element& v,
                             std::optional<std::size_t> cutoff = std::nullopt,
                             TLengthMode mode = TLengthMode::cross_checked);

enum class BoundKind { meet, join };

/// Unique maximal lower bound (meet) or minimal upper bound (join) of a and b
/// within the poset, or nullopt if it does not exist.
std::optional<Element> meet_join(const IntervalPoset& p, const Element& a, const Element& b,
                                 BoundKind which);

struct BowtieWitness {
  std::pair<Element, Element> low;   // rank 1
  std::pair<Element, Element> high;  // rank 2
};

/// Every pair of distinct atoms lying below two distinct rank-2 elements.
/// Requires a height-3 poset.
std::vector<BowtieWitness> find_bowties(const IntervalPoset& p);

struct LatticeReport {
  bool lattice = false;
  std::optional<std::pair<Element, Element>> witness;  // pair lacking a meet or join
  bool bounded_evidence = false;  // verdict about a truncated poset
};

LatticeReport check_lattice(const IntervalPoset& p);

/// Graphviz rendering: one node per element labelled by its normal form
/// ("e" for the identity), one edge per cover, nodes grouped by rank.
std::string to_dot(const CoxeterSystem& sys, const IntervalPoset& p);

}  // namespace coxeter
