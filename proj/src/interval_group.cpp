#include "coxeter/interval_group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace coxeter {

namespace {

enum class Side { left, right };

// The divisor quotient: u^-1 w on the left side, w u^-1 on the right.
Element cofactor(const CoxeterSystem& sys, const Element& w, const Element& u, Side side) {
  return side == Side::left ? product(sys, inverse(sys, u), w) : product(sys, w, inverse(sys, u));
}

std::vector<Element> divisors(const CoxeterSystem& sys, const Element& w, std::size_t height,
                              const std::vector<Reflection>& pool, Side side, TLengthMode mode) {
  std::set<Element> out{identity()};
  if (height == 0) return {out.begin(), out.end()};
  out.insert(w);
  // Any factor of a rank-2 divisor is itself a divisor of rank 1, on either side.
  std::vector<Element> atoms;
  if (height >= 2) {
    for (const auto& t : pool) {
      if (has_reflection_length(sys, cofactor(sys, w, t.elem, side), height - 1, mode))
        atoms.push_back(t.elem);
    }
    out.insert(atoms.begin(), atoms.end());
  }
  if (height == 3) {
    for (const auto& a : atoms) {
      for (const auto& b : atoms) {
        if (a == b) continue;
        const auto x = product(sys, a, b);
        if (out.count(x)) continue;
        if (has_reflection_length(sys, cofactor(sys, w, x, side), 1, mode)) out.insert(x);
      }
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

DivisorReport divisor_balance(const CoxeterSystem& sys, const Element& w,
                              std::optional<std::size_t> cutoff, TLengthMode mode) {
  if (cutoff && *cutoff == 0) throw DomainError("divisor_balance: cutoff must be positive");
  const std::size_t height = reflection_length(sys, w, mode).value;
  if (height > 3)
    throw DomainError("divisor_balance: l_T(w) = " + std::to_string(height) +
                      " exceeds the supported value 3");
  DivisorReport report;
  std::size_t pool_len = 0;
  if (is_finite_type(sys)) {
    const std::size_t longest = enumerate_ball(sys, std::nullopt).back().length();
    pool_len = cutoff ? std::min(*cutoff, longest) : longest;
    report.truncated = pool_len < longest;
  } else {
    if (!cutoff)
      throw DomainError("divisor_balance: the group is infinite; a reflection length cutoff is "
                        "required");
    pool_len = *cutoff;
    report.truncated = true;
  }
  const auto pool = enumerate_reflections(sys, pool_len);
  report.left = divisors(sys, w, height, pool, Side::left, mode);
  report.right = divisors(sys, w, height, pool, Side::right, mode);
  report.balanced = report.left == report.right;
  return report;
}

Presentation emit_presentation(const CoxeterSystem& sys, const IntervalPoset& p) {
  if (!p.bottom.is_identity())
    throw DomainError("emit_presentation: interval must start at the identity");
  if (!p.complete)
    throw DomainError("emit_presentation: interval is truncated at reflection length " +
                      std::to_string(p.cutoff.value_or(0)) + "; a presentation needs all of it");
  if (const auto report = check_lattice(p); !report.lattice)
    throw DomainError("emit_presentation: interval is not a lattice");

  Presentation pres;
  std::map<Element, std::size_t> rank;
  for (std::size_t i = 0; i < p.elements.size(); ++i) {
    if (p.elements[i].is_identity()) continue;
    pres.generators.push_back(p.elements[i]);
    rank.emplace(p.elements[i], p.ranks[i]);
  }
  std::sort(pres.generators.begin(), pres.generators.end());
  std::map<Element, std::size_t> index;
  for (std::size_t i = 0; i < pres.generators.size(); ++i) index.emplace(pres.generators[i], i);

  for (std::size_t a = 0; a < pres.generators.size(); ++a) {
    for (std::size_t b = 0; b < pres.generators.size(); ++b) {
      const auto c = product(sys, pres.generators[a], pres.generators[b]);
      auto it = index.find(c);
      if (it == index.end()) continue;
      if (rank[pres.generators[a]] + rank[pres.generators[b]] != rank[c]) continue;
      pres.relations.push_back({a, b, it->second});
    }
  }
  std::sort(pres.relations.begin(), pres.relations.end());
  return pres;
}

std::string serialize(const CoxeterSystem& sys, const Presentation& pres) {
  std::ostringstream out;
  out << "generators: " << pres.generators.size() << "\n";
  for (std::size_t i = 0; i < pres.generators.size(); ++i)
    out << "g" << i + 1 << " := " << format_word(sys, pres.generators[i].nf) << "\n";
  out << "relations:\n";
  for (const auto& [a, b, c] : pres.relations)
    out << "g" << a + 1 << " g" << b + 1 << " = g" << c + 1 << "\n";
  return out.str();
}

}  // namespace coxeter
