#include "coxeter/absolute_order.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace coxeter {

std::optional<std::size_t> IntervalPoset::index_of(const Element& x) const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] == x) return i;
  }
  return std::nullopt;
}

std::size_t IntervalPoset::rank_of(const Element& x) const {
  auto i = index_of(x);
  if (!i) throw DomainError("IntervalPoset: element is not in the poset");
  return ranks[*i];
}

std::vector<std::size_t> IntervalPoset::rank_sizes() const {
  std::vector<std::size_t> sizes(height() + 1, 0);
  for (auto r : ranks) ++sizes[r];
  return sizes;
}

namespace {

// Reflexive-transitive closure of the cover relation: leq[i][j] iff i <= j.
std::vector<std::vector<char>> order_matrix(const IntervalPoset& p) {
  const std::size_t n = p.elements.size();
  std::vector<std::vector<std::size_t>> up(n);
  for (auto [lo, hi] : p.covers) up[lo].push_back(hi);
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  // Elements are sorted by rank, so a reverse sweep sees upper covers first.
  for (std::size_t i = n; i-- > 0;) {
    leq[i][i] = 1;
    for (auto j : up[i])
      for (std::size_t k = 0; k < n; ++k)
        if (leq[j][k]) leq[i][k] = 1;
  }
  return leq;
}

std::optional<std::size_t> bound_index(const std::vector<std::vector<char>>& leq, std::size_t a,
                                       std::size_t b, BoundKind which) {
  const std::size_t n = leq.size();
  auto below = [&](std::size_t x, std::size_t y) { return which == BoundKind::join ? leq[x][y] : leq[y][x]; };
  std::vector<std::size_t> bounds;
  for (std::size_t z = 0; z < n; ++z)
    if (below(a, z) && below(b, z)) bounds.push_back(z);
  std::optional<std::size_t> result;
  for (auto z : bounds) {
    const bool extremal = std::none_of(bounds.begin(), bounds.end(),
                                       [&](std::size_t y) { return y != z && below(y, z); });
    if (!extremal) continue;
    if (result) return std::nullopt;
    result = z;
  }
  return result;
}

}  // namespace

IntervalPoset build_interval(const CoxeterSystem& sys, const Element& u, const Element& v,
                             std::optional<std::size_t> cutoff, TLengthMode mode) {
  if (cutoff && *cutoff == 0) throw DomainError("build_interval: cutoff must be positive");
  const auto quotient = product(sys, inverse(sys, u), v);
  const std::size_t height = reflection_length(sys, quotient, mode).value;
  if (height > 3)
    throw DomainError("build_interval: l_T(u^-1 v) = " + std::to_string(height) +
                      " exceeds the supported height 3");
  if (!absolute_le(sys, u, v, mode))
    throw DomainError("build_interval: [" + format_word(sys, u.nf) + "] is not below [" +
                      format_word(sys, v.nf) + "] in the absolute order");

  IntervalPoset p;
  p.bottom = u;
  p.top = v;

  std::size_t pool_len = 0;
  if (is_finite_type(sys)) {
    // Reflections are no longer than the longest element.
    const auto group = enumerate_ball(sys, std::nullopt);
    const std::size_t longest = group.back().length();
    pool_len = cutoff ? std::min(*cutoff, longest) : longest;
    p.complete = pool_len == longest;
  } else {
    if (!cutoff)
      throw DomainError("build_interval: the group is infinite; a reflection length cutoff is "
                        "required");
    pool_len = *cutoff;
    p.complete = false;
  }
  if (!p.complete) p.cutoff = pool_len;

  // Layers of [1, quotient]_T.
  std::vector<std::vector<Element>> layers(height + 1);
  layers[0].push_back(identity());
  if (height > 0) layers[height].push_back(quotient);
  if (height >= 2) {
    for (const auto& t : enumerate_reflections(sys, pool_len)) {
      if (has_reflection_length(sys, product(sys, t.elem, quotient), height - 1, mode))
        layers[1].push_back(t.elem);
    }
  }
  if (height == 3) {
    std::set<Element> middle;
    for (std::size_t i = 0; i < layers[1].size(); ++i) {
      for (std::size_t j = 0; j < layers[1].size(); ++j) {
        if (i == j) continue;
        // Distinct reflections multiply to an element of reflection length 2.
        const auto x = product(sys, layers[1][i], layers[1][j]);
        if (middle.count(x)) continue;
        if (has_reflection_length(sys, product(sys, inverse(sys, x), quotient), 1, mode))
          middle.insert(x);
      }
    }
    layers[2].assign(middle.begin(), middle.end());
  }

  // Translate back and sort within each rank.
  std::vector<std::vector<std::pair<Element, Element>>> translated(height + 1);  // (u x, x)
  for (std::size_t r = 0; r <= height; ++r) {
    for (const auto& x : layers[r]) translated[r].emplace_back(product(sys, u, x), x);
    std::sort(translated[r].begin(), translated[r].end());
  }
  std::vector<std::size_t> offset(height + 2, 0);
  for (std::size_t r = 0; r <= height; ++r) {
    offset[r + 1] = offset[r] + translated[r].size();
    for (const auto& [ux, x] : translated[r]) {
      p.elements.push_back(ux);
      p.ranks.push_back(r);
    }
  }

  for (std::size_t r = 0; r < height; ++r) {
    for (std::size_t i = 0; i < translated[r].size(); ++i) {
      for (std::size_t j = 0; j < translated[r + 1].size(); ++j) {
        bool covered = true;
        if (r == 1 && height == 3) {
          // t <= x in rank 1 -> 2 iff t x is a reflection.
          const auto& t = translated[1][i].second;
          const auto& x = translated[2][j].second;
          covered = has_reflection_length(sys, product(sys, t, x), 1, mode);
        }
        if (covered) p.covers.emplace_back(offset[r] + i, offset[r + 1] + j);
      }
    }
  }
  return p;
}

std::optional<Element> meet_join(const IntervalPoset& p, const Element& a, const Element& b,
                                 BoundKind which) {
  const auto ia = p.index_of(a), ib = p.index_of(b);
  if (!ia || !ib) throw DomainError("meet_join: element is not in the poset");
  const auto leq = order_matrix(p);
  if (auto z = bound_index(leq, *ia, *ib, which)) return p.elements[*z];
  return std::nullopt;
}

std::vector<BowtieWitness> find_bowties(const IntervalPoset& p) {
  if (p.height() != 3)
    throw DomainError("find_bowties: poset has height " + std::to_string(p.height()) +
                      ", expected 3");
  std::map<std::size_t, std::vector<std::size_t>> atoms_below;  // rank-2 index -> atoms
  for (auto [lo, hi] : p.covers) {
    if (p.ranks[lo] == 1 && p.ranks[hi] == 2) atoms_below[hi].push_back(lo);
  }
  std::vector<std::size_t> middle;
  for (std::size_t i = 0; i < p.elements.size(); ++i)
    if (p.ranks[i] == 2) middle.push_back(i);

  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> found;
  for (std::size_t a = 0; a < middle.size(); ++a) {
    for (std::size_t b = a + 1; b < middle.size(); ++b) {
      auto lhs = atoms_below[middle[a]], rhs = atoms_below[middle[b]];
      std::sort(lhs.begin(), lhs.end());
      std::sort(rhs.begin(), rhs.end());
      std::vector<std::size_t> common;
      std::set_intersection(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                            std::back_inserter(common));
      for (std::size_t i = 0; i < common.size(); ++i)
        for (std::size_t j = i + 1; j < common.size(); ++j)
          found.emplace_back(common[i], common[j], middle[a], middle[b]);
    }
  }
  // Indices follow ShortLex within each rank.
  std::sort(found.begin(), found.end());
  std::vector<BowtieWitness> out;
  for (auto [t1, t2, w1, w2] : found) {
    out.push_back({{p.elements[t1], p.elements[t2]}, {p.elements[w1], p.elements[w2]}});
  }
  return out;
}

LatticeReport check_lattice(const IntervalPoset& p) {
  LatticeReport report;
  report.bounded_evidence = !p.complete;
  const auto leq = order_matrix(p);
  const std::size_t n = p.elements.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!bound_index(leq, a, b, BoundKind::meet) || !bound_index(leq, a, b, BoundKind::join)) {
        report.witness = std::make_pair(p.elements[a], p.elements[b]);
        return report;
      }
    }
  }
  report.lattice = true;
  return report;
}

std::string to_dot(const CoxeterSystem& sys, const IntervalPoset& p) {
  std::ostringstream out;
  out << "digraph interval {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.elements.size(); ++i) {
    const auto label = p.elements[i].is_identity() ? std::string("e")
                                                   : format_word(sys, p.elements[i].nf);
    out << "  n" << i << " [label=\"" << label << "\"];\n";
  }
  const auto sizes = p.rank_sizes();
  std::size_t next = 0;
  for (std::size_t r = 0; r < sizes.size(); ++r) {
    out << "  { rank=same;";
    for (std::size_t k = 0; k < sizes[r]; ++k) out << " n" << next++ << ";";
    out << " }\n";
  }
  for (auto [lo, hi] : p.covers) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace coxeter
