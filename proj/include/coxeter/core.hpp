#pragma once

// Coxeter systems given by a bond matrix, with the word problem solved by
// braid-move rewriting (Tits). No geometric representation is used anywhere
// in the engine.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxeter/errors.hpp"

namespace coxeter {

using Generator = std::uint8_t;
using Word = std::vector<Generator>;

/// Bond order m_st; the value 0 encodes m_st = infinity, as in group files.
using BondOrder = unsigned;
inline constexpr BondOrder kInfiniteBond = 0;

struct Limits {
  std::size_t max_closure = 1'000'000;
  std::size_t max_ball = 100'000;
};

namespace detail {
class Cache;
}

class CoxeterSystem {
 public:
  /// Validates `bonds` (symmetric, unit diagonal, off-diagonal >= 2 or
  /// kInfiniteBond) and `names` (empty, or one distinct label per generator).
  explicit CoxeterSystem(std::vector<std::vector<BondOrder>> bonds,
                         std::vector<std::string> names = {}, Limits limits = {});

  std::size_t rank() const { return bonds_.size(); }
  BondOrder bond(Generator s, Generator t) const { return bonds_[s][t]; }
  const std::vector<std::vector<BondOrder>>& bonds() const { return bonds_; }
  const std::vector<std::string>& names() const { return names_; }

  const Limits& limits() const { return limits_; }
  void set_limits(Limits limits) { limits_ = limits; }

  detail::Cache& cache() const { return *cache_; }

 private:
  std::vector<std::vector<BondOrder>> bonds_;
  std::vector<std::string> names_;
  Limits limits_;
  // Shared by copies: they describe the same group.
  std::shared_ptr<detail::Cache> cache_;
};

/// A group member, stored as its ShortLex-least reduced expression.
struct Element {
  Word nf;

  std::size_t length() const { return nf.size(); }
  bool is_identity() const { return nf.empty(); }

  friend bool operator==(const Element&, const Element&) = default;
  friend std::strong_ordering operator<=>(const Element& a, const Element& b);
};

/// ShortLex order on words: shorter first, then lexicographic by index.
bool shortlex_less(const Word& a, const Word& b);

/// Parses the group file format: '#' comment lines, rank n, n rows of n
/// integers (0 = infinity), optional trailing "names: ..." line.
CoxeterSystem parse_coxeter_matrix(std::string_view text);
CoxeterSystem load_coxeter_file(const std::string& path);

/// Whitespace-separated 1-based indices or declared names. Empty text is the
/// identity.
Word parse_word(const CoxeterSystem& sys, std::string_view text);
/// Names when the system declares them, 1-based indices otherwise.
std::string format_word(const CoxeterSystem& sys, const Word& w);

void check_word(const CoxeterSystem& sys, const Word& w);

/// Every word reachable from `w` by braid moves, sorted ShortLex.
std::vector<Word> braid_closure(const CoxeterSystem& sys, const Word& w);

bool is_reduced(const CoxeterSystem& sys, const Word& w);
Element normal_form(const CoxeterSystem& sys, const Word& w);
Element identity();
Element generator(Generator s);

Element product(const CoxeterSystem& sys, const Element& a, const Element& b);
Element inverse(const CoxeterSystem& sys, const Element& a);
Element right_multiply(const CoxeterSystem& sys, const Element& a, Generator s);
Element left_multiply(const CoxeterSystem& sys, Generator s, const Element& a);

/// All reduced expressions of `a`, sorted ShortLex.
std::vector<Word> reduced_expressions(const CoxeterSystem& sys, const Element& a);

/// Generators s with l(a s) < l(a) (right) or l(s a) < l(a) (left).
std::vector<Generator> right_descents(const CoxeterSystem& sys, const Element& a);
std::vector<Generator> left_descents(const CoxeterSystem& sys, const Element& a);

/// {w : l(w) <= radius}, sorted ShortLex. A missing radius means the whole
/// group, which terminates only for finite W; the ball cap guards it.
std::vector<Element> enumerate_ball(const CoxeterSystem& sys,
                                    std::optional<std::size_t> radius);

/// Finite-type test from the Coxeter graph classification: every connected
/// component is one of A_n, B_n, D_n, E_6..8, F_4, H_3, H_4 or I_2(m).
bool is_finite_type(const CoxeterSystem& sys);

}  // namespace coxeter
