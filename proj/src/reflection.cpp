#include "coxeter/reflection.hpp"

#include <algorithm>
#include <unordered_map>

#include "cache.hpp"

namespace coxeter {

namespace {

using detail::NodeId;

Word mirror_first_half(const Word& w) {
  // w = t1 .. t(2n+1)  ->  t1 .. t(n+1) tn .. t1
  const std::size_t half = w.size() / 2;
  Word p(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(half + 1));
  for (std::size_t i = half; i-- > 0;) p.push_back(w[i]);
  return p;
}

bool reflection_node(const CoxeterSystem& sys, NodeId id) {
  auto& cache = sys.cache();
  if (auto flag = cache.reflection_flag(id)) return *flag;
  const Word nf = cache.word(id);
  bool result = false;
  if (nf.size() % 2 == 1) result = normal_form(sys, mirror_first_half(nf)).nf == nf;
  cache.set_reflection_flag(id, result);
  return result;
}

Reflection make_reflection(const CoxeterSystem& sys, NodeId id) {
  auto nf = sys.cache().word(id);
  auto palindrome = mirror_first_half(nf);
  return Reflection{Element{std::move(nf)}, std::move(palindrome)};
}

std::vector<Reflection> to_reflections(const CoxeterSystem& sys, const std::vector<NodeId>& ids) {
  std::vector<Reflection> out;
  out.reserve(ids.size());
  for (auto id : ids) out.push_back(make_reflection(sys, id));
  return out;
}

// l_T by deleting one letter of nf(a): deleting letter i gives t_i a where
// t_i is the i-th prefix reflection, and l_T(a) = 1 + min_i l_T(t_i a).
// Only values up to `limit` are resolved; larger ones yield nullopt and are
// remembered as lower bounds.
std::optional<int> recursive_tlength_at_most(const CoxeterSystem& sys, NodeId id, int limit) {
  auto& cache = sys.cache();
  if (int known = cache.recursive_tlength_value(id); known != detail::kUnknown)
    return known <= limit ? std::optional<int>(known) : std::nullopt;
  if (cache.tlength_exceeds(id) >= limit) return std::nullopt;

  const Word nf = cache.word(id);
  detail::TLengthMemo memo;
  if (nf.empty()) {
    memo.value = 0;
    cache.set_recursive_tlength(id, memo);
    return limit >= 0 ? std::optional<int>(0) : std::nullopt;
  }
  const bool odd = nf.size() % 2 == 1;
  if (odd && reflection_node(sys, id)) {
    // a is its own left inversion, and t a = 1.
    memo.value = 1;
    memo.witness = {id};
    cache.set_recursive_tlength(id, memo);
    return limit >= 1 ? std::optional<int>(1) : std::nullopt;
  }
  // Parity of l_T is the parity of l, and a is not 1 or a reflection here.
  for (int target = odd ? 3 : 2; target <= limit; target += 2) {
    for (std::size_t i = 0; i < nf.size(); ++i) {
      Word deleted = nf;
      deleted.erase(deleted.begin() + static_cast<std::ptrdiff_t>(i));
      const auto rest = detail::node_of(sys, normal_form(sys, deleted));
      // Smaller values of the rest were excluded by the previous target.
      if (recursive_tlength_at_most(sys, rest, target - 1) != target - 1) continue;
      Word prefix(nf.begin(), nf.begin() + static_cast<std::ptrdiff_t>(i + 1));
      for (std::size_t k = i; k-- > 0;) prefix.push_back(nf[k]);
      memo.value = target;
      memo.witness.push_back(detail::node_of(sys, normal_form(sys, prefix)));
      const auto sub = cache.recursive_tlength(rest).witness;
      memo.witness.insert(memo.witness.end(), sub.begin(), sub.end());
      cache.set_recursive_tlength(id, memo);
      return target;
    }
    cache.set_tlength_exceeds(id, target);
  }
  cache.set_tlength_exceeds(id, limit);
  return std::nullopt;
}

detail::TLengthMemo recursive_tlength(const CoxeterSystem& sys, NodeId id) {
  // l_T(a) never exceeds l(a).
  const int limit = static_cast<int>(sys.cache().length(id));
  if (!recursive_tlength_at_most(sys, id, limit))
    throw InvariantError("reflection_length: letter deletion recursion found no value for [" +
                         format_word(sys, sys.cache().word(id)) + "]");
  return sys.cache().recursive_tlength(id);
}

// Exhaustive search for x as a product of k reflections from a fixed pool.
// Products are formed on scratch copies, so the pool can be large without
// the cache growing with it.
class ProductSearch {
 public:
  // The pool itself is only materialized when products are searched.
  ProductSearch(const CoxeterSystem& sys, std::size_t pool_len, bool products)
      : sys_(sys), pool_len_(pool_len) {
    if (products) pool_ = sys.cache().reflections_up_to(sys, pool_len);
  }

  bool search(const Word& x, std::size_t k, std::vector<NodeId>& witness) const {
    if (k == 0) return x.empty();
    if (k == 1) {
      auto id = sys_.cache().find_reflection(sys_, x, pool_len_);
      if (!id) return false;
      witness.push_back(*id);
      return true;
    }
    for (auto t : pool_) {
      // t * rest = x  <=>  rest = t x
      witness.push_back(t);
      if (search(detail::scratch_product(sys_, t, x), k - 1, witness)) return true;
      witness.pop_back();
    }
    return false;
  }

 private:
  const CoxeterSystem& sys_;
  std::size_t pool_len_;
  std::vector<NodeId> pool_;
};

std::size_t default_bound(std::size_t len) { return len == 0 ? 0 : 2 * len - 1; }

// Smallest k <= max_k with x a product of k reflections of length <= bound.
std::optional<detail::TLengthMemo> oracle_search(const CoxeterSystem& sys, const Word& x,
                                                 std::size_t max_k, std::size_t bound) {
  detail::TLengthMemo memo;
  memo.bound = bound;
  if (x.empty()) {
    memo.value = 0;
    return memo;
  }
  if (max_k == 0 || bound == 0) return std::nullopt;
  // A single factor equal to x has length l(x); longer pool members are
  // only needed for products.
  const std::size_t pool_len = max_k == 1 ? std::min(bound, x.size()) : bound;
  const ProductSearch search(sys, pool_len, max_k > 1);
  for (std::size_t k = x.size() % 2 == 1 ? 1 : 2; k <= max_k; k += 2) {
    std::vector<NodeId> witness;
    if (search.search(x, k, witness)) {
      memo.value = static_cast<int>(k);
      memo.witness = std::move(witness);
      return memo;
    }
  }
  return std::nullopt;
}

detail::TLengthMemo oracle_tlength(const CoxeterSystem& sys, NodeId id,
                                   std::optional<std::size_t> bound_override) {
  auto& cache = sys.cache();
  const Word x = cache.word(id);
  const std::size_t bound = bound_override.value_or(default_bound(x.size()));
  auto memo = cache.oracle_tlength(id);
  if (memo.value != detail::kUnknown && memo.bound == bound) return memo;

  // l_T(a) never exceeds l(a).
  auto found = oracle_search(sys, x, x.size(), bound);
  if (!found)
    throw DomainError("reflection_length: [" + format_word(sys, x) +
                      "] is not a product of at most " + std::to_string(x.size()) +
                      " reflections of length <= " + std::to_string(bound));
  if (!bound_override) cache.set_oracle_tlength(id, *found);
  return *found;
}

void check_witness(const CoxeterSystem& sys, NodeId id, const std::vector<NodeId>& witness) {
  auto acc = sys.cache().identity_node(sys);
  for (auto t : witness) acc = detail::multiply(sys, acc, t);
  if (acc != id)
    throw InvariantError("reflection_length: witness factorization of [" +
                         format_word(sys, sys.cache().word(id)) + "] does not multiply back");
}

}  // namespace

std::optional<Reflection> is_reflection(const CoxeterSystem& sys, const Element& a) {
  const auto id = detail::node_of(sys, a);
  if (!reflection_node(sys, id)) return std::nullopt;
  return make_reflection(sys, id);
}

Word palindromize(const CoxeterSystem& sys, const Word& w) {
  check_word(sys, w);
  const auto a = normal_form(sys, w);
  if (a.length() != w.size())
    throw DomainError("palindromize: input [" + format_word(sys, w) + "] is not reduced");
  if (w.size() % 2 == 0)
    throw DomainError("palindromize: input [" + format_word(sys, w) + "] has even length");
  auto p = mirror_first_half(w);
  if (normal_form(sys, p) != a)
    throw DomainError("palindromize: input [" + format_word(sys, w) +
                      "] does not represent a reflection");
  return p;
}

std::vector<Reflection> enumerate_reflections(const CoxeterSystem& sys, std::size_t max_len) {
  if (max_len == 0) throw DomainError("enumerate_reflections: max_len must be positive");
  return to_reflections(sys, sys.cache().reflections_up_to(sys, max_len));
}

InversionSet inversion_set_of_word(const CoxeterSystem& sys, const Word& reduced) {
  const auto owner = normal_form(sys, reduced);
  if (owner.length() != reduced.size())
    throw DomainError("inversion_set: word [" + format_word(sys, reduced) + "] is not reduced");
  InversionSet out{owner, {}};
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    Word p(reduced.begin(), reduced.begin() + static_cast<std::ptrdiff_t>(i + 1));
    for (std::size_t k = i; k-- > 0;) p.push_back(reduced[k]);
    out.members.push_back(make_reflection(sys, detail::node_of(sys, normal_form(sys, p))));
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

InversionSet inversion_set(const CoxeterSystem& sys, const Element& a) {
  detail::node_of(sys, a);
  return inversion_set_of_word(sys, a.nf);
}

TLengthResult reflection_length(const CoxeterSystem& sys, const Element& a, TLengthMode mode,
                                std::optional<std::size_t> oracle_bound) {
  const auto id = detail::node_of(sys, a);
  TLengthResult result;
  result.mode = mode;
  std::vector<NodeId> witness;
  switch (mode) {
    case TLengthMode::recursive: {
      auto memo = recursive_tlength(sys, id);
      result.value = static_cast<std::size_t>(memo.value);
      witness = std::move(memo.witness);
      break;
    }
    case TLengthMode::oracle: {
      auto memo = oracle_tlength(sys, id, oracle_bound);
      result.value = static_cast<std::size_t>(memo.value);
      witness = std::move(memo.witness);
      break;
    }
    case TLengthMode::cross_checked: {
      auto rec = recursive_tlength(sys, id);
      auto orc = oracle_tlength(sys, id, oracle_bound);
      if (rec.value != orc.value)
        throw InvariantError("reflection_length: recursive value " + std::to_string(rec.value) +
                             " and oracle value " + std::to_string(orc.value) +
                             " disagree on [" + format_word(sys, a.nf) + "]");
      check_witness(sys, id, orc.witness);
      result.value = static_cast<std::size_t>(rec.value);
      witness = std::move(rec.witness);
      break;
    }
  }
  check_witness(sys, id, witness);
  result.witness = to_reflections(sys, witness);
  return result;
}

bool has_reflection_length(const CoxeterSystem& sys, const Element& a, std::size_t k,
                           TLengthMode mode) {
  const auto id = detail::node_of(sys, a);
  std::optional<std::size_t> recursive;
  if (mode != TLengthMode::oracle) {
    // Values above k only matter as "more than k".
    if (auto r = recursive_tlength_at_most(sys, id, static_cast<int>(k)))
      recursive = static_cast<std::size_t>(*r);
    if (mode == TLengthMode::recursive) return recursive == k;
  }
  const auto found = oracle_search(sys, a.nf, k, default_bound(a.length()));
  const bool consistent = recursive ? found && static_cast<std::size_t>(found->value) == *recursive
                                    : !found;
  if (mode == TLengthMode::cross_checked && !consistent)
    throw InvariantError("reflection_length: recursive value " +
                         (recursive ? std::to_string(*recursive) : "> " + std::to_string(k)) +
                         " and oracle search up to " + std::to_string(k) + " (" +
                         (found ? "found " + std::to_string(found->value) : std::string("none")) +
                         ") disagree on [" + format_word(sys, a.nf) + "]");
  return found && static_cast<std::size_t>(found->value) == k;
}

bool absolute_le(const CoxeterSystem& sys, const Element& u, const Element& v, TLengthMode mode) {
  const auto lu = reflection_length(sys, u, mode).value;
  const auto lv = reflection_length(sys, v, mode).value;
  if (lu > lv) return false;
  const auto quotient = product(sys, inverse(sys, u), v);
  return has_reflection_length(sys, quotient, lv - lu, mode);
}

const char* to_string(TLengthMode mode) {
  switch (mode) {
    case TLengthMode::recursive:
      return "recursive";
    case TLengthMode::oracle:
      return "oracle";
    case TLengthMode::cross_checked:
      return "crosscheck";
  }
  return "?";
}

std::optional<TLengthMode> parse_tlength_mode(std::string_view text) {
  if (text == "recursive") return TLengthMode::recursive;
  if (text == "oracle") return TLengthMode::oracle;
  if (text == "crosscheck" || text == "cross-checked") return TLengthMode::cross_checked;
  return std::nullopt;
}

}  // namespace coxeter
