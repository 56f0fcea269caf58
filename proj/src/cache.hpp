#pragma once

// Memo tables shared by all operations on one CoxeterSystem. Every element
// that the engine has met is interned as a node; nodes carry the reduced
// expressions of the element and lazily filled left/right Cayley edges.

#include <cstdint>
#include <deque>
#include <mutex>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "coxeter/core.hpp"

namespace coxeter::detail {

using NodeId = std::uint32_t;
inline constexpr std::int32_t kUnknown = -1;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(w.data()), w.size()));
  }
};

struct TLengthMemo {
  int value = kUnknown;
  std::vector<NodeId> witness;
  std::size_t bound = 0;
};

class Cache {
 public:
  Cache() = default;

  NodeId intern(const CoxeterSystem& sys, const Word& nf);
  NodeId identity_node(const CoxeterSystem& sys) { return intern(sys, Word{}); }
  Word word(NodeId id);
  std::size_t length(NodeId id);
  std::vector<Word> closure(const CoxeterSystem& sys, NodeId id);

  NodeId right_mul(const CoxeterSystem& sys, NodeId id, Generator s);
  NodeId left_mul(const CoxeterSystem& sys, Generator s, NodeId id);
  NodeId inverse(const CoxeterSystem& sys, NodeId id);
  bool right_descent(const CoxeterSystem& sys, NodeId id, Generator s);
  bool left_descent(const CoxeterSystem& sys, NodeId id, Generator s);

  // Memo slots used by the reflection engine.
  std::optional<bool> reflection_flag(NodeId id);
  void set_reflection_flag(NodeId id, bool flag);
  TLengthMemo recursive_tlength(NodeId id);
  void set_recursive_tlength(NodeId id, TLengthMemo memo);
  int recursive_tlength_value(NodeId id);
  // Largest k with l_T > k established, or -1.
  int tlength_exceeds(NodeId id);
  void set_tlength_exceeds(NodeId id, int k);
  TLengthMemo oracle_tlength(NodeId id);
  void set_oracle_tlength(NodeId id, TLengthMemo memo);

  // Reflections of length <= exhausted bound, in ShortLex order.
  std::vector<NodeId> reflections_up_to(const CoxeterSystem& sys, std::size_t max_len);
  // Member of reflections_up_to(max_len) whose normal form is nf, if any.
  std::optional<NodeId> find_reflection(const CoxeterSystem& sys, const Word& nf,
                                        std::size_t max_len);

  std::size_t size();

 private:
  struct Node {
    Word nf;
    std::vector<Word> closure;  // sorted ShortLex; front() == nf
    std::vector<std::int32_t> right;
    std::vector<std::int32_t> left;
    std::int8_t reflection = kUnknown;
  };

  NodeId intern_closure_locked(const CoxeterSystem& sys, std::vector<Word> closure);
  NodeId find_or_build_locked(const CoxeterSystem& sys, Word w);
  void extend_reflections_locked(const CoxeterSystem& sys, std::size_t max_len);
  NodeId multiply_locked(const CoxeterSystem& sys, NodeId id, Generator s, bool on_right);

  std::mutex mutex_;
  std::deque<Node> nodes_;
  std::unordered_map<Word, NodeId, WordHash> index_;

  std::unordered_map<NodeId, TLengthMemo> recursive_;
  std::unordered_map<NodeId, TLengthMemo> oracle_;
  std::unordered_map<NodeId, int> exceeds_;

  std::vector<NodeId> reflections_;
  std::unordered_map<Word, NodeId, WordHash> reflection_index_;
  std::size_t reflections_exhausted_ = 0;
};

NodeId node_of(const CoxeterSystem& sys, const Element& a);
Element element_of(const CoxeterSystem& sys, NodeId id);
NodeId multiply(const CoxeterSystem& sys, NodeId a, NodeId b);

// Closure of a word under braid moves; raises ResourceError past the cap.
std::vector<Word> closure_of(const CoxeterSystem& sys, const Word& w);

// Normal form of (element a) * w, computed on a private copy of the reduced
// expressions of a. Nothing new is interned, so bulk products in searches do
// not grow the cache.
Word scratch_product(const CoxeterSystem& sys, NodeId a, const Word& w);

}  // namespace coxeter::detail
