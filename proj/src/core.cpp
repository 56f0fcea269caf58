#include "coxeter/core.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "cache.hpp"

namespace coxeter {

namespace {

std::string trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::optional<unsigned long> parse_unsigned(const std::string& tok) {
  unsigned long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

// ---------------------------------------------------------------------------
// CoxeterSystem

CoxeterSystem::CoxeterSystem(std::vector<std::vector<BondOrder>> bonds,
                             std::vector<std::string> names, Limits limits)
    : bonds_(std::move(bonds)),
      names_(std::move(names)),
      limits_(limits),
      cache_(std::make_shared<detail::Cache>()) {
  const std::size_t n = bonds_.size();
  if (n == 0) throw DomainError("CoxeterSystem: rank must be at least 1");
  if (n > 64) throw DomainError("CoxeterSystem: rank " + std::to_string(n) + " exceeds 64");
  for (std::size_t i = 0; i < n; ++i) {
    if (bonds_[i].size() != n)
      throw DomainError("CoxeterSystem: row " + std::to_string(i + 1) + " has " +
                        std::to_string(bonds_[i].size()) + " entries, expected " +
                        std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto where = "row " + std::to_string(i + 1) + ", column " + std::to_string(j + 1);
      if (i == j && bonds_[i][j] != 1)
        throw DomainError("CoxeterSystem: diagonal entry at " + where + " must be 1");
      if (i != j && bonds_[i][j] == 1)
        throw DomainError("CoxeterSystem: off-diagonal entry 1 at " + where);
      if (bonds_[i][j] != bonds_[j][i])
        throw DomainError("CoxeterSystem: matrix not symmetric at " + where);
    }
  }
  if (!names_.empty()) {
    if (names_.size() != n)
      throw DomainError("CoxeterSystem: " + std::to_string(names_.size()) +
                        " names given for rank " + std::to_string(n));
    std::unordered_set<std::string> seen;
    for (const auto& name : names_) {
      if (name.empty() || all_digits(name) || name == "e")
        throw DomainError("CoxeterSystem: invalid generator name '" + name + "'");
      if (!seen.insert(name).second)
        throw DomainError("CoxeterSystem: duplicate generator name '" + name + "'");
    }
  }
}

std::strong_ordering operator<=>(const Element& a, const Element& b) {
  if (a.nf.size() != b.nf.size()) return a.nf.size() <=> b.nf.size();
  return a.nf <=> b.nf;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// ---------------------------------------------------------------------------
// Text formats

CoxeterSystem parse_coxeter_matrix(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> lines;  // (line number, content)
  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    lines.emplace_back(lineno, std::move(line));
  }
  if (lines.empty()) throw ParseError("parse_coxeter_matrix: no rank line");

  auto rank = parse_unsigned(lines[0].second);
  if (!rank || *rank == 0)
    throw ParseError("parse_coxeter_matrix: line " + std::to_string(lines[0].first) +
                     ": malformed rank '" + lines[0].second + "'");
  const std::size_t n = *rank;

  std::vector<std::string> names;
  std::size_t significant = lines.size() - 1;
  if (significant > 0 && lines.back().second.rfind("names:", 0) == 0) {
    names = split_ws(std::string_view(lines.back().second).substr(6));
    if (names.size() != n)
      throw ParseError("parse_coxeter_matrix: names line has " + std::to_string(names.size()) +
                       " tokens, expected " + std::to_string(n));
    --significant;
  }
  if (significant != n)
    throw ParseError("parse_coxeter_matrix: rank mismatch: rank " + std::to_string(n) + " but " +
                     std::to_string(significant) + " matrix rows");

  std::vector<std::vector<BondOrder>> bonds(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto tokens = split_ws(lines[i + 1].second);
    if (tokens.size() != n)
      throw ParseError("parse_coxeter_matrix: rank mismatch: row " + std::to_string(i + 1) +
                       " has " + std::to_string(tokens.size()) + " entries, expected " +
                       std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) {
      auto v = parse_unsigned(tokens[j]);
      if (!v || *v > 1'000'000)
        throw ParseError("parse_coxeter_matrix: malformed integer '" + tokens[j] + "' at row " +
                         std::to_string(i + 1) + ", column " + std::to_string(j + 1));
      bonds[i].push_back(static_cast<BondOrder>(*v));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto where = " at row " + std::to_string(i + 1) + ", column " + std::to_string(j + 1);
      if (i == j && bonds[i][j] != 1)
        throw ParseError("parse_coxeter_matrix: diagonal entry must be 1" + where);
      if (i != j && bonds[i][j] == 1)
        throw ParseError("parse_coxeter_matrix: off-diagonal entry 1" + where);
      if (bonds[i][j] != bonds[j][i])
        throw ParseError("parse_coxeter_matrix: matrix not symmetric" + where);
    }
  }
  try {
    return CoxeterSystem(std::move(bonds), std::move(names));
  } catch (const ParseError&) {
    throw;
  } catch (const DomainError& e) {
    throw ParseError(std::string("parse_coxeter_matrix: ") + e.what());
  }
}

CoxeterSystem load_coxeter_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open group file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_coxeter_matrix(buf.str());
}

Word parse_word(const CoxeterSystem& sys, std::string_view text) {
  auto tokens = split_ws(text);
  if (tokens.size() == 1 && tokens[0] == "e") return {};
  Word w;
  for (const auto& tok : tokens) {
    const auto& names = sys.names();
    if (auto it = std::find(names.begin(), names.end(), tok); it != names.end()) {
      w.push_back(static_cast<Generator>(it - names.begin()));
      continue;
    }
    auto v = parse_unsigned(tok);
    if (!v || *v == 0 || *v > sys.rank())
      throw ParseError("parse_word: '" + tok + "' is not a generator of this rank-" +
                       std::to_string(sys.rank()) + " system");
    w.push_back(static_cast<Generator>(*v - 1));
  }
  return w;
}

std::string format_word(const CoxeterSystem& sys, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += sys.names().empty() ? std::to_string(w[i] + 1) : sys.names()[w[i]];
  }
  return out;
}

void check_word(const CoxeterSystem& sys, const Word& w) {
  for (auto s : w) {
    if (s >= sys.rank())
      throw DomainError("invalid generator index " + std::to_string(s) + " for rank " +
                        std::to_string(sys.rank()));
  }
}

// ---------------------------------------------------------------------------
// Braid moves

namespace detail {

namespace {

bool has_braid_move(const CoxeterSystem& sys, const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const Generator a = w[i], b = w[i + 1];
    if (a == b) continue;
    const BondOrder m = sys.bond(a, b);
    if (m == kInfiniteBond || i + m > w.size()) continue;
    bool alternating = true;
    for (std::size_t k = 2; k < m && alternating; ++k)
      alternating = w[i + k] == ((k % 2 == 0) ? a : b);
    if (alternating) return true;
  }
  return false;
}

}  // namespace

std::vector<Word> closure_of(const CoxeterSystem& sys, const Word& w) {
  if (!has_braid_move(sys, w)) return {w};
  std::unordered_set<Word, WordHash> seen{w};
  std::vector<Word> stack{w};
  const std::size_t cap = sys.limits().max_closure;
  while (!stack.empty()) {
    Word cur = std::move(stack.back());
    stack.pop_back();
    const std::size_t len = cur.size();
    for (std::size_t i = 0; i + 1 < len; ++i) {
      const Generator a = cur[i], b = cur[i + 1];
      if (a == b) continue;
      const BondOrder m = sys.bond(a, b);
      if (m == kInfiniteBond || i + m > len) continue;
      bool alternating = true;
      for (std::size_t k = 2; k < m && alternating; ++k)
        alternating = cur[i + k] == ((k % 2 == 0) ? a : b);
      if (!alternating) continue;
      Word next = cur;
      for (std::size_t k = 0; k < m; ++k) next[i + k] = (k % 2 == 0) ? b : a;
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw ResourceError("braid_closure: closure of [" + format_word(sys, w) +
                              "] exceeds the cap of " + std::to_string(cap) + " words");
        stack.push_back(std::move(next));
      }
    }
  }
  std::vector<Word> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

// ---------------------------------------------------------------------------
// Cache

NodeId Cache::intern_closure_locked(const CoxeterSystem& sys, std::vector<Word> closure) {
  const Word& nf = closure.front();
  if (auto it = index_.find(nf); it != index_.end()) return it->second;
  const auto id = static_cast<NodeId>(nodes_.size());
  Node node;
  node.nf = nf;
  node.closure = std::move(closure);
  node.right.assign(sys.rank(), kUnknown);
  node.left.assign(sys.rank(), kUnknown);
  nodes_.push_back(std::move(node));
  index_.emplace(nodes_.back().nf, id);
  return id;
}

NodeId Cache::find_or_build_locked(const CoxeterSystem& sys, Word w) {
  if (auto it = index_.find(w); it != index_.end()) return it->second;
  return intern_closure_locked(sys, closure_of(sys, w));
}

NodeId Cache::intern(const CoxeterSystem& sys, const Word& nf) {
  std::lock_guard lock(mutex_);
  if (auto it = index_.find(nf); it != index_.end()) return it->second;
  auto closure = closure_of(sys, nf);
  for (const auto& w : closure) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == w[i + 1])
        throw DomainError("element word [" + format_word(sys, nf) + "] is not reduced");
    }
  }
  if (closure.front() != nf)
    throw DomainError("element word [" + format_word(sys, nf) +
                      "] is not in ShortLex normal form");
  return intern_closure_locked(sys, std::move(closure));
}

Word Cache::word(NodeId id) {
  std::lock_guard lock(mutex_);
  return nodes_[id].nf;
}

std::size_t Cache::length(NodeId id) {
  std::lock_guard lock(mutex_);
  return nodes_[id].nf.size();
}

std::vector<Word> Cache::closure(const CoxeterSystem&, NodeId id) {
  std::lock_guard lock(mutex_);
  return nodes_[id].closure;
}

NodeId Cache::multiply_locked(const CoxeterSystem& sys, NodeId id, Generator s, bool on_right) {
  {
    const Node& n = nodes_[id];
    const auto slot = on_right ? n.right[s] : n.left[s];
    if (slot != kUnknown) return static_cast<NodeId>(slot);
  }
  std::vector<Word> shorter;
  for (const auto& w : nodes_[id].closure) {
    if (!w.empty() && (on_right ? w.back() == s : w.front() == s)) {
      shorter.push_back(on_right ? Word(w.begin(), w.end() - 1) : Word(w.begin() + 1, w.end()));
    }
  }
  NodeId target;
  if (!shorter.empty()) {
    // Reduced words of a s (resp. s a) are exactly these; closure order is kept.
    target = intern_closure_locked(sys, std::move(shorter));
  } else {
    Word longer = nodes_[id].nf;
    if (on_right)
      longer.push_back(s);
    else
      longer.insert(longer.begin(), s);
    target = find_or_build_locked(sys, std::move(longer));
  }
  if (on_right) {
    nodes_[id].right[s] = static_cast<std::int32_t>(target);
    nodes_[target].right[s] = static_cast<std::int32_t>(id);
  } else {
    nodes_[id].left[s] = static_cast<std::int32_t>(target);
    nodes_[target].left[s] = static_cast<std::int32_t>(id);
  }
  return target;
}

NodeId Cache::right_mul(const CoxeterSystem& sys, NodeId id, Generator s) {
  std::lock_guard lock(mutex_);
  return multiply_locked(sys, id, s, true);
}

NodeId Cache::left_mul(const CoxeterSystem& sys, Generator s, NodeId id) {
  std::lock_guard lock(mutex_);
  return multiply_locked(sys, id, s, false);
}

NodeId Cache::inverse(const CoxeterSystem& sys, NodeId id) {
  std::lock_guard lock(mutex_);
  std::vector<Word> reversed = nodes_[id].closure;
  for (auto& w : reversed) std::reverse(w.begin(), w.end());
  std::sort(reversed.begin(), reversed.end(), shortlex_less);
  return intern_closure_locked(sys, std::move(reversed));
}

bool Cache::right_descent(const CoxeterSystem& sys, NodeId id, Generator s) {
  std::lock_guard lock(mutex_);
  const auto target = multiply_locked(sys, id, s, true);
  return nodes_[target].nf.size() < nodes_[id].nf.size();
}

bool Cache::left_descent(const CoxeterSystem& sys, NodeId id, Generator s) {
  std::lock_guard lock(mutex_);
  const auto target = multiply_locked(sys, id, s, false);
  return nodes_[target].nf.size() < nodes_[id].nf.size();
}

std::optional<bool> Cache::reflection_flag(NodeId id) {
  std::lock_guard lock(mutex_);
  const auto flag = nodes_[id].reflection;
  if (flag == kUnknown) return std::nullopt;
  return flag == 1;
}

void Cache::set_reflection_flag(NodeId id, bool flag) {
  std::lock_guard lock(mutex_);
  nodes_[id].reflection = flag ? 1 : 0;
}

TLengthMemo Cache::recursive_tlength(NodeId id) {
  std::lock_guard lock(mutex_);
  auto it = recursive_.find(id);
  return it == recursive_.end() ? TLengthMemo{} : it->second;
}

void Cache::set_recursive_tlength(NodeId id, TLengthMemo memo) {
  std::lock_guard lock(mutex_);
  recursive_[id] = std::move(memo);
}

int Cache::recursive_tlength_value(NodeId id) {
  std::lock_guard lock(mutex_);
  auto it = recursive_.find(id);
  return it == recursive_.end() ? kUnknown : it->second.value;
}

int Cache::tlength_exceeds(NodeId id) {
  std::lock_guard lock(mutex_);
  auto it = exceeds_.find(id);
  return it == exceeds_.end() ? -1 : it->second;
}

void Cache::set_tlength_exceeds(NodeId id, int k) {
  std::lock_guard lock(mutex_);
  auto& slot = exceeds_.try_emplace(id, -1).first->second;
  slot = std::max(slot, k);
}

TLengthMemo Cache::oracle_tlength(NodeId id) {
  std::lock_guard lock(mutex_);
  auto it = oracle_.find(id);
  return it == oracle_.end() ? TLengthMemo{} : it->second;
}

void Cache::set_oracle_tlength(NodeId id, TLengthMemo memo) {
  std::lock_guard lock(mutex_);
  oracle_[id] = std::move(memo);
}

void Cache::extend_reflections_locked(const CoxeterSystem& sys, std::size_t max_len) {
  if (max_len > reflections_exhausted_) {
    // Every reflection t with l(t) > 1 has a generator s with l(sts) = l(t) - 2,
    // so conjugating by generators from S while staying under the bound
    // reaches every reflection of length <= max_len.
    std::unordered_set<NodeId> seen;
    std::vector<NodeId> frontier;
    for (std::size_t s = 0; s < sys.rank(); ++s) {
      const auto id = find_or_build_locked(sys, Word{static_cast<Generator>(s)});
      if (seen.insert(id).second) frontier.push_back(id);
    }
    std::vector<NodeId> found = frontier;
    while (!frontier.empty()) {
      std::vector<NodeId> next;
      for (auto t : frontier) {
        for (std::size_t s = 0; s < sys.rank(); ++s) {
          const auto g = static_cast<Generator>(s);
          const auto left = multiply_locked(sys, t, g, false);
          const auto conj = multiply_locked(sys, left, g, true);
          if (nodes_[conj].nf.size() > max_len) continue;
          if (seen.insert(conj).second) {
            next.push_back(conj);
            found.push_back(conj);
            if (found.size() > sys.limits().max_ball)
              throw ResourceError("enumerate_reflections: more than " +
                                  std::to_string(sys.limits().max_ball) +
                                  " reflections of length <= " + std::to_string(max_len));
          }
        }
      }
      frontier = std::move(next);
    }
    std::sort(found.begin(), found.end(),
              [&](NodeId a, NodeId b) { return shortlex_less(nodes_[a].nf, nodes_[b].nf); });
    reflections_ = std::move(found);
    reflections_exhausted_ = max_len;
    reflection_index_.clear();
    for (auto id : reflections_) {
      nodes_[id].reflection = 1;
      reflection_index_.emplace(nodes_[id].nf, id);
    }
  }
}

std::vector<NodeId> Cache::reflections_up_to(const CoxeterSystem& sys, std::size_t max_len) {
  std::lock_guard lock(mutex_);
  extend_reflections_locked(sys, max_len);
  std::vector<NodeId> out;
  for (auto id : reflections_) {
    if (nodes_[id].nf.size() <= max_len) out.push_back(id);
  }
  return out;
}

std::optional<NodeId> Cache::find_reflection(const CoxeterSystem& sys, const Word& nf,
                                             std::size_t max_len) {
  if (nf.size() > max_len) return std::nullopt;
  std::lock_guard lock(mutex_);
  extend_reflections_locked(sys, max_len);
  auto it = reflection_index_.find(nf);
  if (it == reflection_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Cache::size() {
  std::lock_guard lock(mutex_);
  return nodes_.size();
}

Word scratch_product(const CoxeterSystem& sys, NodeId a, const Word& w) {
  auto closure = sys.cache().closure(sys, a);
  for (auto s : w) {
    std::vector<Word> shorter;
    for (auto& u : closure) {
      if (!u.empty() && u.back() == s) {
        u.pop_back();
        shorter.push_back(std::move(u));
      }
    }
    if (!shorter.empty()) {
      closure = std::move(shorter);
    } else {
      Word longer = std::move(closure.front());
      longer.push_back(s);
      closure = closure_of(sys, longer);
    }
  }
  return std::move(closure.front());
}

NodeId node_of(const CoxeterSystem& sys, const Element& a) {
  check_word(sys, a.nf);
  return sys.cache().intern(sys, a.nf);
}

Element element_of(const CoxeterSystem& sys, NodeId id) { return Element{sys.cache().word(id)}; }

NodeId multiply(const CoxeterSystem& sys, NodeId a, NodeId b) {
  const auto letters = sys.cache().word(b);
  for (auto s : letters) a = sys.cache().right_mul(sys, a, s);
  return a;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Word problem

std::vector<Word> braid_closure(const CoxeterSystem& sys, const Word& w) {
  check_word(sys, w);
  return detail::closure_of(sys, w);
}

Element identity() { return Element{}; }
Element generator(Generator s) { return Element{Word{s}}; }

Element normal_form(const CoxeterSystem& sys, const Word& w) {
  check_word(sys, w);
  auto& cache = sys.cache();
  auto id = cache.identity_node(sys);
  for (auto s : w) id = cache.right_mul(sys, id, s);
  return detail::element_of(sys, id);
}

bool is_reduced(const CoxeterSystem& sys, const Word& w) {
  return normal_form(sys, w).length() == w.size();
}

Element product(const CoxeterSystem& sys, const Element& a, const Element& b) {
  check_word(sys, b.nf);
  auto& cache = sys.cache();
  auto id = detail::node_of(sys, a);
  for (auto s : b.nf) id = cache.right_mul(sys, id, s);
  return detail::element_of(sys, id);
}

Element inverse(const CoxeterSystem& sys, const Element& a) {
  return detail::element_of(sys, sys.cache().inverse(sys, detail::node_of(sys, a)));
}

Element right_multiply(const CoxeterSystem& sys, const Element& a, Generator s) {
  check_word(sys, Word{s});
  return detail::element_of(sys, sys.cache().right_mul(sys, detail::node_of(sys, a), s));
}

Element left_multiply(const CoxeterSystem& sys, Generator s, const Element& a) {
  check_word(sys, Word{s});
  return detail::element_of(sys, sys.cache().left_mul(sys, s, detail::node_of(sys, a)));
}

std::vector<Word> reduced_expressions(const CoxeterSystem& sys, const Element& a) {
  return sys.cache().closure(sys, detail::node_of(sys, a));
}

std::vector<Generator> right_descents(const CoxeterSystem& sys, const Element& a) {
  const auto id = detail::node_of(sys, a);
  std::vector<Generator> out;
  for (std::size_t s = 0; s < sys.rank(); ++s) {
    if (sys.cache().right_descent(sys, id, static_cast<Generator>(s)))
      out.push_back(static_cast<Generator>(s));
  }
  return out;
}

std::vector<Generator> left_descents(const CoxeterSystem& sys, const Element& a) {
  const auto id = detail::node_of(sys, a);
  std::vector<Generator> out;
  for (std::size_t s = 0; s < sys.rank(); ++s) {
    if (sys.cache().left_descent(sys, id, static_cast<Generator>(s)))
      out.push_back(static_cast<Generator>(s));
  }
  return out;
}

std::vector<Element> enumerate_ball(const CoxeterSystem& sys, std::optional<std::size_t> radius) {
  auto& cache = sys.cache();
  const std::size_t cap = sys.limits().max_ball;
  std::vector<detail::NodeId> all{cache.identity_node(sys)};
  std::vector<detail::NodeId> layer = all;
  for (std::size_t r = 1; !layer.empty() && (!radius || r <= *radius); ++r) {
    std::unordered_set<detail::NodeId> next;
    for (auto id : layer) {
      for (std::size_t s = 0; s < sys.rank(); ++s) {
        const auto up = cache.right_mul(sys, id, static_cast<Generator>(s));
        if (cache.length(up) == r) next.insert(up);
      }
    }
    layer.assign(next.begin(), next.end());
    all.insert(all.end(), layer.begin(), layer.end());
    if (all.size() > cap)
      throw ResourceError("enumerate_ball: more than " + std::to_string(cap) +
                          " elements within radius " +
                          (radius ? std::to_string(*radius) : std::string("infinity")) +
                          "; the group is or may be infinite");
  }
  std::vector<Element> out;
  out.reserve(all.size());
  for (auto id : all) out.push_back(detail::element_of(sys, id));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Finite type classification

bool is_finite_type(const CoxeterSystem& sys) {
  const std::size_t n = sys.rank();
  std::vector<bool> visited(n, false);
  for (std::size_t root = 0; root < n; ++root) {
    if (visited[root]) continue;
    std::vector<std::size_t> comp{root};
    visited[root] = true;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!visited[j] && j != comp[k] && sys.bond(comp[k], j) != 2) {
          visited[j] = true;
          comp.push_back(j);
        }
      }
    }
    const std::size_t size = comp.size();
    std::vector<std::size_t> degree(n, 0);
    std::size_t edges = 0, labelled = 0;
    BondOrder label = 3;
    for (std::size_t a = 0; a < size; ++a) {
      for (std::size_t b = a + 1; b < size; ++b) {
        const BondOrder m = sys.bond(comp[a], comp[b]);
        if (m == 2) continue;
        if (m == kInfiniteBond) return false;
        ++edges;
        ++degree[comp[a]];
        ++degree[comp[b]];
        if (m > 3) {
          ++labelled;
          label = m;
        }
      }
    }
    if (size <= 2) continue;  // A_1, or I_2(m) with m finite
    if (edges != size - 1) return false;  // contains a cycle
    std::size_t branch = 0, branch_vertex = 0;
    for (auto v : comp) {
      if (degree[v] > 3) return false;
      if (degree[v] == 3) {
        ++branch;
        branch_vertex = v;
      }
    }
    if (branch > 1) return false;
    if (branch == 1) {
      if (labelled > 0) return false;
      // Arm lengths from the branch vertex: D_n is (1,1,k), E_n is (1,2,2..4).
      std::vector<std::size_t> arms;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == branch_vertex || sys.bond(branch_vertex, j) == 2) continue;
        std::size_t prev = branch_vertex, cur = j, arm = 1;
        for (;;) {
          std::size_t nxt = n;
          for (std::size_t k = 0; k < n; ++k) {
            if (k != cur && k != prev && sys.bond(cur, k) != 2) nxt = k;
          }
          if (nxt == n) break;
          prev = cur;
          cur = nxt;
          ++arm;
        }
        arms.push_back(arm);
      }
      std::sort(arms.begin(), arms.end());
      if (arms[0] != 1) return false;
      if (arms[1] == 1) continue;  // D_n
      if (arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) continue;  // E_6, E_7, E_8
      return false;
    }
    // A path.
    if (labelled == 0) continue;
    if (labelled > 1) return false;
    std::vector<std::size_t> path;
    for (auto v : comp) {
      if (degree[v] == 1) {
        path.push_back(v);
        break;
      }
    }
    while (path.size() < size) {
      for (auto v : comp) {
        if (std::find(path.begin(), path.end(), v) == path.end() &&
            sys.bond(path.back(), v) != 2) {
          path.push_back(v);
          break;
        }
      }
    }
    std::size_t position = 0;
    for (std::size_t e = 0; e + 1 < size; ++e) {
      if (sys.bond(path[e], path[e + 1]) > 3) position = e;
    }
    const bool at_end = position == 0 || position + 2 == size;
    if (label == 4 && at_end) continue;                // B_n
    if (label == 4 && size == 4) continue;             // F_4
    if (label == 5 && at_end && size <= 4) continue;   // H_3, H_4
    return false;
  }
  return true;
}

}  // namespace coxeter
