#include "coxeter/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "coxeter/absolute_order.hpp"
#include "coxeter/core.hpp"
#include "coxeter/dihedral.hpp"
#include "coxeter/errors.hpp"
#include "coxeter/interval_group.hpp"
#include "coxeter/reflection.hpp"

namespace coxeter::cli {

namespace {

struct Options {
  std::string group;
  std::string word;
  std::string other;
  std::string bottom;
  std::string top;
  std::size_t cutoff = 9;
  bool cutoff_given = false;
  std::string mode = "crosscheck";
  std::optional<std::size_t> max_closure;
  std::optional<std::size_t> max_ball;
  std::string dot;
  std::string out_path;
};

struct Context {
  CoxeterSystem sys;
  TLengthMode mode;
  const Options& opt;

  Element element(const std::string& text) const { return normal_form(sys, parse_word(sys, text)); }
  std::string show(const Element& a) const { return a.is_identity() ? "e" : format_word(sys, a.nf); }

  // Finite groups are searched exhaustively unless a cutoff is asked for.
  std::optional<std::size_t> cutoff() const {
    if (opt.cutoff_given || !is_finite_type(sys)) return opt.cutoff;
    return std::nullopt;
  }

  Reflection reflection(const std::string& text, const char* flag) const {
    auto r = is_reflection(sys, element(text));
    if (!r) throw DomainError(std::string(flag) + ": [" + text + "] is not a reflection");
    return *r;
  }
};

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot open output file '" + path + "'");
  file << text;
}

std::string require(const std::string& value, const char* flag) {
  if (value.empty()) throw DomainError(std::string("missing required flag ") + flag);
  return value;
}

IntervalPoset interval_of(const Context& ctx) {
  const auto bottom = ctx.opt.bottom.empty() ? identity() : ctx.element(ctx.opt.bottom);
  const auto top = ctx.element(require(ctx.opt.top, "--top"));
  return build_interval(ctx.sys, bottom, top, ctx.cutoff(), ctx.mode);
}

std::string evidence_note(const IntervalPoset& p) {
  if (p.complete) return "";
  return " (bounded evidence, cutoff " + std::to_string(p.cutoff.value_or(0)) + ")";
}

void cmd_reduce(const Context& ctx, std::ostream& out) {
  out << ctx.show(ctx.element(require(ctx.opt.word, "--word"))) << "\n";
}

void cmd_equal(const Context& ctx, std::ostream& out) {
  const bool same =
      ctx.element(require(ctx.opt.word, "--word")) == ctx.element(require(ctx.opt.other, "--other"));
  out << (same ? "true" : "false") << "\n";
}

void cmd_refl(const Context& ctx, std::ostream& out) {
  const auto w = parse_word(ctx.sys, require(ctx.opt.word, "--word"));
  const auto r = is_reflection(ctx.sys, normal_form(ctx.sys, w));
  if (!r) {
    out << "reflection: false\n";
    return;
  }
  // A reduced input is turned into a palindrome directly; otherwise the
  // certificate built from the normal form is shown.
  const auto palindrome = is_reduced(ctx.sys, w) ? palindromize(ctx.sys, w) : r->palindrome;
  out << "reflection: true\npalindrome: " << format_word(ctx.sys, palindrome) << "\n";
}

void cmd_reflections(const Context& ctx, std::ostream& out) {
  const auto all = enumerate_reflections(ctx.sys, ctx.opt.cutoff);
  for (const auto& r : all) out << format_word(ctx.sys, r.elem.nf) << "\n";
  out << "reflections: " << all.size() << " (length <= " << ctx.opt.cutoff << ")\n";
}

void cmd_tlength(const Context& ctx, std::ostream& out) {
  out << reflection_length(ctx.sys, ctx.element(require(ctx.opt.word, "--word")), ctx.mode).value
      << "\n";
}

void cmd_leq(const Context& ctx, std::ostream& out) {
  const auto u = ctx.element(require(ctx.opt.bottom, "--bottom"));
  const auto v = ctx.element(require(ctx.opt.top, "--top"));
  out << (absolute_le(ctx.sys, u, v, ctx.mode) ? "true" : "false") << "\n";
}

void cmd_dihedral(const Context& ctx, std::ostream& out) {
  const auto w = make_rank_two(ctx.sys, ctx.reflection(require(ctx.opt.word, "--word"), "--word"),
                               ctx.reflection(require(ctx.opt.other, "--other"), "--other"));
  auto handle = enumerate_R_w(ctx.sys, w, ctx.opt.cutoff);
  out << "w: " << ctx.show(w.elem) << "\n";
  out << "reflections (length <= " << handle.exhausted_to << "): " << handle.known_reflections.size()
      << "\n";
  for (const auto& r : handle.known_reflections) out << "  " << format_word(ctx.sys, r.elem.nf) << "\n";
  const auto [first, second] = canonical_pair(ctx.sys, handle);
  out << "canonical pair: " << format_word(ctx.sys, first.elem.nf) << " | "
      << format_word(ctx.sys, second.elem.nf) << "\n";
}

void cmd_interval(const Context& ctx, std::ostream& out) {
  const auto p = interval_of(ctx);
  out << "elements: " << p.elements.size() << ", ranks:";
  for (auto n : p.rank_sizes()) out << " " << n;
  out << ", complete: " << (p.complete ? "true" : "false") << evidence_note(p) << "\n";
  for (std::size_t i = 0; i < p.elements.size(); ++i)
    out << p.ranks[i] << ": " << ctx.show(p.elements[i]) << "\n";
  if (!ctx.opt.dot.empty()) write_text(ctx.opt.dot, to_dot(ctx.sys, p), out);
}

void cmd_lattice(const Context& ctx, std::ostream& out) {
  const auto p = interval_of(ctx);
  const auto report = check_lattice(p);
  const std::size_t bowties = p.height() == 3 ? find_bowties(p).size() : 0;
  out << "lattice: " << (report.lattice ? "true" : "false") << ", elements: " << p.elements.size()
      << ", bowties: " << bowties << evidence_note(p) << "\n";
  if (report.witness)
    out << "witness: " << ctx.show(report.witness->first) << " | " << ctx.show(report.witness->second)
        << "\n";
}

void cmd_bowties(const Context& ctx, std::ostream& out) {
  const auto p = interval_of(ctx);
  const auto found = find_bowties(p);
  for (const auto& b : found)
    out << ctx.show(b.low.first) << " | " << ctx.show(b.low.second) << " < " << ctx.show(b.high.first)
        << " | " << ctx.show(b.high.second) << "\n";
  out << "bowties: " << found.size() << evidence_note(p) << "\n";
}

void cmd_balance(const Context& ctx, std::ostream& out) {
  const auto w = ctx.element(require(ctx.opt.word, "--word"));
  const auto report = divisor_balance(ctx.sys, w, ctx.cutoff(), ctx.mode);
  out << "balanced: " << (report.balanced ? "true" : "false") << ", left: " << report.left.size()
      << ", right: " << report.right.size();
  if (report.truncated) out << " (bounded evidence, cutoff " << ctx.opt.cutoff << ")";
  out << "\n";
}

void cmd_present(const Context& ctx, std::ostream& out) {
  const auto p = interval_of(ctx);
  out << serialize(ctx.sys, emit_presentation(ctx.sys, p));
}

using Handler = std::function<void(const Context&, std::ostream&)>;

struct Subcommand {
  const char* name;
  const char* help;
  Handler handler;
};

const std::vector<Subcommand>& subcommands() {
  static const std::vector<Subcommand> table = {
      {"reduce", "Print the ShortLex normal form of --word", cmd_reduce},
      {"equal", "Decide whether --word and --other represent the same element", cmd_equal},
      {"refl", "Test --word for being a reflection and print a palindromic expression", cmd_refl},
      {"reflections", "List reflections of length <= --cutoff", cmd_reflections},
      {"tlength", "Print the reflection length of --word", cmd_tlength},
      {"leq", "Decide --bottom <=_T --top in the absolute order", cmd_leq},
      {"dihedral", "Reflections of the maximal dihedral subgroup of --word * --other and its canonical pair",
       cmd_dihedral},
      {"interval", "Build the interval [--bottom, --top]_T", cmd_interval},
      {"lattice", "Check the lattice property of [--bottom, --top]_T", cmd_lattice},
      {"bowties", "List bowties of a height-3 interval [--bottom, --top]_T", cmd_bowties},
      {"balance", "Compare left and right divisors of --word", cmd_balance},
      {"present", "Emit the interval group presentation of [1, --top]_T", cmd_present},
  };
  return table;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Coxeter group word problem, reflection length and absolute order intervals",
               "coxeter"};
  app.require_subcommand(1);
  std::map<std::string, CLI::App*> apps;
  for (const auto& sub : subcommands()) {
    auto* cmd = app.add_subcommand(sub.name, sub.help);
    cmd->add_option("--group", opt.group, "Coxeter matrix file")->required();
    cmd->add_option("--word", opt.word, "Word: 1-based indices or generator names");
    cmd->add_option("--other", opt.other, "Second word");
    cmd->add_option("--bottom", opt.bottom, "Lower element (default: identity)");
    cmd->add_option("--top", opt.top, "Upper element");
    cmd->add_option("--cutoff", opt.cutoff, "Reflection length bound")->capture_default_str();
    cmd->add_option("--mode", opt.mode, "Reflection length mode")
        ->check(CLI::IsMember({"recursive", "oracle", "crosscheck"}))
        ->capture_default_str();
    cmd->add_option("--max-closure", opt.max_closure, "Cap on braid-move closures");
    cmd->add_option("--max-ball", opt.max_ball, "Cap on enumerated elements");
    cmd->add_option("--dot", opt.dot, "Write the interval as DOT to this path ('-' for stdout)");
    cmd->add_option("--out", opt.out_path, "Write output to this path instead of stdout");
    apps.emplace(sub.name, cmd);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  }

  try {
    for (const auto& sub : subcommands()) {
      CLI::App* cmd = apps.at(sub.name);
      if (!cmd->parsed()) continue;
      opt.cutoff_given = cmd->count("--cutoff") > 0;
      if (opt.cutoff == 0) throw DomainError("--cutoff must be positive");
      auto sys = load_coxeter_file(opt.group);
      auto limits = sys.limits();
      if (opt.max_closure) limits.max_closure = *opt.max_closure;
      if (opt.max_ball) limits.max_ball = *opt.max_ball;
      sys.set_limits(limits);
      const Context ctx{std::move(sys), *parse_tlength_mode(opt.mode), opt};
      // Output is assembled before anything is emitted.
      std::ostringstream buffer;
      sub.handler(ctx, buffer);
      write_text(opt.out_path, buffer.str(), out);
    }
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInvariant;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kOk;
}

}  // namespace coxeter::cli
