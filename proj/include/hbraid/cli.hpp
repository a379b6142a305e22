#pragma once

// Command-line front end. run_command() does all the work in-process and
// returns the exit code with captured stdout/stderr, so it can be driven from
// tests; tools/hbraid_cli.cpp is a thin wrapper around it.
//
// Exit codes: 0 success/pass, 1 verification failure, 2 usage error,
// 3 resource overflow.

#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hbraid/dehornoy.hpp"
#include "hbraid/extension.hpp"
#include "hbraid/io.hpp"
#include "hbraid/magnus.hpp"
#include "hbraid/perm.hpp"
#include "hbraid/presentation.hpp"
#include "hbraid/smith.hpp"
#include "hbraid/todd_coxeter.hpp"
#include "hbraid/verify.hpp"
#include "hbraid/word.hpp"

namespace hbraid {

struct CommandResult {
  int exit = 0;
  std::string out;
  std::string err;
};

namespace cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_overflow = 3;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct PresentationFlags {
  std::string family;
  int n = 0;
  int g = 1;
  bool punctured = false;
  std::optional<int> lh_bound;
  bool aux = false;
  std::string input;
};

inline void add_presentation_flags(CLI::App* app, PresentationFlags& f) {
  app->add_option("--family", f.family, "surface|homotopy|goldsmith|pure|symmetric|quotient|extension");
  app->add_option("-n", f.n, "number of strands");
  app->add_option("-g", f.g, "genus")->capture_default_str();
  app->add_flag_callback("--closed", [&f] { f.punctured = false; }, "closed surface (default)");
  app->add_flag("--punctured", f.punctured, "drop the surface relator R3");
  app->add_option("--lh-bound", f.lh_bound, "length bound for the LH / H_n families (required where used)");
  app->add_flag("--aux", f.aux, "homotopy family: keep a_{i,r}, t_{j,k} with R7..R9");
  app->add_option("-i,--input", f.input, "read a presentation (JSON or text) instead; '-' is stdin");
}

inline std::string slurp(const std::string& path, const std::string& stdin_text) {
  if (path == "-") return stdin_text;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline Presentation parse_presentation_any(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_presentation_json(text);
  return parse_presentation_text(text);
}

inline bool family_needs_bound(const std::string& f) {
  return f == "homotopy" || f == "goldsmith" || f == "pure" || f == "quotient" || f == "extension";
}

inline int require_bound(const PresentationFlags& f) {
  if (!f.lh_bound) throw UsageError("--lh-bound is required for the " + f.family + " family (no default truncation)");
  if (*f.lh_bound < 0) throw UsageError("--lh-bound must be >= 0");
  return *f.lh_bound;
}

inline void check_presentation_flags(const PresentationFlags& f) {
  if (!f.input.empty()) return;
  if (f.family.empty()) throw UsageError("--family or --input is required");
  static const std::vector<std::string> known{"surface", "homotopy", "goldsmith", "pure", "symmetric", "quotient", "extension"};
  if (std::find(known.begin(), known.end(), f.family) == known.end()) throw UsageError("unknown family '" + f.family + "'");
  if (f.n < 1) throw UsageError("-n must be >= 1");
  if (family_needs_bound(f.family)) require_bound(f);
}

inline Presentation build_presentation(const PresentationFlags& f, const std::string& stdin_text) {
  if (!f.input.empty()) return parse_presentation_any(slurp(f.input, stdin_text));
  const bool closed = !f.punctured;
  if (f.family == "surface") return surface_braid_presentation(f.n, f.g);
  if (f.family == "homotopy") return homotopy_generalized_presentation(f.n, f.g, closed, require_bound(f), f.aux);
  if (f.family == "goldsmith") return goldsmith_presentation(f.n, require_bound(f));
  if (f.family == "pure") return pure_homotopy_presentation(f.n, f.g, closed, require_bound(f));
  if (f.family == "symmetric") return symmetric_presentation(f.n);
  if (f.family == "quotient") return homotopy_quotient(surface_braid_presentation(f.n, f.g), require_bound(f));
  if (f.family == "extension") return assemble_extension(homotopy_extension_data(f.n, f.g, closed, require_bound(f)));
  throw UsageError("unknown family '" + f.family + "'");
}

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) out.push_back(line);
  }
  return out;
}

inline int max_sigma_index(const std::vector<Word>& ws) {
  int m = 0;
  for (const auto& w : ws)
    for (const auto& l : w.letters())
      if (l.sym.kind == SymbolKind::Sigma) m = std::max(m, l.sym.i);
  return m;
}

// Rank for the Magnus oracle: the largest k among atoms x1, x2, ...
inline int max_atom_rank(const std::vector<Word>& ws) {
  int m = 0;
  for (const auto& w : ws)
    for (const auto& l : w.letters()) {
      const auto& name = l.sym.name;
      if (l.sym.kind != SymbolKind::Abstract || name.size() < 2 || name[0] != 'x' ||
          !std::all_of(name.begin() + 1, name.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw UnsupportedAlphabet("the Magnus oracle works over atoms x1..xk, got " + to_string(l.sym));
      m = std::max(m, std::stoi(name.substr(1)));
    }
  return m;
}

}  // namespace cli

inline CommandResult run_command(const std::vector<std::string>& args, const std::string& stdin_text = {}) {
  using namespace cli;
  std::ostringstream out, err;
  CLI::App app{"Link-homotopy braid group toolkit", "hbraid"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "print help for every subcommand");

  PresentationFlags pf;
  std::string format;
  std::string output;
  std::optional<std::size_t> fault;
  std::uint64_t step_cap = default_step_cap;

  // pres
  auto* pres = app.add_subcommand("pres", "emit a presentation");
  add_presentation_flags(pres, pf);
  pres->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
  pres->add_option("-o,--output", output, "write to a file instead of stdout");

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  std::string kind = "eq31";
  int h_bound = -1;
  int rank = 0;
  verify->add_option("suite", suite, "purity|abelian|identity|magnus|extension")
      ->required()
      ->check(CLI::IsMember({"purity", "abelian", "identity", "magnus", "extension"}));
  add_presentation_flags(verify, pf);
  verify->add_option("--kind", kind, "identity kind: eq31|eq32|lh-free")->check(CLI::IsMember({"eq31", "eq32", "lh-free"}));
  verify->add_option("--h-bound", h_bound, "length bound for h (identity eq32/lh-free, magnus)");
  verify->add_option("--rank", rank, "free rank for the magnus suite");
  verify->add_option("--inject-fault", fault, "corrupt check item K (0-based) to exercise the failure path");
  verify->add_option("--format", format, "table|json")->check(CLI::IsMember({"table", "json"}));
  verify->add_option("--step-cap", step_cap, "handle-reduction step cap");
  verify->add_flag("--all", "list passing records too");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "reduce or classify words");
  std::string oracle = "free";
  bool compare = false;
  std::vector<std::string> words;
  int degree = 0;
  reduce->add_option("--oracle", oracle, "free|dehornoy|perm|magnus")->check(CLI::IsMember({"free", "dehornoy", "perm", "magnus"}));
  reduce->add_flag("--compare", compare, "dehornoy: compare two braids in the s-ordering");
  reduce->add_option("-n", degree, "perm: number of strands (default: largest s-index + 1)");
  reduce->add_option("--rank", rank, "magnus: rank (default: largest xK index)");
  reduce->add_option("--step-cap", step_cap, "handle-reduction step cap");
  reduce->add_option("words", words, "words in the token grammar; read from stdin (one per line) when absent");

  // tc
  auto* tc = app.add_subcommand("tc", "Todd-Coxeter coset enumeration");
  add_presentation_flags(tc, pf);
  std::vector<std::string> subgroup;
  bool pure_subgroup = false;
  std::size_t max_cosets = default_max_cosets;
  tc->add_option("--subgroup", subgroup, "subgroup generator word (repeatable); none means the trivial subgroup");
  tc->add_flag("--pure-subgroup", pure_subgroup, "use the expanded pure generators a_{i,r}, t_{j,k}");
  tc->add_option("--max-cosets", max_cosets, "coset limit")->capture_default_str();
  tc->add_option("--format", format, "summary|csv")->check(CLI::IsMember({"summary", "csv"}));
  tc->add_option("-o,--output", output, "write the table to a file");

  // h1
  auto* h1c = app.add_subcommand("h1", "abelianization via Smith normal form");
  add_presentation_flags(h1c, pf);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return {code == 0 ? exit_ok : exit_usage, out.str(), err.str()};
  }

  auto write_out = [&](const std::string& text) {
    if (output.empty()) {
      out << text;
      return;
    }
    std::ofstream f(output);
    if (!f) throw UsageError("cannot write " + output);
    f << text;
  };

  try {
    if (pres->parsed()) {
      check_presentation_flags(pf);
      Presentation p = build_presentation(pf, stdin_text);
      write_out(format == "json" ? to_json_string(p) : to_text(p));
      return {exit_ok, out.str(), err.str()};
    }

    if (h1c->parsed()) {
      check_presentation_flags(pf);
      Presentation p = build_presentation(pf, stdin_text);
      out << to_string(h1(p)) << "\n";
      return {exit_ok, out.str(), err.str()};
    }

    if (verify->parsed()) {
      const bool all = verify->count("--all") > 0;
      Report rep;
      if (suite == "purity" || suite == "abelian") {
        check_presentation_flags(pf);
        Presentation p = materialize(build_presentation(pf, stdin_text));
        auto expected = expected_h1(p);
        if (fault) p = inject_fault(p, *fault);
        rep = suite == "purity" ? purity_report(p) : abelian_report(p, expected);
      } else if (suite == "identity") {
        if (pf.n < 2) throw UsageError("verify identity needs -n >= 2");
        IdentityKind k = identity_kind_from_string(kind);
        if (k != IdentityKind::Eq31 && h_bound < 0) throw UsageError("--h-bound is required for --kind " + kind);
        if (k == IdentityKind::LhFreeIdentity && pf.g < 0) throw UsageError("-g must be >= 0");
        IdentityOptions o;
        o.n = pf.n;
        o.g = pf.g;
        o.h_bound = std::max(h_bound, 0);
        o.fault = fault;
        o.step_cap = step_cap;
        rep = identity_check(k, o);
      } else if (suite == "magnus") {
        if (rank < 1) throw UsageError("--rank >= 1 is required for the magnus suite");
        if (h_bound < 0) throw UsageError("--h-bound is required for the magnus suite");
        rep = magnus_lh_report(rank, h_bound, fault);
      } else {
        if (pf.n < 1) throw UsageError("-n must be >= 1");
        int bound = require_bound(pf);
        ExtensionData d = pf.input.empty() ? homotopy_extension_data(pf.n, pf.g, !pf.punctured, bound)
                                           : parse_extension_json(slurp(pf.input, stdin_text));
        Presentation assembled = assemble_extension(d);
        Presentation reduced = reduce_to_surface_generators(assembled);
        if (fault) reduced = inject_fault(reduced, *fault);
        rep = Report("extension");
        std::size_t id = 0;
        for (const auto& r : purity_report(reduced).records()) rep.add(id++, r.label, r.oracle, r.pass, r.witness);
        auto expected = expected_h1(assembled);
        AbelianInvariants got_a = h1(assembled), got_r = h1(reduced);
        rep.add(id++, "H1(assembled)", "smith-normal-form", !expected || got_a == *expected, to_string(got_a));
        rep.add(id++, "H1(reduced)", "smith-normal-form", got_r == got_a, to_string(got_r));
        rep.finalize();
      }
      out << (format == "json" ? rep.to_json().dump(2) + "\n" : rep.to_table(all));
      if (!rep.passed()) {
        const auto* f = rep.first_failure();
        err << "verification failed: " << f->label << " [" << f->oracle << "]";
        if (!f->witness.empty()) err << " witness: " << f->witness;
        err << "\n";
        return {exit_fail, out.str(), err.str()};
      }
      return {exit_ok, out.str(), err.str()};
    }

    if (reduce->parsed()) {
      if (words.empty()) words = split_lines(stdin_text);
      if (words.empty()) throw UsageError("no words given");
      std::vector<Word> ws;
      for (const auto& w : words) ws.push_back(parse_word(w));
      if (compare) {
        if (oracle != "dehornoy") throw UsageError("--compare needs --oracle dehornoy");
        if (ws.size() != 2) throw UsageError("--compare takes exactly two words");
        out << to_string(braid_compare(ws[0], ws[1], step_cap)) << "\n";
        return {exit_ok, out.str(), err.str()};
      }
      for (const auto& w : ws) {
        if (oracle == "free") {
          out << to_string(w) << "\n";
        } else if (oracle == "dehornoy") {
          out << to_string(braid_sign(w, step_cap)) << "\n";
        } else if (oracle == "perm") {
          int n = degree > 0 ? degree : max_sigma_index(ws) + 1;
          out << to_cycle_string(word_permutation(w, n)) << "\n";
        } else {
          int k = rank > 0 ? rank : std::max(1, max_atom_rank(ws));
          out << to_string(magnus_image(w, k)) << "\n";
        }
      }
      return {exit_ok, out.str(), err.str()};
    }

    if (tc->parsed()) {
      check_presentation_flags(pf);
      if (max_cosets < 1) throw UsageError("--max-cosets must be >= 1");
      Presentation p = materialize(build_presentation(pf, stdin_text));
      std::vector<Word> sub;
      for (const auto& s : subgroup) sub.push_back(parse_word(s));
      if (pure_subgroup) {
        for (int i = 1; i <= p.n; ++i)
          for (int r = 1; r <= 2 * p.g; ++r) sub.push_back(expand_a(i, r, p.g));
        for (int j = 1; j <= p.n; ++j)
          for (int k = j + 1; k <= p.n; ++k) sub.push_back(expand_t(j, k));
      }
      err << "note: enumeration terminates only for finite index; infinite-index runs stop at --max-cosets\n";
      CosetTable t = todd_coxeter(p, sub, max_cosets);
      if (!t.closed()) {
        err << "overflow: more than " << max_cosets << " live cosets\n";
        out << "status: overflow\ncosets: " << t.coset_count << "\n";
        return {exit_overflow, out.str(), err.str()};
      }
      if (format == "csv")
        write_out(t.to_csv());
      else
        write_out("status: closed\nindex: " + std::to_string(t.index()) + "\n");
      return {exit_ok, out.str(), err.str()};
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return {exit_usage, out.str(), err.str()};
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return {exit_usage, out.str(), err.str()};
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return {exit_overflow, out.str(), err.str()};
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return {exit_usage, out.str(), err.str()};
  }
  return {exit_usage, out.str(), err.str()};
}

}  // namespace hbraid
