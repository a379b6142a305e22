#pragma once

// Cross-oracle verification: purity under psi, abelianization, the
// conjugation identities used to transport LH relators between strands, and
// the Magnus check of the LH kernel.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hbraid/dehornoy.hpp"
#include "hbraid/magnus.hpp"
#include "hbraid/perm.hpp"
#include "hbraid/presentation.hpp"
#include "hbraid/smith.hpp"
#include "hbraid/subgroup.hpp"
#include "hbraid/word.hpp"

namespace hbraid {

struct VerdictRecord {
  std::size_t id = 0;
  std::string label;
  std::string oracle;
  bool pass = true;
  std::string witness;
};

// Records may be added in any order; finalize() sorts them stably by id.
class Report {
 public:
  explicit Report(std::string suite = {}) : suite_(std::move(suite)) {}

  void add(VerdictRecord r) { records_.push_back(std::move(r)); }
  void add(std::size_t id, std::string label, std::string oracle, bool pass, std::string witness = {}) {
    records_.push_back({id, std::move(label), std::move(oracle), pass, std::move(witness)});
  }

  Report& finalize() {
    std::stable_sort(records_.begin(), records_.end(),
                     [](const VerdictRecord& a, const VerdictRecord& b) { return a.id < b.id; });
    return *this;
  }

  const std::string& suite() const { return suite_; }
  const std::vector<VerdictRecord>& records() const { return records_; }
  std::size_t fail_count() const {
    return static_cast<std::size_t>(std::count_if(records_.begin(), records_.end(), [](const auto& r) { return !r.pass; }));
  }
  std::size_t pass_count() const { return records_.size() - fail_count(); }
  bool passed() const { return fail_count() == 0; }

  const VerdictRecord* first_failure() const {
    for (const auto& r : records_)
      if (!r.pass) return &r;
    return nullptr;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite_;
    j["passed"] = passed();
    j["summary"] = {{"total", records_.size()}, {"pass", pass_count()}, {"fail", fail_count()}};
    auto recs = nlohmann::ordered_json::array();
    for (const auto& r : records_)
      recs.push_back({{"id", r.id}, {"label", r.label}, {"oracle", r.oracle}, {"pass", r.pass}, {"witness", r.witness}});
    j["records"] = recs;
    return j;
  }

  // Failures are listed in full; passing records are summarised.
  std::string to_table(bool all_records = false) const {
    std::ostringstream out;
    out << "suite: " << suite_ << "\n";
    for (const auto& r : records_) {
      if (r.pass && !all_records) continue;
      out << (r.pass ? "PASS " : "FAIL ") << r.id << "  " << r.label << "  [" << r.oracle << "]";
      if (!r.witness.empty()) out << "  witness: " << r.witness;
      out << "\n";
    }
    out << "total " << records_.size() << ", pass " << pass_count() << ", fail " << fail_count() << "\n";
    out << (passed() ? "PASS" : "FAIL") << "\n";
    return out.str();
  }

 private:
  std::string suite_;
  std::vector<VerdictRecord> records_;
};

// ---------------------------------------------------------------------------
// Abelianization.

inline IntMatrix abelianized_matrix(const std::vector<Symbol>& generators, const std::vector<Relator>& relators) {
  IntMatrix m(relators.size(), generators.size());
  for (std::size_t r = 0; r < relators.size(); ++r)
    for (const auto& l : relators[r].word.letters()) {
      auto it = std::find(generators.begin(), generators.end(), l.sym);
      if (it == generators.end()) throw Error("relator " + relators[r].label + " uses unlisted generator " + to_string(l.sym));
      m(r, static_cast<std::size_t>(it - generators.begin())) += l.exp;
    }
  return m;
}

inline IntMatrix abelianized_matrix(const Presentation& p, std::optional<int> lh_bound = std::nullopt) {
  return abelianized_matrix(p.generators, all_relators(p, lh_bound));
}

namespace detail {

// Drops zero rows before the Smith computation; they do not change the cokernel.
inline IntMatrix nonzero_rows(const IntMatrix& m) {
  std::vector<std::size_t> keep;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) {
        keep.push_back(r);
        break;
      }
  IntMatrix out(keep.size(), m.cols());
  for (std::size_t k = 0; k < keep.size(); ++k)
    for (std::size_t c = 0; c < m.cols(); ++c) out(k, c) = m(keep[k], c);
  return out;
}

inline std::string row_string(const IntMatrix& m, std::size_t r, const std::vector<Symbol>& gens) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (m(r, c) == 0) continue;
    out << (first ? "" : " ") << to_string(gens[c]) << ":" << m(r, c);
    first = false;
  }
  return first ? "0" : out.str();
}

}  // namespace detail

inline AbelianInvariants h1(const Presentation& p, std::optional<int> lh_bound = std::nullopt) {
  return smith_normal_form(detail::nonzero_rows(abelianized_matrix(p, lh_bound)));
}

inline AbelianInvariants make_invariants(std::size_t free_rank, std::vector<int> torsion = {}) {
  AbelianInvariants a;
  a.free_rank = free_rank;
  for (int t : torsion) a.torsion.emplace_back(t);
  return a;
}

// Known abelianizations of the built-in families.
inline std::optional<AbelianInvariants> expected_h1(const Presentation& p) {
  const auto two_g = static_cast<std::size_t>(2 * p.g);
  switch (p.family) {
    case FamilyTag::Surface:
    case FamilyTag::Homotopy:
    case FamilyTag::Quotient:
    case FamilyTag::Extension:
      return p.n >= 2 ? make_invariants(two_g, {2}) : make_invariants(two_g);
    case FamilyTag::Goldsmith: return make_invariants(1);
    case FamilyTag::Pure: return make_invariants(two_g * static_cast<std::size_t>(p.n));
    case FamilyTag::Symmetric: return p.n >= 2 ? make_invariants(0, {2}) : make_invariants(0);
    case FamilyTag::Custom: return std::nullopt;
  }
  return std::nullopt;
}

// Family rows must vanish (commutators) and H_1 must match `expected`.
inline Report abelian_report(const Presentation& p, const std::optional<AbelianInvariants>& expected,
                             std::optional<int> lh_bound = std::nullopt) {
  Report rep("abelianization");
  auto finite = p.relators;
  auto all = all_relators(p, lh_bound);
  IntMatrix m = abelianized_matrix(p.generators, all);
  for (std::size_t r = finite.size(); r < all.size(); ++r) {
    std::string row = detail::row_string(m, r, p.generators);
    rep.add(r, all[r].label, "exponent-sum", row == "0", row == "0" ? "" : "row " + row);
  }
  AbelianInvariants got = smith_normal_form(detail::nonzero_rows(m));
  if (expected) {
    rep.add(all.size(), "H1", "smith-normal-form", got == *expected,
            got == *expected ? to_string(got) : "got " + to_string(got) + ", expected " + to_string(*expected));
  } else {
    rep.add(all.size(), "H1", "smith-normal-form", true, to_string(got));
  }
  return std::move(rep.finalize());
}

// ---------------------------------------------------------------------------
// Purity.

inline Report purity_report(const std::vector<Relator>& relators, int n) {
  Report rep("purity");
  for (std::size_t k = 0; k < relators.size(); ++k) {
    Permutation pi = word_permutation(relators[k].word, n);
    rep.add(k, relators[k].label, "psi", pi.is_identity(), pi.is_identity() ? "" : to_cycle_string(pi));
  }
  return std::move(rep.finalize());
}

inline Report purity_report(const Presentation& p, std::optional<int> lh_bound = std::nullopt) {
  return purity_report(all_relators(p, lh_bound), p.n);
}

// Appends s_1 (or the first generator when there is no s_1) to relator k.
inline std::vector<Relator> inject_fault(std::vector<Relator> relators, std::size_t k, const std::vector<Symbol>& gens) {
  if (k >= relators.size()) throw Error("fault index " + std::to_string(k) + " out of range");
  Symbol extra = gens.empty() ? sigma(1) : gens.front();
  for (const auto& s : gens)
    if (s == sigma(1)) extra = s;
  relators[k].word = relators[k].word * Word::letter(extra, 1, relators[k].word.alphabet());
  relators[k].label += "+fault";
  return relators;
}

inline Presentation inject_fault(const Presentation& p, std::size_t k) {
  Presentation q = materialize(p);
  q.relators = inject_fault(std::move(q.relators), k, q.generators);
  return q;
}

// ---------------------------------------------------------------------------
// Conjugation identities.

enum class IdentityKind { Eq31, Eq32, LhFreeIdentity };

inline std::string to_string(IdentityKind k) {
  switch (k) {
    case IdentityKind::Eq31: return "eq31";
    case IdentityKind::Eq32: return "eq32";
    case IdentityKind::LhFreeIdentity: return "lh-free";
  }
  return "eq31";
}

inline IdentityKind identity_kind_from_string(const std::string& s) {
  if (s == "eq31") return IdentityKind::Eq31;
  if (s == "eq32") return IdentityKind::Eq32;
  if (s == "lh-free" || s == "lh_free_identity") return IdentityKind::LhFreeIdentity;
  throw ParseError("unknown identity kind '" + s + "'");
}

struct IdentityOptions {
  int n = 2;
  int g = 0;
  int h_bound = 0;
  // Corrupt the check with this index (fault injection).
  std::optional<std::size_t> fault;
  std::uint64_t step_cap = default_step_cap;
};

// s_1 s_2 ... s_{len}
inline Word sigma_prefix(int len, Alphabet a = Alphabet::unbounded()) {
  Word w(a);
  for (int k = 1; k <= len; ++k) w = w * Word::letter(sigma(k), 1, a);
  return w;
}

namespace detail {

// t_{i,j} = alpha^-1 t_{1,j} alpha with alpha = s_1 ... s_{i-1}; checked freely and by handle reduction.
inline Report eq31_report(const IdentityOptions& o) {
  if (o.n < 2) throw Error("eq31 needs n >= 2");
  Report rep("identity:eq31");
  std::size_t id = 0;
  for (int i = 1; i <= o.n - 1; ++i)
    for (int j = i + 1; j <= o.n; ++j, ++id) {
      // The off-by-one fault is invisible when j = i + 1: s_i commutes with t_{i,i+1}.
      Word alpha = sigma_prefix(o.fault && *o.fault == id ? i : i - 1);
      Word tij = expand_t(i, j);
      Word t1j = expand_t(1, j);
      Word free_residue = invert(alpha) * t1j * alpha * invert(tij);
      Word braid = alpha * tij * invert(alpha) * invert(t1j);
      bool braid_ok = is_trivial_braid(braid, o.step_cap);
      std::string label = "t" + std::to_string(i) + "." + std::to_string(j);
      rep.add(id, label, "free", free_residue.empty(), free_residue.empty() ? "" : to_string(free_residue));
      rep.add(id, label, "handle", braid_ok, braid_ok ? "" : to_string(handle_reduce(braid, o.step_cap)));
    }
  return std::move(rep.finalize());
}

// Substitutes t_{1,j} := alpha x alpha^-1 (x an abstract atom) and checks
//   [t_{1,j}, t_{1,j}^h] = alpha x alpha^-1 h alpha x alpha^-1 h^-1 alpha x^-1 alpha^-1 h alpha x^-1 alpha^-1 h^-1 alpha alpha^-1
//                        = alpha [x, x^g] alpha^-1,  g = alpha^-1 h alpha.
inline Report eq32_report(const IdentityOptions& o) {
  if (o.n < 2) throw Error("eq32 needs n >= 2");
  Report rep("identity:eq32");
  const Word x = Word::letter(atom("x"));
  std::size_t id = 0;
  for (int i = 1; i <= o.n - 1; ++i) {
    const Word alpha = sigma_prefix(i - 1);
    const Word ai = invert(alpha);
    for (int j = i + 1; j <= o.n; ++j) {
      auto hs = enumerate_shortlex(strand_basis(1, o.n, o.g), o.h_bound);
      while (auto hsym = hs.next()) {
        const Word h = expand_derived(*hsym, o.g);
        const Word hi = invert(h);
        const Word t1j = alpha * x * ai;
        const Word lhs = commutator(t1j, conjugate(t1j, h));
        Word rhs = alpha * x * ai * h * alpha * x * ai * hi * alpha * invert(x) * ai * h * alpha * invert(x) * ai *
                   (o.fault && *o.fault == id ? h : hi) * alpha * ai;
        const Word gw = ai * h * alpha;
        const Word transported = alpha * commutator(x, conjugate(x, gw)) * ai;
        Word residue = lhs * invert(rhs);
        bool ok = residue.empty() && (lhs * invert(transported)).empty();
        rep.add(id, "i=" + std::to_string(i) + ",j=" + std::to_string(j) + ",h=" + to_string(*hsym), "free", ok,
                ok ? "" : to_string(residue));
        ++id;
      }
    }
  }
  return std::move(rep.finalize());
}

// For each strand i and each basis letter b of F(2g+n-1), asks whether
// alpha^-1 b alpha (after R7/R8/R9 expansion) lies in the subgroup generated
// by the expanded strand-i basis {a_{i,r}} u {t_{i,k}; k > i}.
inline Report lh_free_report(const IdentityOptions& o) {
  if (o.n < 2) throw Error("lh-free needs n >= 2");
  Report rep("identity:lh-free");
  std::size_t id = 0;
  const auto top_basis = strand_basis(1, o.n, o.g);
  for (int i = 1; i <= o.n - 1; ++i) {
    const Word alpha = sigma_prefix(i - 1);
    std::vector<Word> gens;
    for (const auto& s : strand_basis(i, o.n, o.g)) gens.push_back(expand_derived(Word::letter(s), o.g));
    FoldedSubgroup sub(gens);
    for (const auto& b : top_basis) {
      Word gw = invert(alpha) * expand_derived(Word::letter(b), o.g) * alpha;
      if (o.fault && *o.fault == id) gw = gw * Word::letter(sigma(1));
      bool ok = sub.contains(gw);
      rep.add(id, "i=" + std::to_string(i) + ",b=" + to_string(b), "stallings", ok, ok ? "" : "g = " + to_string(gw));
      ++id;
    }
  }
  return std::move(rep.finalize());
}

}  // namespace detail

inline Report identity_check(IdentityKind kind, const IdentityOptions& o) {
  switch (kind) {
    case IdentityKind::Eq31: return detail::eq31_report(o);
    case IdentityKind::Eq32: return detail::eq32_report(o);
    case IdentityKind::LhFreeIdentity: return detail::lh_free_report(o);
  }
  return Report();
}

// ---------------------------------------------------------------------------
// Magnus check of the reduced-free relators [x_i, x_i^h].

inline Report magnus_lh_report(int rank, int h_bound, std::optional<std::size_t> fault = std::nullopt) {
  Report rep("magnus-lh");
  const auto basis = atom_basis(rank);
  std::size_t id = 0;
  for (int i = 1; i <= rank; ++i) {
    const Word xi = Word::letter(basis[static_cast<std::size_t>(i - 1)]);
    auto hs = enumerate_shortlex(basis, h_bound);
    while (auto h = hs.next()) {
      Word rel = commutator(xi, conjugate(xi, *h));
      if (fault && *fault == id) rel = commutator(xi, conjugate(Word::letter(basis[static_cast<std::size_t>(i % rank)]), *h));
      auto img = magnus_image(rel, basis);
      bool ok = img.is_one();
      rep.add(id, "[x" + std::to_string(i) + ", x" + std::to_string(i) + "^(" + to_string(*h) + ")]", "magnus", ok,
              ok ? "" : to_string(img));
      ++id;
    }
  }
  return std::move(rep.finalize());
}

// ---------------------------------------------------------------------------
// The two A-expansions: s_1^-1 A_{1,s} s_1^-1 versus A_{2,s} pushed through R7/R8.

struct AExpansionComparison {
  Word geometric;
  Word translated;
  bool freely_equal = false;
  bool same_permutation = false;
  bool same_abelian_image = false;
};

inline AExpansionComparison compare_A_expansions(int s, int g, int n = 2) {
  AExpansionComparison c;
  c.geometric = expand_A_geo(s, g);
  c.translated = expand_derived(expand_A_pure(2, s, g), g);
  c.freely_equal = c.geometric == c.translated;
  c.same_permutation = word_permutation(c.geometric, n) == word_permutation(c.translated, n);
  std::vector<Symbol> gens{sigma(1)};
  for (int r = 1; r <= 2 * g; ++r) gens.push_back(surf_a(1, r));
  IntMatrix m = abelianized_matrix(gens, {{"geo", c.geometric}, {"translated", c.translated}});
  bool same = true;
  for (std::size_t col = 0; col < m.cols(); ++col) same = same && m(0, col) == m(1, col);
  c.same_abelian_image = same;
  return c;
}

}  // namespace hbraid
