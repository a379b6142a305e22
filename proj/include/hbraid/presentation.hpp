#pragma once

// Presentations of surface braid groups, their link-homotopy quotients and
// the symmetric group, together with the derived-generator expansions and
// the truncated LH / H_n relator streams.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hbraid/error.hpp"
#include "hbraid/word.hpp"

namespace hbraid {

enum class FamilyTag { Surface, Homotopy, Goldsmith, Pure, Symmetric, Quotient, Extension, Custom };

inline std::string to_string(FamilyTag f) {
  switch (f) {
    case FamilyTag::Surface: return "surface";
    case FamilyTag::Homotopy: return "homotopy";
    case FamilyTag::Goldsmith: return "goldsmith";
    case FamilyTag::Pure: return "pure";
    case FamilyTag::Symmetric: return "symmetric";
    case FamilyTag::Quotient: return "quotient";
    case FamilyTag::Extension: return "extension";
    case FamilyTag::Custom: return "custom";
  }
  return "custom";
}

inline FamilyTag family_from_string(const std::string& s) {
  for (auto f : {FamilyTag::Surface, FamilyTag::Homotopy, FamilyTag::Goldsmith, FamilyTag::Pure,
                 FamilyTag::Symmetric, FamilyTag::Quotient, FamilyTag::Extension, FamilyTag::Custom})
    if (to_string(f) == s) return f;
  throw ParseError("unknown family '" + s + "'");
}

// A relator is a single word equal to the identity (LHS * RHS^-1).
struct Relator {
  std::string label;
  Word word;

  bool operator==(const Relator&) const = default;
};

// Kinds of infinite relator families:
//   LH   [t_{1,j}, t_{1,j}^h], h over {a_{1,r}} u {t_{1,k}}, expanded into s/a_1 letters
//   HN   [t_{i,j}, t_{i,j}^h] for every strand i, h over {a_{i,r}} u {t_{i,k}; k > i}, expanded
//   LH1  same index set as HN but kept in the a_{i,r} / t_{j,k} generators of the pure group
enum class FamilyKind { LH, HN, LH1 };

inline std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::LH: return "LH";
    case FamilyKind::HN: return "HN";
    case FamilyKind::LH1: return "LH1";
  }
  return "LH";
}

inline FamilyKind family_kind_from_string(const std::string& s) {
  if (s == "LH") return FamilyKind::LH;
  if (s == "HN") return FamilyKind::HN;
  if (s == "LH1") return FamilyKind::LH1;
  throw ParseError("unknown relator family kind '" + s + "'");
}

// Truncation: h ranges over freely reduced words of length <= bound.
struct RelatorFamily {
  FamilyKind kind = FamilyKind::LH;
  int n = 0;
  int g = 0;
  int bound = 0;

  bool operator==(const RelatorFamily&) const = default;
};

struct Presentation {
  FamilyTag family = FamilyTag::Custom;
  int n = 0;
  int g = 0;
  bool closed = true;
  std::optional<int> lh_bound;
  std::vector<Symbol> generators;
  std::vector<Relator> relators;
  std::vector<RelatorFamily> families;

  Alphabet alphabet() const {
    if (family == FamilyTag::Custom) return Alphabet::unbounded();
    return Alphabet::surface(n, g);
  }

  bool operator==(const Presentation&) const = default;
};

// ---------------------------------------------------------------------------
// Expansions of derived symbols.

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw IndexError(what);
}

inline Word sig(int i, int e, Alphabet a) { return Word::letter(sigma(i), e, a); }

}  // namespace detail

// t_{i,j} = s_i ... s_{j-2} s_{j-1}^2 s_{j-2}^-1 ... s_i^-1
inline Word expand_t(int i, int j, Alphabet a = Alphabet::unbounded()) {
  detail::require(i >= 1 && i < j, "expand_t needs 1 <= i < j");
  std::vector<Letter> ls;
  for (int k = i; k <= j - 2; ++k) ls.push_back({sigma(k), 1});
  ls.push_back({sigma(j - 1), 1});
  ls.push_back({sigma(j - 1), 1});
  for (int k = j - 2; k >= i; --k) ls.push_back({sigma(k), -1});
  return Word::reduce(ls, a);
}

// a_{i,r} rewritten down to a_{1,r}:
//   a_{j+1,r} = s_j a_{j,r} s_j          (r even)
//   a_{j+1,r} = s_j^-1 a_{j,r} s_j^-1    (r odd)
inline Word expand_a(int i, int r, int g, Alphabet a = Alphabet::unbounded()) {
  detail::require(i >= 1 && g >= 1 && r >= 1 && r <= 2 * g, "expand_a needs i >= 1, 1 <= r <= 2g");
  const int e = (r % 2 == 0) ? 1 : -1;
  Word w = Word::letter(surf_a(1, r), 1, a);
  for (int j = 1; j < i; ++j) w = detail::sig(j, e, a) * w * detail::sig(j, e, a);
  return w;
}

// T_{i,j} = t_{i,j} t_{i,j-1} ... t_{i,i+1}; T_{i,i} is empty.
inline Word expand_T_cap(int i, int j, Alphabet a = Alphabet::unbounded()) {
  detail::require(i >= 1 && j >= i, "expand_T_cap needs 1 <= i <= j");
  std::vector<Letter> ls;
  for (int k = j; k >= i + 1; --k) ls.push_back({tgen(i, k), 1});
  return Word::reduce(ls, a);
}

// A_{j,s} = a_{j,1} ... a_{j,s-1} a_{j,s+1}^-1 ... a_{j,2g}^-1
inline Word expand_A_pure(int j, int s, int g, Alphabet a = Alphabet::unbounded()) {
  detail::require(j >= 1 && g >= 1 && s >= 1 && s <= 2 * g, "expand_A_pure needs j >= 1, 1 <= s <= 2g");
  std::vector<Letter> ls;
  for (int r = 1; r <= s - 1; ++r) ls.push_back({surf_a(j, r), 1});
  for (int r = s + 1; r <= 2 * g; ++r) ls.push_back({surf_a(j, r), -1});
  return Word::reduce(ls, a);
}

// A_{2,s} = s_1^-1 (a_{1,1} ... a_{1,s-1} a_{1,s+1}^-1 ... a_{1,2g}^-1) s_1^-1
inline Word expand_A_geo(int s, int g, Alphabet a = Alphabet::unbounded()) {
  return detail::sig(1, -1, a) * expand_A_pure(1, s, g, a) * detail::sig(1, -1, a);
}

// ---------------------------------------------------------------------------
// LH / H_n relator streams.

// Free basis of the strand-i point-pushing group F(2g + n - i), as symbols.
inline std::vector<Symbol> strand_basis(int i, int n, int g) {
  std::vector<Symbol> b;
  for (int r = 1; r <= 2 * g; ++r) b.push_back(surf_a(i, r));
  for (int j = i + 1; j <= n; ++j) b.push_back(tgen(i, j));
  return b;
}

// Rewrites a_{i,r} and t_{i,j} letters into s / a_{1,r} letters.
inline Word expand_derived(const Word& w, int g, Alphabet a = Alphabet::unbounded()) {
  Word out(a);
  for (const auto& l : w.letters()) {
    Word piece;
    switch (l.sym.kind) {
      case SymbolKind::SurfA: piece = expand_a(l.sym.i, l.sym.j, g, a); break;
      case SymbolKind::TGen: piece = expand_t(l.sym.i, l.sym.j, a); break;
      default: piece = Word::letter(l.sym, 1, a); break;
    }
    out = out * (l.exp > 0 ? piece : invert(piece));
  }
  return out;
}

// Restartable stream of the truncated family instances. Freely trivial
// instances are skipped; labels read e.g. "LH[1,3|t1.2]".
class RelatorStream {
 public:
  explicit RelatorStream(RelatorFamily family, Alphabet alphabet = Alphabet::unbounded())
      : family_(family), alphabet_(alphabet) {
    if (family.bound < 0) throw Error("lh_bound must be >= 0");
    reset();
  }

  void reset() {
    strand_ = 1;
    target_ = 2;
    enumerator_.reset();
    open_pair();
  }

  std::optional<Relator> next() {
    while (strand_ <= last_strand()) {
      if (enumerator_) {
        while (auto h = enumerator_->next()) {
          Word rel = instance(*h);
          if (!rel.empty())
            return Relator{label(*h), std::move(rel)};
        }
      }
      advance_pair();
    }
    return std::nullopt;
  }

  std::vector<Relator> collect() {
    std::vector<Relator> out;
    while (auto r = next()) out.push_back(std::move(*r));
    return out;
  }

 private:
  int last_strand() const { return family_.kind == FamilyKind::LH ? 1 : family_.n - 1; }

  void open_pair() {
    enumerator_.reset();
    while (strand_ <= last_strand() && target_ > family_.n) {
      ++strand_;
      target_ = strand_ + 1;
    }
    if (strand_ <= last_strand())
      enumerator_.emplace(strand_basis(strand_, family_.n, family_.g), family_.bound, Alphabet::unbounded());
  }

  void advance_pair() {
    ++target_;
    open_pair();
  }

  Word instance(const Word& h) const {
    if (family_.kind == FamilyKind::LH1) {
      Word t = Word::letter(tgen(strand_, target_), 1, alphabet_);
      return commutator(t, conjugate(t, h.with_alphabet(alphabet_)));
    }
    Word t = expand_t(strand_, target_, alphabet_);
    Word hx = expand_derived(h, family_.g, alphabet_);
    return commutator(t, conjugate(t, hx));
  }

  std::string label(const Word& h) const {
    return to_string(family_.kind) + "[" + std::to_string(strand_) + "," + std::to_string(target_) + "|" +
           to_string(h) + "]";
  }

  RelatorFamily family_;
  Alphabet alphabet_;
  int strand_ = 1;
  int target_ = 2;
  std::optional<ShortlexEnumerator> enumerator_;
};

inline std::vector<Relator> lh_relators(int n, int g, int lh_bound, Alphabet a = Alphabet::unbounded()) {
  return RelatorStream({FamilyKind::LH, n, g, lh_bound}, a).collect();
}

inline std::vector<Relator> hn_generators(int n, int g, int lh_bound, Alphabet a = Alphabet::unbounded()) {
  return RelatorStream({FamilyKind::HN, n, g, lh_bound}, a).collect();
}

// Finite relators followed by every family truncated at its bound
// (or at bound_override when given).
inline std::vector<Relator> all_relators(const Presentation& p, std::optional<int> bound_override = std::nullopt) {
  std::vector<Relator> out = p.relators;
  for (auto fam : p.families) {
    if (bound_override) fam.bound = *bound_override;
    auto more = RelatorStream(fam, p.alphabet()).collect();
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  }
  return out;
}

// Same presentation with every family expanded into plain relators.
inline Presentation materialize(const Presentation& p, std::optional<int> bound_override = std::nullopt) {
  Presentation q = p;
  q.relators = all_relators(p, bound_override);
  q.families.clear();
  return q;
}

// ---------------------------------------------------------------------------
// Constructors.

namespace detail {

struct RelatorBuilder {
  Alphabet alphabet;
  std::vector<Relator> out;

  // Stores lhs * rhs^-1; freely trivial relators are dropped.
  void add(std::string label, const Word& lhs, const Word& rhs = Word()) {
    Word w = lhs.with_alphabet(alphabet) * invert(rhs.with_alphabet(alphabet));
    if (!w.empty()) out.push_back({std::move(label), std::move(w)});
  }
};

inline std::string idx(std::initializer_list<int> xs) {
  std::string s = "[";
  bool first = true;
  for (int x : xs) {
    s += (first ? "" : ",") + std::to_string(x);
    first = false;
  }
  return s + "]";
}

inline Word a_prefix(int i, int r, Alphabet a) {  // a_{i,1} ... a_{i,r}
  Word w(a);
  for (int k = 1; k <= r; ++k) w = w * Word::letter(surf_a(i, k), 1, a);
  return w;
}

inline Word braid_relator_lhs(int i, Alphabet a) {  // s_i s_{i+1} s_i
  return sig(i, 1, a) * sig(i + 1, 1, a) * sig(i, 1, a);
}

// R1 and R2 over s_1 .. s_{n-1}.
inline void artin_relators(RelatorBuilder& b, int n, const std::string& r1, const std::string& r2) {
  const Alphabet a = b.alphabet;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      b.add(r1 + idx({i, j}), sig(i, 1, a) * sig(j, 1, a), sig(j, 1, a) * sig(i, 1, a));
  for (int i = 1; i <= n - 2; ++i)
    b.add(r2 + idx({i}), braid_relator_lhs(i, a), sig(i + 1, 1, a) * sig(i, 1, a) * sig(i + 1, 1, a));
}

// R3 .. R6 of the closed-surface braid group; R3 only when closed.
inline void surface_relators(RelatorBuilder& b, int n, int g, bool closed) {
  const Alphabet a = b.alphabet;
  if (closed) {
    Word lhs = a_prefix(1, 2 * g, a);
    for (int r = 1; r <= 2 * g; ++r) lhs = lhs * Word::letter(surf_a(1, r), -1, a);
    Word rhs(a);  // s_1 ... s_{n-2} s_{n-1}^2 s_{n-2} ... s_1, empty when n = 1
    if (n >= 2) {
      for (int k = 1; k <= n - 2; ++k) rhs = rhs * sig(k, 1, a);
      rhs = rhs * sig(n - 1, 2, a);
      for (int k = n - 2; k >= 1; --k) rhs = rhs * sig(k, 1, a);
    }
    b.add("R3", lhs, rhs);
  }
  if (n >= 2) {
    for (int r = 1; r <= 2 * g; ++r)
      for (int s = 1; s <= 2 * g - 1; ++s) {
        if (r == s) continue;
        Word ar = Word::letter(surf_a(1, r), 1, a);
        Word A = expand_A_geo(s, g, a);
        b.add("R4" + idx({r, s}), ar * A, A * ar);
      }
    for (int r = 1; r <= 2 * g - 1; ++r) {
      Word pre = a_prefix(1, r, a);
      Word A = expand_A_geo(r, g, a);
      b.add("R5" + idx({r}), pre * A, sig(1, 2, a) * A * pre);
    }
  }
  for (int r = 1; r <= 2 * g; ++r)
    for (int i = 2; i <= n - 1; ++i) {
      Word ar = Word::letter(surf_a(1, r), 1, a);
      b.add("R6" + idx({r, i}), ar * sig(i, 1, a), sig(i, 1, a) * ar);
    }
}

inline void require_surface(int n, int g) {
  if (n < 1) throw Error("n must be >= 1");
  if (g < 1) throw Error("genus must be >= 1 for surface families (use the goldsmith family for the disk)");
}

inline void require_bound(int bound) {
  if (bound < 0) throw Error("lh_bound must be >= 0");
}

inline std::vector<Symbol> sigma_generators(int n) {
  std::vector<Symbol> gens;
  for (int i = 1; i <= n - 1; ++i) gens.push_back(sigma(i));
  return gens;
}

inline std::vector<Symbol> a1_generators(int g) {
  std::vector<Symbol> gens;
  for (int r = 1; r <= 2 * g; ++r) gens.push_back(surf_a(1, r));
  return gens;
}

}  // namespace detail

// B_n(M) for a closed orientable surface of genus g >= 1.
// Generators s_1..s_{n-1}, a_{1,1}..a_{1,2g}; relators R1..R6.
inline Presentation surface_braid_presentation(int n, int g) {
  detail::require_surface(n, g);
  Presentation p;
  p.family = FamilyTag::Surface;
  p.n = n;
  p.g = g;
  p.closed = true;
  p.generators = detail::sigma_generators(n);
  auto as = detail::a1_generators(g);
  p.generators.insert(p.generators.end(), as.begin(), as.end());
  detail::RelatorBuilder b{p.alphabet(), {}};
  detail::artin_relators(b, n, "R1", "R2");
  detail::surface_relators(b, n, g, true);
  p.relators = std::move(b.out);
  return p;
}

// R7 / R8 / R9 over the auxiliary generators a_{i,r} (i >= 2) and t_{j,k}.
// Labels: "R7[j,r]" (r even), "R8[j,r]" (r odd), "R9[i,j]".
inline std::vector<Relator> auxiliary_relators(int n, int g, Alphabet a) {
  detail::RelatorBuilder b{a, {}};
  for (int j = 1; j <= n - 1; ++j)
    for (int r = 1; r <= 2 * g; ++r) {
      const int e = (r % 2 == 0) ? 1 : -1;
      Word rhs = detail::sig(j, e, a) * Word::letter(surf_a(j, r), 1, a) * detail::sig(j, e, a);
      b.add((e > 0 ? "R7" : "R8") + detail::idx({j, r}), Word::letter(surf_a(j + 1, r), 1, a), rhs);
    }
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n; ++j) b.add("R9" + detail::idx({i, j}), Word::letter(tgen(i, j), 1, a), expand_t(i, j, a));
  return std::move(b.out);
}

// Link-homotopy quotient of B_n(M) (closed) or of B_n(S), S punctured (no R3).
// Generators a_{1,1}..a_{1,2g}, s_1..s_{n-1}; LH family over F(2g+n-1).
// With with_auxiliary, a_{i,r} (i >= 2) and t_{j,k} are kept as generators
// together with R7..R9.
inline Presentation homotopy_generalized_presentation(int n, int g, bool closed, int lh_bound,
                                                      bool with_auxiliary = false) {
  detail::require_surface(n, g);
  detail::require_bound(lh_bound);
  Presentation p;
  p.family = FamilyTag::Homotopy;
  p.n = n;
  p.g = g;
  p.closed = closed;
  p.lh_bound = lh_bound;
  p.generators = detail::a1_generators(g);
  auto ss = detail::sigma_generators(n);
  p.generators.insert(p.generators.end(), ss.begin(), ss.end());
  detail::RelatorBuilder b{p.alphabet(), {}};
  detail::artin_relators(b, n, "R1", "R2");
  detail::surface_relators(b, n, g, closed);
  p.relators = std::move(b.out);
  if (with_auxiliary) {
    for (int i = 2; i <= n; ++i)
      for (int r = 1; r <= 2 * g; ++r) p.generators.push_back(surf_a(i, r));
    for (int j = 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) p.generators.push_back(tgen(j, k));
    auto aux = auxiliary_relators(n, g, p.alphabet());
    p.relators.insert(p.relators.end(), aux.begin(), aux.end());
  }
  p.families.push_back({FamilyKind::LH, n, g, lh_bound});
  return p;
}

// Homotopy braids on the disk: s-generators, R1, R2 and LH with h over {t_{1,j}}.
inline Presentation goldsmith_presentation(int n, int lh_bound) {
  if (n < 2) throw Error("goldsmith presentation needs n >= 2");
  detail::require_bound(lh_bound);
  Presentation p;
  p.family = FamilyTag::Goldsmith;
  p.n = n;
  p.g = 0;
  p.closed = false;
  p.lh_bound = lh_bound;
  p.generators = detail::sigma_generators(n);
  detail::RelatorBuilder b{p.alphabet(), {}};
  detail::artin_relators(b, n, "R1", "R2");
  p.relators = std::move(b.out);
  p.families.push_back({FamilyKind::LH, n, 0, lh_bound});
  return p;
}

// Homotopy string links PB^_n(M): generators a_{i,r}, t_{j,k}; PR1..PR8
// (PR1 only when closed) and the LH1 family.
inline Presentation pure_homotopy_presentation(int n, int g, bool closed, int lh_bound) {
  detail::require_surface(n, g);
  detail::require_bound(lh_bound);
  using detail::idx;
  Presentation p;
  p.family = FamilyTag::Pure;
  p.n = n;
  p.g = g;
  p.closed = closed;
  p.lh_bound = lh_bound;
  for (int i = 1; i <= n; ++i)
    for (int r = 1; r <= 2 * g; ++r) p.generators.push_back(surf_a(i, r));
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) p.generators.push_back(tgen(j, k));

  const Alphabet al = p.alphabet();
  auto A = [&](int i, int r) { return Word::letter(surf_a(i, r), 1, al); };
  auto T = [&](int i, int j) { return expand_T_cap(i, j, al); };
  auto Apure = [&](int j, int s) { return expand_A_pure(j, s, g, al); };
  // a_{j,2g}^-1 ... a_{j,1}^-1
  auto a_desc_inv = [&](int j) {
    Word w(al);
    for (int r = 2 * g; r >= 1; --r) w = w * invert(A(j, r));
    return w;
  };
  // a_{j,2g} ... a_{j,1}
  auto a_desc = [&](int j) {
    Word w(al);
    for (int r = 2 * g; r >= 1; --r) w = w * A(j, r);
    return w;
  };

  detail::RelatorBuilder b{al, {}};
  if (closed) {
    Word lhs(al);
    for (int r = 1; r <= 2 * g; ++r) lhs = lhs * invert(A(n, r));
    lhs = lhs * detail::a_prefix(n, 2 * g, al);
    Word rhs(al);
    for (int i = 1; i <= n - 1; ++i) rhs = rhs * invert(T(i, n - 1)) * T(i, n);
    b.add("PR1", lhs, rhs);
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int r = 1; r <= 2 * g; ++r)
        for (int s = 1; s <= 2 * g - 1; ++s) {
          if (r == s) continue;
          b.add("PR2" + idx({i, j, r, s}), A(i, r) * Apure(j, s), Apure(j, s) * A(i, r));
        }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int r = 1; r <= 2 * g - 1; ++r) {
        Word pre = detail::a_prefix(i, r, al);
        b.add("PR3" + idx({i, j, r}), pre * Apure(j, r) * invert(pre) * invert(Apure(j, r)),
              T(i, j) * invert(T(i, j - 1)));
      }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = i + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          bool disjoint = j < k;
          bool nested = l <= j;
          if (disjoint || nested) b.add("PR4" + idx({i, j, k, l}), T(i, j) * T(k, l), T(k, l) * T(i, j));
        }
  for (int i = 1; i <= n; ++i)
    for (int k = i + 1; k <= n; ++k)
      for (int j = k; j <= n; ++j)
        for (int l = j + 1; l <= n; ++l)
          b.add("PR5" + idx({i, k, j, l}), T(k, l) * T(i, j) * invert(T(k, l)),
                T(i, k - 1) * invert(T(i, k)) * T(i, j) * invert(T(i, l)) * T(i, k) * invert(T(i, k - 1)) * T(i, l));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        if (!((i < j) || (k < i))) continue;
        for (int r = 1; r <= 2 * g; ++r)
          b.add("PR6" + idx({i, j, k, r}), A(i, r) * T(j, k), T(j, k) * A(i, r));
      }
  for (int j = 1; j <= n; ++j)
    for (int i = j + 1; i <= n; ++i)
      for (int k = i; k <= n; ++k) {
        Word c = a_desc_inv(j) * T(j, k) * a_desc(j);
        for (int r = 1; r <= 2 * g; ++r) b.add("PR7" + idx({j, i, k, r}), A(i, r) * c, c * A(i, r));
      }
  for (int j = 1; j <= n; ++j) {
    Word rhs(al);
    for (int i = 1; i <= j - 1; ++i)
      rhs = rhs * a_desc_inv(i) * T(i, j - 1) * invert(T(i, j)) * detail::a_prefix(i, 2 * g, al);
    rhs = rhs * detail::a_prefix(j, 2 * g, al);
    for (int r = 1; r <= 2 * g; ++r) rhs = rhs * invert(A(j, r));
    b.add("PR8" + idx({j}), T(j, n), rhs);
  }
  p.relators = std::move(b.out);
  p.families.push_back({FamilyKind::LH1, n, g, lh_bound});
  return p;
}

// Symmetric group on n points. The Coxeter generators delta_i = (i i+1) are
// carried by the s_i symbols so that psi and the extension lifts act on them directly.
inline Presentation symmetric_presentation(int n) {
  if (n < 1) throw Error("n must be >= 1");
  Presentation p;
  p.family = FamilyTag::Symmetric;
  p.n = n;
  p.g = 0;
  p.closed = true;
  p.generators = detail::sigma_generators(n);
  detail::RelatorBuilder b{p.alphabet(), {}};
  detail::artin_relators(b, n, "SR1", "SR2");
  for (int i = 1; i <= n - 1; ++i) b.add("SR3" + detail::idx({i}), detail::sig(i, 2, p.alphabet()));
  p.relators = std::move(b.out);
  return p;
}

// B_n(M) / H_n(M): appends the H_n(M) normal generators truncated at lh_bound.
inline Presentation homotopy_quotient(const Presentation& p, int lh_bound) {
  if (p.family != FamilyTag::Surface) throw Error("homotopy_quotient expects a surface braid presentation");
  detail::require_bound(lh_bound);
  Presentation q = p;
  q.family = FamilyTag::Quotient;
  q.lh_bound = lh_bound;
  q.families.push_back({FamilyKind::HN, p.n, p.g, lh_bound});
  return q;
}

// Every relator letter must be a listed generator.
inline void validate(const Presentation& p) {
  for (const auto& r : all_relators(p)) {
    for (const auto& l : r.word.letters()) {
      bool listed = false;
      for (const auto& gsym : p.generators) listed = listed || gsym == l.sym;
      if (!listed) throw Error("relator " + r.label + " uses unlisted generator " + to_string(l.sym));
    }
  }
}

}  // namespace hbraid
