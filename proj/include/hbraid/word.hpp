#pragma once

// Typed free-group words over the surface braid alphabet
// {s_i, a_{i,r}, t_{i,j}} plus named abstract atoms.
//
// Conjugation convention: conjugate(t, h) = h t h^-1 (h on the LEFT).
// Many texts use h^-1 t h; everything in this library uses the left form.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hbraid/error.hpp"

namespace hbraid {

enum class SymbolKind { Sigma, SurfA, TGen, Abstract };

// A generator symbol. Field use by kind:
//   Sigma(i)      -> i
//   SurfA(i, r)   -> i, j = r
//   TGen(i, j)    -> i, j
//   Abstract(nm)  -> name
struct Symbol {
  SymbolKind kind = SymbolKind::Abstract;
  int i = 0;
  int j = 0;
  std::string name;

  auto operator<=>(const Symbol&) const = default;
  bool operator==(const Symbol&) const = default;
};

inline Symbol sigma(int i) { return {SymbolKind::Sigma, i, 0, {}}; }
inline Symbol surf_a(int i, int r) { return {SymbolKind::SurfA, i, r, {}}; }
inline Symbol tgen(int i, int j) { return {SymbolKind::TGen, i, j, {}}; }

namespace detail {

inline bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// Matches the reserved shapes s<i>, a<i>.<r>, t<i>.<j>.
inline bool looks_reserved(std::string_view s) {
  if (s.size() < 2) return false;
  if (s[0] == 's') return all_digits(s.substr(1));
  if (s[0] == 'a' || s[0] == 't') {
    auto dot = s.find('.');
    if (dot == std::string_view::npos) return false;
    return all_digits(s.substr(1, dot - 1)) && all_digits(s.substr(dot + 1));
  }
  return false;
}

inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

}  // namespace detail

inline Symbol atom(std::string name) {
  if (!detail::is_identifier(name) || detail::looks_reserved(name))
    throw ParseError("invalid abstract generator name '" + name + "'");
  return {SymbolKind::Abstract, 0, 0, std::move(name)};
}

inline std::string to_string(const Symbol& s) {
  switch (s.kind) {
    case SymbolKind::Sigma: return "s" + std::to_string(s.i);
    case SymbolKind::SurfA: return "a" + std::to_string(s.i) + "." + std::to_string(s.j);
    case SymbolKind::TGen: return "t" + std::to_string(s.i) + "." + std::to_string(s.j);
    case SymbolKind::Abstract: return s.name;
  }
  return {};
}

inline std::ostream& operator<<(std::ostream& os, const Symbol& s) { return os << to_string(s); }

// Strand count n and genus g that bound the concrete generator indices.
// An unbounded alphabet skips index validation and is compatible with any other.
struct Alphabet {
  int n = 0;
  int g = 0;
  bool bounded = false;

  static Alphabet unbounded() { return {}; }
  static Alphabet surface(int n, int g) { return {n, g, true}; }

  bool operator==(const Alphabet&) const = default;

  bool admits(const Symbol& s) const {
    if (!bounded) return true;
    switch (s.kind) {
      case SymbolKind::Sigma: return s.i >= 1 && s.i <= n - 1;
      case SymbolKind::SurfA: return s.i >= 1 && s.i <= n && s.j >= 1 && s.j <= 2 * g;
      case SymbolKind::TGen: return s.i >= 1 && s.i < s.j && s.j <= n;
      case SymbolKind::Abstract: return true;
    }
    return false;
  }

  std::string describe() const {
    if (!bounded) return "unbounded";
    return "(n=" + std::to_string(n) + ", g=" + std::to_string(g) + ")";
  }
};

inline Alphabet join(const Alphabet& a, const Alphabet& b) {
  if (!a.bounded) return b;
  if (!b.bounded) return a;
  if (a != b) throw ContextError("alphabet mismatch: " + a.describe() + " vs " + b.describe());
  return a;
}

struct Letter {
  Symbol sym;
  int exp = 1;  // +1 or -1

  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;

  Letter inverse() const { return {sym, -exp}; }
  bool cancels(const Letter& o) const { return exp == -o.exp && sym == o.sym; }
};

// A freely reduced word. Immutable once built; every constructor reduces.
class Word {
 public:
  Word() = default;
  explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}

  // Free reduction of an arbitrary letter sequence.
  static Word reduce(std::span<const Letter> letters, Alphabet alphabet = Alphabet::unbounded()) {
    Word w(alphabet);
    w.letters_.reserve(letters.size());
    for (const auto& l : letters) {
      if (l.exp != 1 && l.exp != -1) throw Error("letter exponents must be +1 or -1");
      if (!alphabet.admits(l.sym))
        throw IndexError("generator " + to_string(l.sym) + " outside alphabet " + alphabet.describe());
      if (!w.letters_.empty() && w.letters_.back().cancels(l))
        w.letters_.pop_back();
      else
        w.letters_.push_back(l);
    }
    return w;
  }

  static Word letter(const Symbol& s, int exp = 1, Alphabet alphabet = Alphabet::unbounded()) {
    std::vector<Letter> ls;
    int count = exp < 0 ? -exp : exp;
    for (int k = 0; k < count; ++k) ls.push_back({s, exp < 0 ? -1 : 1});
    return reduce(ls, alphabet);
  }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Alphabet& alphabet() const { return alphabet_; }

  // Same letters, re-homed (and re-validated) in another alphabet.
  Word with_alphabet(Alphabet a) const { return reduce(letters_, a); }

  int exponent_sum(const Symbol& s) const {
    int sum = 0;
    for (const auto& l : letters_)
      if (l.sym == s) sum += l.exp;
    return sum;
  }

  bool contains(const Symbol& s) const {
    return std::any_of(letters_.begin(), letters_.end(), [&](const Letter& l) { return l.sym == s; });
  }

  // Equality compares letters only; the identity is the same in every alphabet.
  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
  friend auto operator<=>(const Word& a, const Word& b) {
    if (a.length() != b.length()) return a.length() <=> b.length();
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
  Alphabet alphabet_;
};

inline Word free_reduce(std::span<const Letter> letters, Alphabet alphabet = Alphabet::unbounded()) {
  return Word::reduce(letters, alphabet);
}

inline Word concat(const Word& u, const Word& v) {
  Alphabet a = join(u.alphabet(), v.alphabet());
  std::vector<Letter> ls(u.letters());
  ls.insert(ls.end(), v.letters().begin(), v.letters().end());
  return Word::reduce(ls, a);
}

inline Word operator*(const Word& u, const Word& v) { return concat(u, v); }

inline Word invert(const Word& w) {
  std::vector<Letter> ls;
  ls.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) ls.push_back(it->inverse());
  return Word::reduce(ls, w.alphabet());
}

// h t h^-1
inline Word conjugate(const Word& t, const Word& h) { return h * t * invert(h); }

// u v u^-1 v^-1
inline Word commutator(const Word& u, const Word& v) { return u * v * invert(u) * invert(v); }

inline Word power(const Word& w, int k) {
  Word base = k < 0 ? invert(w) : w;
  Word out(w.alphabet());
  for (int m = 0; m < (k < 0 ? -k : k); ++m) out = out * base;
  return out;
}

// Product of the words in order.
inline Word product(std::span<const Word> ws, Alphabet alphabet = Alphabet::unbounded()) {
  Word out(alphabet);
  for (const auto& w : ws) out = out * w;
  return out;
}

// Lazily enumerates every freely reduced word of length <= max_len over a basis,
// shortlex with the letter order b_1 < ... < b_k < b_1^-1 < ... < b_k^-1.
// Restartable via reset().
class ShortlexEnumerator {
 public:
  ShortlexEnumerator(std::vector<Symbol> basis, int max_len, Alphabet alphabet = Alphabet::unbounded())
      : basis_(std::move(basis)), max_len_(max_len), alphabet_(alphabet) {
    if (max_len < 0) throw Error("max_len must be >= 0");
    reset();
  }

  void reset() {
    length_ = 0;
    digits_.clear();
    done_ = false;
  }

  std::optional<Word> next() {
    if (done_) return std::nullopt;
    Word out = current();
    if (!advance()) {
      ++length_;
      const int k = static_cast<int>(basis_.size());
      if (length_ > max_len_ || k == 0) {
        done_ = true;
      } else {
        digits_.assign(static_cast<std::size_t>(length_), 0);
        fill_from(1);
      }
    }
    return out;
  }

  std::vector<Word> collect() {
    std::vector<Word> out;
    while (auto w = next()) out.push_back(std::move(*w));
    return out;
  }

 private:
  int alphabet_size() const { return 2 * static_cast<int>(basis_.size()); }
  bool inverse_pair(int a, int b) const {
    int d = a - b;
    return d == static_cast<int>(basis_.size()) || -d == static_cast<int>(basis_.size());
  }

  Word current() const {
    std::vector<Letter> ls;
    const int k = static_cast<int>(basis_.size());
    for (int d : digits_) ls.push_back(d < k ? Letter{basis_[static_cast<std::size_t>(d)], 1}
                                             : Letter{basis_[static_cast<std::size_t>(d - k)], -1});
    return Word::reduce(ls, alphabet_);
  }

  void fill_from(std::size_t pos) {
    for (std::size_t q = pos; q < digits_.size(); ++q) digits_[q] = inverse_pair(digits_[q - 1], 0) ? 1 : 0;
  }

  bool advance() {
    for (std::size_t p = digits_.size(); p-- > 0;) {
      for (int d = digits_[p] + 1; d < alphabet_size(); ++d) {
        if (p == 0 || !inverse_pair(digits_[p - 1], d)) {
          digits_[p] = d;
          fill_from(p + 1);
          return true;
        }
      }
    }
    return false;
  }

  std::vector<Symbol> basis_;
  int max_len_;
  Alphabet alphabet_;
  int length_ = 0;
  std::vector<int> digits_;
  bool done_ = false;
};

inline ShortlexEnumerator enumerate_shortlex(std::vector<Symbol> basis, int max_len,
                                             Alphabet alphabet = Alphabet::unbounded()) {
  return ShortlexEnumerator(std::move(basis), max_len, alphabet);
}

// ---------------------------------------------------------------------------
// Token grammar:  word := token*;  token := name ("^" signed-int)?
//                 name := "s"i | "a"i"."r | "t"i"."j | identifier
// The identity prints as "1" and "1" parses back to it.

inline Symbol parse_symbol(std::string_view name) {
  auto as_int = [&](std::string_view s) {
    if (!detail::all_digits(s) || s.size() > 9) throw ParseError("bad index in '" + std::string(name) + "'");
    return std::stoi(std::string(s));
  };
  if (detail::looks_reserved(name)) {
    if (name[0] == 's') return sigma(as_int(name.substr(1)));
    auto dot = name.find('.');
    int a = as_int(name.substr(1, dot - 1));
    int b = as_int(name.substr(dot + 1));
    return name[0] == 'a' ? surf_a(a, b) : tgen(a, b);
  }
  if (!detail::is_identifier(name)) throw ParseError("bad generator name '" + std::string(name) + "'");
  return {SymbolKind::Abstract, 0, 0, std::string(name)};
}

inline Word parse_word(std::string_view text, Alphabet alphabet = Alphabet::unbounded()) {
  std::vector<Letter> ls;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view tok = text.substr(pos, end - pos);
    pos = end;
    if (tok == "1") continue;
    int exp = 1;
    auto caret = tok.find('^');
    std::string_view name = tok.substr(0, caret);
    if (caret != std::string_view::npos) {
      std::string_view e = tok.substr(caret + 1);
      bool neg = !e.empty() && (e[0] == '-' || e[0] == '+');
      std::string_view digits = neg ? e.substr(1) : e;
      if (!detail::all_digits(digits) || digits.size() > 6) throw ParseError("bad exponent in '" + std::string(tok) + "'");
      exp = std::stoi(std::string(digits));
      if (!e.empty() && e[0] == '-') exp = -exp;
    }
    Symbol s = parse_symbol(name);
    for (int k = 0; k < (exp < 0 ? -exp : exp); ++k) ls.push_back({s, exp < 0 ? -1 : 1});
  }
  return Word::reduce(ls, alphabet);
}

// Runs of a repeated letter print as one token with an exponent.
inline std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  const auto& ls = w.letters();
  bool first = true;
  for (std::size_t p = 0; p < ls.size();) {
    std::size_t q = p;
    while (q < ls.size() && ls[q] == ls[p]) ++q;
    int exp = static_cast<int>(q - p) * ls[p].exp;
    if (!first) out << ' ';
    first = false;
    out << to_string(ls[p].sym);
    if (exp != 1) out << '^' << exp;
    p = q;
  }
  return out.str();
}

inline std::ostream& operator<<(std::ostream& os, const Word& w) { return os << to_string(w); }

}  // namespace hbraid
