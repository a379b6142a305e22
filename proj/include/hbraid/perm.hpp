#pragma once

// Symmetric group arithmetic and the strand permutation of a braid word.
//
// Strands are labelled by their starting point and words are read left to
// right (top to bottom in the diagram), so compose(p, q) applies p first.

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hbraid/error.hpp"
#include "hbraid/word.hpp"

namespace hbraid {

class Permutation {
 public:
  Permutation() = default;

  // images[k] is the image of strand k + 1 (1-based values).
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
      if (v < 1 || v > degree() || seen[static_cast<std::size_t>(v)])
        throw Error("permutation images must form a bijection of 1..n");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) im[static_cast<std::size_t>(k)] = k + 1;
    return Permutation(std::move(im));
  }

  static Permutation transposition(int n, int a, int b) {
    auto p = identity(n);
    std::swap(p.images_[static_cast<std::size_t>(a - 1)], p.images_[static_cast<std::size_t>(b - 1)]);
    return p;
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int strand) const { return images_.at(static_cast<std::size_t>(strand - 1)); }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int k = 0; k < degree(); ++k)
      if (images_[static_cast<std::size_t>(k)] != k + 1) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (int k = 0; k < degree(); ++k) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(k)] - 1)] = k + 1;
    return Permutation(std::move(inv));
  }

  // Nontrivial cycles, each starting at its smallest point, ordered by that point.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int start = 1; start <= degree(); ++start) {
      if (seen[static_cast<std::size_t>(start - 1)] || (*this)(start) == start) continue;
      std::vector<int> cyc;
      for (int x = start; !seen[static_cast<std::size_t>(x - 1)]; x = (*this)(x)) {
        seen[static_cast<std::size_t>(x - 1)] = true;
        cyc.push_back(x);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// p then q: result(i) = q(p(i)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw Error("permutation size mismatch");
  std::vector<int> im(static_cast<std::size_t>(p.degree()));
  for (int k = 1; k <= p.degree(); ++k) im[static_cast<std::size_t>(k - 1)] = q(p(k));
  return Permutation(std::move(im));
}

// Cycle notation, e.g. "(1 2)(3 4)"; the identity prints as "()".
inline std::string to_cycle_string(const Permutation& p) {
  auto cyc = p.cycles();
  if (cyc.empty()) return "()";
  std::ostringstream out;
  for (const auto& c : cyc) {
    out << '(';
    for (std::size_t k = 0; k < c.size(); ++k) out << (k ? " " : "") << c[k];
    out << ')';
  }
  return out.str();
}

// Parses cycle notation; cycles are composed left to right.
inline Permutation parse_cycles(std::string_view text, int n) {
  Permutation result = Permutation::identity(n);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation");
    ++pos;
    std::vector<int> pts;
    for (;;) {
      skip_ws();
      if (pos >= text.size()) throw ParseError("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t end = pos;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      if (end == pos) throw ParseError("expected a point in cycle notation");
      int v = std::stoi(std::string(text.substr(pos, end - pos)));
      if (v < 1 || v > n) throw ParseError("cycle point out of range");
      pts.push_back(v);
      pos = end;
      if (pos < text.size() && text[pos] == ',') ++pos;
    }
    std::vector<int> im = Permutation::identity(n).images();
    for (std::size_t k = 0; k < pts.size(); ++k) im[static_cast<std::size_t>(pts[k] - 1)] = pts[(k + 1) % pts.size()];
    result = compose(result, Permutation(std::move(im)));
    skip_ws();
  }
  return result;
}

// psi: s_i -> (i i+1), a_{i,r} -> id, t_{i,j} -> id, composed left to right.
inline Permutation word_permutation(const Word& w, int n) {
  Permutation p = Permutation::identity(n);
  for (const auto& l : w.letters()) {
    switch (l.sym.kind) {
      case SymbolKind::Sigma:
        if (l.sym.i < 1 || l.sym.i >= n) throw IndexError("s" + std::to_string(l.sym.i) + " outside n=" + std::to_string(n));
        p = compose(p, Permutation::transposition(n, l.sym.i, l.sym.i + 1));
        break;
      case SymbolKind::SurfA:
      case SymbolKind::TGen:
        break;
      case SymbolKind::Abstract:
        throw UnsupportedAlphabet("abstract generator " + l.sym.name + " has no permutation image");
    }
  }
  return p;
}

inline bool is_pure(const Word& w, int n) { return word_permutation(w, n).is_identity(); }

}  // namespace hbraid
