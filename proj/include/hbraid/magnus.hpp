#pragma once

// Magnus expansion into the non-repeating monomial ring Z<<X_1..X_k>> / (monomials
// with a repeated letter). The ring is finite dimensional so images are exact.
//
// Every reduced-free-group relator [x, x^g] maps to 1. Verdicts from this
// module are "trivial / nontrivial under the Magnus invariant" and nothing more.

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hbraid/error.hpp"
#include "hbraid/word.hpp"

namespace hbraid {

using Integer = boost::multiprecision::cpp_int;

// Monomial X_{i1} X_{i2} ... with pairwise distinct 1-based indices.
using Monomial = std::vector<int>;

// Degree first, then lexicographic.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class NonRepeatingSeries {
 public:
  explicit NonRepeatingSeries(int rank = 0) : rank_(rank) {}

  static NonRepeatingSeries one(int rank) {
    NonRepeatingSeries s(rank);
    s.coeffs_[{}] = 1;
    return s;
  }

  // 1 + sign * X_i
  static NonRepeatingSeries generator(int rank, int i, int sign) {
    auto s = one(rank);
    s.coeffs_[{i}] = sign;
    return s;
  }

  int rank() const { return rank_; }
  const std::map<Monomial, Integer, MonomialOrder>& terms() const { return coeffs_; }

  Integer coefficient(const Monomial& m) const {
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? Integer(0) : it->second;
  }

  void add_term(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    for (std::size_t a = 0; a < m.size(); ++a) {
      if (m[a] < 1 || m[a] > rank_) throw Error("monomial index out of range");
      for (std::size_t b = a + 1; b < m.size(); ++b)
        if (m[a] == m[b]) return;  // repeated letter: identically zero
    }
    auto& slot = coeffs_[m];
    slot += c;
    if (slot == 0) coeffs_.erase(m);
  }

  bool is_one() const { return coeffs_.size() == 1 && coefficient({}) == 1; }

  // this * (1 + sign X_i), the inner step of the Magnus map.
  void multiply_generator(int i, int sign) {
    std::vector<std::pair<Monomial, Integer>> extra;
    for (const auto& [m, c] : coeffs_) {
      if (std::find(m.begin(), m.end(), i) != m.end()) continue;
      Monomial mm = m;
      mm.push_back(i);
      extra.emplace_back(std::move(mm), sign * c);
    }
    for (auto& [m, c] : extra) add_term(m, c);
  }

  friend bool operator==(const NonRepeatingSeries& a, const NonRepeatingSeries& b) {
    return a.rank_ == b.rank_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int rank_;
  std::map<Monomial, Integer, MonomialOrder> coeffs_;
};

inline NonRepeatingSeries series_mul(const NonRepeatingSeries& a, const NonRepeatingSeries& b) {
  if (a.rank() != b.rank()) throw Error("series rank mismatch");
  NonRepeatingSeries out(a.rank());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add_term(m, ca * cb);
    }
  return out;
}

inline NonRepeatingSeries operator*(const NonRepeatingSeries& a, const NonRepeatingSeries& b) {
  return series_mul(a, b);
}

// Prints e.g. "1 + X1X2 - X2X1"; the zero series prints as "0".
inline std::string to_string(const NonRepeatingSeries& s) {
  if (s.terms().empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : s.terms()) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (m.empty()) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    for (int i : m) out << 'X' << i;
  }
  return out.str();
}

// Basis x_1..x_k given by symbols; x_i -> 1 + X_i, x_i^-1 -> 1 - X_i.
inline NonRepeatingSeries magnus_image(const Word& w, const std::vector<Symbol>& basis) {
  const int k = static_cast<int>(basis.size());
  auto s = NonRepeatingSeries::one(k);
  for (const auto& l : w.letters()) {
    auto it = std::find(basis.begin(), basis.end(), l.sym);
    if (it == basis.end()) throw UnsupportedAlphabet("letter " + to_string(l.sym) + " outside the Magnus basis");
    s.multiply_generator(static_cast<int>(it - basis.begin()) + 1, l.exp);
  }
  return s;
}

// Atoms x1 .. xk.
inline std::vector<Symbol> atom_basis(int k) {
  std::vector<Symbol> b;
  for (int i = 1; i <= k; ++i) b.push_back(atom("x" + std::to_string(i)));
  return b;
}

inline NonRepeatingSeries magnus_image(const Word& w, int rank) { return magnus_image(w, atom_basis(rank)); }

inline bool is_rf_trivial(const Word& w, const std::vector<Symbol>& basis) { return magnus_image(w, basis).is_one(); }
inline bool is_rf_trivial(const Word& w, int rank) { return magnus_image(w, rank).is_one(); }

inline Integer mu_coefficient(const Word& w, const Monomial& index, const std::vector<Symbol>& basis) {
  for (std::size_t a = 0; a < index.size(); ++a)
    for (std::size_t b = a + 1; b < index.size(); ++b)
      if (index[a] == index[b]) throw Error("mu index sequence has a repeated entry");
  return magnus_image(w, basis).coefficient(index);
}

inline Integer mu_coefficient(const Word& w, const Monomial& index, int rank) {
  return mu_coefficient(w, index, atom_basis(rank));
}

}  // namespace hbraid
