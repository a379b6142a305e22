#pragma once

// Exact integer Smith normal form and abelian group invariants.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hbraid/error.hpp"

namespace hbraid {

using Integer = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }
  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
  }

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Z^free_rank + Z/t_1 + ... with t_1 | t_2 | ..., every t_k >= 2.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool operator==(const AbelianInvariants&) const = default;
};

// e.g. "Z^2 + Z/2"; the trivial group prints as "0".
inline std::string to_string(const AbelianInvariants& a) {
  std::ostringstream out;
  bool first = true;
  if (a.free_rank > 0) {
    out << "Z";
    if (a.free_rank > 1) out << '^' << a.free_rank;
    first = false;
  }
  for (const auto& t : a.torsion) {
    out << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  return first ? "0" : out.str();
}

namespace detail {

inline Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

}  // namespace detail

// Diagonal of the Smith normal form (nonzero entries, positive, each dividing the next).
inline std::vector<Integer> smith_diagonal(IntMatrix m) {
  using detail::abs_int;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Pivot: smallest nonzero magnitude in the trailing block.
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (m(r, c) != 0 && (pr == rows || abs_int(m(r, c)) < abs_int(m(pr, pc)))) {
            pr = r;
            pc = c;
          }
      if (pr == rows) return diag;
      m.swap_rows(t, pr);
      m.swap_cols(t, pc);
      const Integer pivot = m(t, t);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m(r, t) == 0) continue;
        m.add_row(r, t, -Integer(m(r, t) / pivot));
        if (m(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m(t, c) == 0) continue;
        m.add_col(c, t, -Integer(m(t, c) / pivot));
        if (m(t, c) != 0) clean = false;
      }
      if (!clean) continue;
      // Pivot must divide the rest of the block; otherwise fold an offending row in.
      std::size_t bad = rows;
      for (std::size_t r = t + 1; r < rows && bad == rows; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (m(r, c) % pivot != 0) {
            bad = r;
            break;
          }
      if (bad != rows) {
        m.add_row(t, bad, 1);
        continue;
      }
      diag.push_back(abs_int(pivot));
      break;
    }
  }
  return diag;
}

// Invariants of the cokernel Z^cols / rowspace(m).
inline AbelianInvariants smith_normal_form(const IntMatrix& m) {
  auto diag = smith_diagonal(m);
  AbelianInvariants out;
  out.free_rank = m.cols() - diag.size();
  for (const auto& d : diag)
    if (d > 1) out.torsion.push_back(d);
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

}  // namespace hbraid
