#pragma once

// Independent reference computations for the tests. None of these reuse the
// library's algorithms: braids are checked through Artin's action on a free
// group, Magnus coefficients by counting subsequences, Smith forms by
// determinantal divisors, permutations by moving strands around.

#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "hbraid/word.hpp"

namespace oracle {

// Free group words as signed generator indices (+k / -k), reduced on push.
using FWord = std::vector<int>;

inline void push(FWord& w, int x) {
  if (!w.empty() && w.back() == -x)
    w.pop_back();
  else
    w.push_back(x);
}

inline FWord inverse(const FWord& w) {
  FWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

// Artin's action of B_n on F_n: s_i sends x_i -> x_i x_{i+1} x_i^-1,
// x_{i+1} -> x_i and fixes the rest. The action is faithful, so a braid word is
// trivial iff every x_j is fixed.
class ArtinAction {
 public:
  explicit ArtinAction(int n) : images_(static_cast<std::size_t>(n)) {
    for (int j = 1; j <= n; ++j) images_[static_cast<std::size_t>(j - 1)] = {j};
  }

  // Precompose with s_i^e: new(x) = old(s_i^e(x)).
  void apply(int i, int e) {
    auto sub = [&](const FWord& w) {
      FWord out;
      for (int x : w) {
        const FWord& img = images_[static_cast<std::size_t>(std::abs(x) - 1)];
        if (x > 0)
          for (int y : img) push(out, y);
        else
          for (auto it = img.rbegin(); it != img.rend(); ++it) push(out, -*it);
      }
      return out;
    };
    const int a = i, b = i + 1;
    FWord xa, xb;
    if (e > 0) {
      xa = {a, b, -a};
      xb = {a};
    } else {
      xa = {b};
      xb = {-b, a, b};
    }
    FWord na = sub(xa), nb = sub(xb);
    images_[static_cast<std::size_t>(a - 1)] = std::move(na);
    images_[static_cast<std::size_t>(b - 1)] = std::move(nb);
  }

  bool is_identity() const {
    for (std::size_t j = 0; j < images_.size(); ++j)
      if (images_[j] != FWord{static_cast<int>(j + 1)}) return false;
    return true;
  }

 private:
  std::vector<FWord> images_;
};

inline bool braid_is_trivial(const hbraid::Word& w, int n) {
  ArtinAction act(n);
  for (const auto& l : w.letters()) act.apply(l.sym.i, l.exp);
  return act.is_identity();
}

// Coefficient of X_{I[0]} ... X_{I[m-1]} (distinct indices) in the Magnus image
// of w: sum over subsequences of w spelling I of the product of exponents.
inline long long magnus_coefficient(const std::vector<std::pair<int, int>>& w, const std::vector<int>& I) {
  std::vector<long long> dp(I.size() + 1, 0);
  dp[0] = 1;
  for (const auto& [gen, exp] : w)
    for (std::size_t k = I.size(); k >= 1; --k)
      if (I[k - 1] == gen) dp[k] += dp[k - 1] * exp;
  return dp[I.size()];
}

// Strand tracking: slot[p] holds the strand currently at position p.
// Returns image[strand - 1] = final position of that strand.
inline std::vector<int> strand_images(const std::vector<int>& sigma_indices, int n) {
  std::vector<int> slot(static_cast<std::size_t>(n));
  std::iota(slot.begin(), slot.end(), 1);
  for (int i : sigma_indices) std::swap(slot[static_cast<std::size_t>(i - 1)], slot[static_cast<std::size_t>(i)]);
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) image[static_cast<std::size_t>(slot[static_cast<std::size_t>(p)] - 1)] = p + 1;
  return image;
}

// Determinant by fraction-free elimination (Bareiss) on small integer matrices.
inline long long determinant(std::vector<std::vector<long long>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  long long sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors from determinantal divisors d_k = gcd of k x k minors.
// Returns (rank, factors) with factors d_k / d_{k-1} for k = 1..rank.
inline std::pair<std::size_t, std::vector<long long>> invariant_factors(const std::vector<std::vector<long long>>& m,
                                                                        std::size_t cols) {
  const std::size_t rows = m.size();
  std::vector<long long> d{1};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    long long g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<long long>> sub(k, std::vector<long long>(k));
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) sub[a][b] = m[r[a]][c[b]];
        g = std::gcd(g, std::abs(determinant(sub)));
      }
    if (g == 0) break;
    d.push_back(g);
  }
  std::vector<long long> f;
  for (std::size_t k = 1; k < d.size(); ++k) f.push_back(d[k] / d[k - 1]);
  return {d.size() - 1, f};
}

// Number of reduced words of length exactly m over k generators.
inline std::uint64_t reduced_count(int k, int m) {
  if (m == 0) return 1;
  if (k == 0) return 0;
  std::uint64_t c = 2 * static_cast<std::uint64_t>(k);
  for (int i = 1; i < m; ++i) c *= 2 * static_cast<std::uint64_t>(k) - 1;
  return c;
}

inline std::uint64_t reduced_count_upto(int k, int max_len) {
  std::uint64_t s = 0;
  for (int m = 0; m <= max_len; ++m) s += reduced_count(k, m);
  return s;
}

// Random s-word over s_1..s_{n-1} (not necessarily reduced).
inline hbraid::Word random_braid(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> gen(1, n - 1), sgn(0, 1);
  std::vector<hbraid::Letter> ls;
  for (int k = 0; k < len; ++k) ls.push_back({hbraid::sigma(gen(rng)), sgn(rng) ? 1 : -1});
  return hbraid::Word::reduce(ls);
}

inline hbraid::Word random_atom_word(std::mt19937& rng, int rank, int len) {
  std::uniform_int_distribution<int> gen(1, rank), sgn(0, 1);
  std::vector<hbraid::Letter> ls;
  for (int k = 0; k < len; ++k) ls.push_back({hbraid::atom("x" + std::to_string(gen(rng))), sgn(rng) ? 1 : -1});
  return hbraid::Word::reduce(ls);
}

}  // namespace oracle
