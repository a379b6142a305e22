#pragma once

// Handle reduction for Artin braid words (s-letters only).
//
// A s_i-handle is a factor s_i^e u s_i^-e where every letter of u has index > i.
// Reducing it deletes the outer letters and replaces each s_{i+1}^d in u by
// s_{i+1}^-e s_i^d s_{i+1}^e. A handle-free word is empty, s-positive (its
// lowest generator occurs only positively) or s-negative.
//
// Strategy: pick the leftmost handle of lowest index (the main handle) and
// reduce the first permitted handle inside it, i.e. the one whose closing
// letter comes first. That handle contains no s_{i+1}-handle, so the sequence
// of reductions terminates.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hbraid/error.hpp"
#include "hbraid/word.hpp"

namespace hbraid {

enum class OrderVerdict { Less, Equal, Greater };
enum class BraidSign { Trivial, Positive, Negative };

inline std::string to_string(OrderVerdict v) {
  switch (v) {
    case OrderVerdict::Less: return "<";
    case OrderVerdict::Equal: return "=";
    case OrderVerdict::Greater: return ">";
  }
  return "=";
}

inline std::string to_string(BraidSign s) {
  switch (s) {
    case BraidSign::Trivial: return "trivial";
    case BraidSign::Positive: return "positive";
    case BraidSign::Negative: return "negative";
  }
  return "trivial";
}

inline constexpr std::uint64_t default_step_cap = 10'000'000;

namespace detail {

// Signed generator index: +i for s_i, -i for s_i^-1.
using BraidLetters = std::vector<int>;

inline BraidLetters to_braid_letters(const Word& w) {
  BraidLetters out;
  out.reserve(w.length());
  for (const auto& l : w.letters()) {
    if (l.sym.kind != SymbolKind::Sigma)
      throw UnsupportedAlphabet("handle reduction accepts s-letters only, got " + to_string(l.sym));
    out.push_back(l.exp * l.sym.i);
  }
  return out;
}

inline int gen_of(int x) { return x < 0 ? -x : x; }

// First handle (p, q) inside [lo, hi) whose closing letter is leftmost, if any.
inline std::optional<std::pair<std::size_t, std::size_t>> first_closing_handle(const BraidLetters& w, std::size_t lo,
                                                                               std::size_t hi, int max_gen) {
  // last[i]: position of the most recent s_i^{+-1} with no smaller index after it.
  std::vector<std::ptrdiff_t> last(static_cast<std::size_t>(max_gen) + 2, -1);
  for (std::size_t q = lo; q < hi; ++q) {
    int i = gen_of(w[q]);
    for (int j = i + 1; j <= max_gen; ++j) last[static_cast<std::size_t>(j)] = -1;
    std::ptrdiff_t p = last[static_cast<std::size_t>(i)];
    if (p >= 0 && w[static_cast<std::size_t>(p)] == -w[q]) return std::make_pair(static_cast<std::size_t>(p), q);
    last[static_cast<std::size_t>(i)] = static_cast<std::ptrdiff_t>(q);
  }
  return std::nullopt;
}

// Leftmost handle among those of lowest index.
inline std::optional<std::pair<std::size_t, std::size_t>> main_handle(const BraidLetters& w, int max_gen) {
  for (int i = 1; i <= max_gen; ++i) {
    std::ptrdiff_t prev = -1;
    for (std::size_t q = 0; q < w.size(); ++q) {
      int gq = gen_of(w[q]);
      if (gq < i) {
        prev = -1;
        continue;
      }
      if (gq != i) continue;
      if (prev >= 0 && w[static_cast<std::size_t>(prev)] == -w[q]) return std::make_pair(static_cast<std::size_t>(prev), q);
      prev = static_cast<std::ptrdiff_t>(q);
    }
  }
  return std::nullopt;
}

inline void reduce_handle(BraidLetters& w, std::size_t p, std::size_t q) {
  const int i = gen_of(w[p]);
  const int e = w[p] > 0 ? 1 : -1;
  BraidLetters out;
  out.reserve(w.size() + 2 * (q - p));
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
  for (std::size_t k = p + 1; k < q; ++k) {
    if (gen_of(w[k]) == i + 1) {
      const int d = w[k] > 0 ? 1 : -1;
      out.push_back(-e * (i + 1));
      out.push_back(d * i);
      out.push_back(e * (i + 1));
    } else {
      out.push_back(w[k]);
    }
  }
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(q) + 1, w.end());
  w = std::move(out);
}

inline BraidLetters handle_reduce_letters(BraidLetters w, std::uint64_t step_cap) {
  int max_gen = 0;
  for (int x : w) max_gen = std::max(max_gen, gen_of(x));
  std::uint64_t steps = 0;
  while (auto mh = main_handle(w, max_gen)) {
    auto inner = first_closing_handle(w, mh->first, mh->second + 1, max_gen);
    auto [p, q] = *inner;  // the main handle itself qualifies, so inner always exists
    reduce_handle(w, p, q);
    if (++steps > step_cap) throw ResourceError("handle reduction exceeded step cap " + std::to_string(step_cap));
  }
  return w;
}

inline BraidSign sign_of(const BraidLetters& w) {
  if (w.empty()) return BraidSign::Trivial;
  int lowest = gen_of(w.front());
  int sign = w.front() > 0 ? 1 : -1;
  for (int x : w)
    if (gen_of(x) < lowest) {
      lowest = gen_of(x);
      sign = x > 0 ? 1 : -1;
    }
  return sign > 0 ? BraidSign::Positive : BraidSign::Negative;
}

}  // namespace detail

// Returns a handle-free word equal to w in the Artin braid group.
inline Word handle_reduce(const Word& w, std::uint64_t step_cap = default_step_cap) {
  auto letters = detail::handle_reduce_letters(detail::to_braid_letters(w), step_cap);
  std::vector<Letter> ls;
  ls.reserve(letters.size());
  for (int x : letters) ls.push_back({sigma(detail::gen_of(x)), x > 0 ? 1 : -1});
  return Word::reduce(ls, w.alphabet());
}

inline BraidSign braid_sign(const Word& w, std::uint64_t step_cap = default_step_cap) {
  return detail::sign_of(detail::handle_reduce_letters(detail::to_braid_letters(w), step_cap));
}

inline bool is_trivial_braid(const Word& w, std::uint64_t step_cap = default_step_cap) {
  return braid_sign(w, step_cap) == BraidSign::Trivial;
}

// u < v iff u^-1 v is s-positive.
inline OrderVerdict braid_compare(const Word& u, const Word& v, std::uint64_t step_cap = default_step_cap) {
  switch (braid_sign(invert(u) * v, step_cap)) {
    case BraidSign::Trivial: return OrderVerdict::Equal;
    case BraidSign::Positive: return OrderVerdict::Less;
    case BraidSign::Negative: return OrderVerdict::Greater;
  }
  return OrderVerdict::Equal;
}

}  // namespace hbraid
