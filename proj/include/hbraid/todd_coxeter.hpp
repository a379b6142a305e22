#pragma once

// Coset enumeration, HLT style: each live coset in turn has every relator
// traced through it (defining cosets as needed), and coincidences are
// processed immediately with a union-find queue.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <sstream>
#include <string>
#include <vector>

#include "hbraid/error.hpp"
#include "hbraid/presentation.hpp"
#include "hbraid/word.hpp"

namespace hbraid {

enum class CosetStatus { Closed, Overflow };

inline std::string to_string(CosetStatus s) { return s == CosetStatus::Closed ? "closed" : "overflow"; }

struct CosetTable {
  CosetStatus status = CosetStatus::Overflow;
  // Column 2k is generator k, column 2k+1 its inverse.
  std::vector<std::string> columns;
  // Cosets numbered from 0 (the subgroup itself); -1 marks an undefined entry.
  std::vector<std::vector<long>> rows;
  // Live cosets when enumeration stopped.
  std::size_t coset_count = 0;

  bool closed() const { return status == CosetStatus::Closed; }
  std::size_t index() const { return coset_count; }

  // 1-based CSV: "coset,s1,s1^-1,..." then one line per coset.
  std::string to_csv() const {
    std::ostringstream out;
    out << "coset";
    for (const auto& c : columns) out << "," << c;
    out << "\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
      out << r + 1;
      for (long e : rows[r]) {
        out << ",";
        if (e >= 0) out << e + 1;
      }
      out << "\n";
    }
    return out.str();
  }
};

inline constexpr std::size_t default_max_cosets = 100000;

namespace detail {

class CosetEnumerator {
 public:
  CosetEnumerator(std::size_t ncols, std::size_t max_cosets) : ncols_(ncols), max_(max_cosets) { new_row(); }

  bool overflow() const { return overflow_; }

  // Traces w from c, defining cosets until it closes.
  void scan_and_fill(long c, const std::vector<std::size_t>& w) {
    long f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && table_[f][w[i]] >= 0) f = table_[f][w[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table_[b][inv(w[j])] >= 0) b = table_[b][inv(w[j--])];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table_[f][w[i]] = b;
        table_[b][inv(w[i])] = f;
        return;
      }
      if (!define(f, w[i])) return;
    }
  }

  bool define(long c, std::size_t x) {
    if (live_ >= max_) {
      overflow_ = true;
      return false;
    }
    long d = new_row();
    table_[c][x] = d;
    table_[d][inv(x)] = c;
    return true;
  }

  bool alive(long c) const { return parent_[static_cast<std::size_t>(c)] == c; }
  std::size_t size() const { return table_.size(); }
  std::size_t live() const { return live_; }
  long entry(long c, std::size_t x) const { return table_[c][x]; }

  // Renumbers live cosets in breadth-first order from coset 0.
  std::vector<std::vector<long>> standardized() const {
    std::vector<long> order, label(table_.size(), -1);
    order.push_back(0);
    label[0] = 0;
    for (std::size_t k = 0; k < order.size(); ++k)
      for (std::size_t x = 0; x < ncols_; ++x) {
        long d = table_[order[k]][x];
        if (d >= 0 && label[d] < 0) {
          label[d] = static_cast<long>(order.size());
          order.push_back(d);
        }
      }
    std::vector<std::vector<long>> rows;
    for (long c : order) {
      std::vector<long> row(ncols_, -1);
      for (std::size_t x = 0; x < ncols_; ++x)
        if (table_[c][x] >= 0) row[x] = label[table_[c][x]];
      rows.push_back(std::move(row));
    }
    return rows;
  }

 private:
  static std::size_t inv(std::size_t x) { return x ^ 1U; }

  long new_row() {
    table_.emplace_back(ncols_, -1);
    parent_.push_back(static_cast<long>(table_.size() - 1));
    ++live_;
    return static_cast<long>(table_.size() - 1);
  }

  long rep(long c) {
    long r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      long next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(long a, long b, std::deque<long>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    --live_;
    queue.push_back(b);
  }

  void coincidence(long a, long b) {
    std::deque<long> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      long q = queue.front();
      queue.pop_front();
      for (std::size_t x = 0; x < ncols_; ++x) {
        long d = table_[q][x];
        if (d < 0) continue;
        table_[d][inv(x)] = -1;
        long mu = rep(q), nu = rep(d);
        if (table_[mu][x] >= 0) {
          merge(nu, table_[mu][x], queue);
        } else if (table_[nu][inv(x)] >= 0) {
          merge(mu, table_[nu][inv(x)], queue);
        } else {
          table_[mu][x] = nu;
          table_[nu][inv(x)] = mu;
        }
      }
    }
  }

  std::size_t ncols_;
  std::size_t max_;
  std::vector<std::vector<long>> table_;
  std::vector<long> parent_;
  std::size_t live_ = 0;
  bool overflow_ = false;
};

inline std::vector<std::size_t> to_columns(const Word& w, const std::vector<Symbol>& gens) {
  std::vector<std::size_t> out;
  for (const auto& l : w.letters()) {
    auto it = std::find(gens.begin(), gens.end(), l.sym);
    if (it == gens.end()) throw Error("coset enumeration: letter " + to_string(l.sym) + " is not a generator");
    out.push_back(2 * static_cast<std::size_t>(it - gens.begin()) + (l.exp > 0 ? 0 : 1));
  }
  return out;
}

}  // namespace detail

// Enumerates the cosets of <subgroup> in the group presented by p. Families
// must already be expanded (see materialize).
inline CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup,
                               std::size_t max_cosets = default_max_cosets) {
  if (!p.families.empty()) throw Error("coset enumeration needs finite relators; materialize the families first");
  if (max_cosets < 1) throw Error("max_cosets must be >= 1");
  const std::size_t ncols = 2 * p.generators.size();
  std::vector<std::vector<std::size_t>> rels, subs;
  for (const auto& r : p.relators) rels.push_back(detail::to_columns(r.word, p.generators));
  for (const auto& w : subgroup) subs.push_back(detail::to_columns(w, p.generators));

  CosetTable out;
  for (const auto& s : p.generators) {
    out.columns.push_back(to_string(s));
    out.columns.push_back(to_string(s) + "^-1");
  }

  detail::CosetEnumerator e(ncols, max_cosets);
  for (const auto& w : subs) {
    e.scan_and_fill(0, w);
    if (e.overflow()) break;
  }
  for (long c = 0; !e.overflow() && static_cast<std::size_t>(c) < e.size(); ++c) {
    for (const auto& r : rels) {
      if (!e.alive(c)) break;
      e.scan_and_fill(c, r);
      if (e.overflow()) break;
    }
    for (std::size_t x = 0; x < ncols && e.alive(c) && !e.overflow(); ++x)
      if (e.entry(c, x) < 0) e.define(c, x);
  }
  out.coset_count = e.live();
  if (e.overflow()) {
    out.status = CosetStatus::Overflow;
    return out;
  }
  out.status = CosetStatus::Closed;
  out.rows = e.standardized();
  return out;
}

}  // namespace hbraid
