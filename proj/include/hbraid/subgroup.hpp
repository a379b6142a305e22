#pragma once

// Membership in finitely generated subgroups of a free group via Stallings folding.

#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

#include "hbraid/word.hpp"

namespace hbraid {

class FoldedSubgroup {
 public:
  explicit FoldedSubgroup(const std::vector<Word>& generators) {
    parent_.push_back(0);  // base vertex
    for (const auto& w : generators) add_loop(w);
    fold();
  }

  // True iff w lies in the subgroup: reading w from the base returns to the base.
  bool contains(const Word& w) const {
    std::size_t v = 0;
    for (const auto& l : w.letters()) {
      auto it = out_.find({v, l.sym, l.exp});
      if (it == out_.end()) return false;
      v = it->second;
    }
    return v == 0;
  }

  std::size_t vertex_count() const {
    std::set<std::size_t> live;
    for (std::size_t v = 0; v < parent_.size(); ++v) live.insert(find(v));
    return live.size();
  }

 private:
  using Key = std::tuple<std::size_t, Symbol, int>;  // (vertex, label, direction)

  std::size_t find(std::size_t v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  std::size_t new_vertex() {
    parent_.push_back(parent_.size());
    return parent_.size() - 1;
  }

  void add_loop(const Word& w) {
    if (w.empty()) return;
    std::size_t v = 0;
    const auto& ls = w.letters();
    for (std::size_t k = 0; k < ls.size(); ++k) {
      std::size_t u = (k + 1 == ls.size()) ? 0 : new_vertex();
      edges_.push_back({v, ls[k].sym, ls[k].exp, u});
      v = u;
    }
  }

  struct Edge {
    std::size_t from;
    Symbol sym;
    int exp;
    std::size_t to;
  };

  // Merge vertices until every (vertex, letter) has at most one outgoing edge.
  void fold() {
    bool changed = true;
    while (changed) {
      changed = false;
      out_.clear();
      for (const auto& e : edges_) {
        std::size_t a = find(e.from), b = find(e.to);
        for (auto [src, exp, dst] : {std::tuple{a, e.exp, b}, std::tuple{b, -e.exp, a}}) {
          auto [it, inserted] = out_.emplace(Key{src, e.sym, exp}, dst);
          if (!inserted && find(it->second) != dst) {
            std::size_t x = find(it->second), y = dst;
            if (x > y) std::swap(x, y);
            parent_[y] = x;
            changed = true;
          }
        }
        if (changed) break;
      }
    }
    for (auto& [k, v] : out_) v = find(v);
  }

  std::vector<std::size_t> parent_;
  std::vector<Edge> edges_;
  std::map<Key, std::size_t> out_;
};

}  // namespace hbraid
