#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "hbraid/todd_coxeter.hpp"
#include "hbraid/perm.hpp"

using namespace hbraid;

namespace {

long trace(const CosetTable& t, const Presentation& p, const Word& w, long c) {
  for (const auto& l : w.letters()) {
    auto it = std::find(p.generators.begin(), p.generators.end(), l.sym);
    std::size_t col = 2 * static_cast<std::size_t>(it - p.generators.begin()) + (l.exp > 0 ? 0 : 1);
    c = t.rows[static_cast<std::size_t>(c)][col];
    if (c < 0) return -1;
  }
  return c;
}

// the expanded pure generators a_{i,r}, t_{j,k}
std::vector<Word> pure_subgroup(const Presentation& p) {
  std::vector<Word> out;
  for (int i = 1; i <= p.n; ++i)
    for (int r = 1; r <= 2 * p.g; ++r) out.push_back(expand_a(i, r, p.g));
  for (int j = 1; j <= p.n; ++j)
    for (int k = j + 1; k <= p.n; ++k) out.push_back(expand_t(j, k));
  return out;
}

void expect_consistent(const CosetTable& t, const Presentation& p, const std::vector<Word>& sub) {
  ASSERT_TRUE(t.closed());
  ASSERT_EQ(t.rows.size(), t.index());
  for (std::size_t c = 0; c < t.rows.size(); ++c) {
    for (std::size_t x = 0; x < t.rows[c].size(); ++x) {
      long d = t.rows[c][x];
      ASSERT_GE(d, 0);
      EXPECT_EQ(t.rows[static_cast<std::size_t>(d)][x ^ 1], static_cast<long>(c));
    }
    for (const auto& r : p.relators) EXPECT_EQ(trace(t, p, r.word, static_cast<long>(c)), static_cast<long>(c)) << r.label;
  }
  for (const auto& h : sub) EXPECT_EQ(trace(t, p, h, 0), 0);
}

}  // namespace

TEST(ToddCoxeter, SymmetricGroupOrders) {
  const long factorial[] = {1, 1, 2, 6, 24, 120};
  for (int n = 1; n <= 5; ++n) {
    auto p = symmetric_presentation(n);
    auto t = todd_coxeter(p, {});
    EXPECT_EQ(static_cast<long>(t.index()), factorial[n]) << n;
    expect_consistent(t, p, {});
  }
}

TEST(ToddCoxeter, PureSubgroupIndexIsNFactorial) {
  auto p2 = surface_braid_presentation(2, 1);
  auto t2 = todd_coxeter(p2, pure_subgroup(p2));
  EXPECT_EQ(t2.index(), 2u);
  expect_consistent(t2, p2, pure_subgroup(p2));
  auto p3 = surface_braid_presentation(3, 1);
  auto t3 = todd_coxeter(p3, pure_subgroup(p3));
  EXPECT_EQ(t3.index(), 6u);
  expect_consistent(t3, p3, pure_subgroup(p3));
}

TEST(ToddCoxeter, TableMatchesPermutationAction) {
  // cosets of S_{n-1} in S_n correspond to where strand n goes
  auto p = symmetric_presentation(4);
  std::vector<Word> stab{Word::letter(sigma(1)), Word::letter(sigma(2))};
  auto t = todd_coxeter(p, stab);
  EXPECT_EQ(t.index(), 4u);
  expect_consistent(t, p, stab);
}

TEST(ToddCoxeter, RelatorOrderDoesNotChangeIndex) {
  std::mt19937 rng(71);
  auto base = symmetric_presentation(4);
  for (int trial = 0; trial < 5; ++trial) {
    auto p = base;
    std::shuffle(p.relators.begin(), p.relators.end(), rng);
    EXPECT_EQ(todd_coxeter(p, {}).index(), 24u);
  }
}

TEST(ToddCoxeter, LargerSubgroupSmallerIndex) {
  auto p = symmetric_presentation(4);
  std::vector<Word> sub;
  std::vector<std::size_t> seen{todd_coxeter(p, sub).index()};
  for (const char* g : {"s1", "s2", "s3"}) {
    sub.push_back(parse_word(g));
    seen.push_back(todd_coxeter(p, sub).index());
  }
  EXPECT_EQ(seen, (std::vector<std::size_t>{24, 12, 4, 1}));
}

TEST(ToddCoxeter, InfiniteIndexOverflows) {
  Presentation free2;
  free2.generators = {atom("x"), atom("y")};
  auto t = todd_coxeter(free2, {}, 50);
  EXPECT_EQ(t.status, CosetStatus::Overflow);
  EXPECT_FALSE(t.closed());
  EXPECT_EQ(to_string(t.status), "overflow");
  auto s = todd_coxeter(symmetric_presentation(5), {}, 10);
  EXPECT_FALSE(s.closed());
}

TEST(ToddCoxeter, RejectsUnexpandedFamilies) {
  auto p = homotopy_generalized_presentation(2, 1, true, 1);
  EXPECT_THROW(todd_coxeter(p, {}), Error);
  EXPECT_THROW(todd_coxeter(symmetric_presentation(3), {parse_word("x")}), Error);
  EXPECT_THROW(todd_coxeter(symmetric_presentation(3), {}, 0), Error);
}

TEST(ToddCoxeter, CsvIsOneBased) {
  auto t = todd_coxeter(symmetric_presentation(2), {});
  EXPECT_EQ(t.to_csv(), "coset,s1,s1^-1\n1,2,2\n2,1,1\n");
}

TEST(ToddCoxeter, QuotientHasSameFiniteImage) {
  auto p = materialize(homotopy_generalized_presentation(3, 1, true, 1));
  EXPECT_EQ(todd_coxeter(p, pure_subgroup(p)).index(), 6u);
}
