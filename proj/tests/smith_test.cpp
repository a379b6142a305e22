#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hbraid/smith.hpp"
#include "oracles.hpp"

using namespace hbraid;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  return m;
}

AbelianInvariants oracle_invariants(const std::vector<std::vector<long long>>& rows, std::size_t cols) {
  auto [rank, factors] = oracle::invariant_factors(rows, cols);
  AbelianInvariants a;
  a.free_rank = cols - rank;
  for (long long f : factors)
    if (f > 1) a.torsion.emplace_back(f);
  return a;
}

}  // namespace

TEST(Smith, KnownValues) {
  EXPECT_EQ(smith_normal_form(IntMatrix(3, 4)).free_rank, 4u);
  EXPECT_TRUE(smith_normal_form(IntMatrix(3, 4)).torsion.empty());
  auto d = smith_normal_form(from_rows({{2}}, 1));
  EXPECT_EQ(d.free_rank, 0u);
  ASSERT_EQ(d.torsion.size(), 1u);
  EXPECT_EQ(d.torsion[0], 2);
}

TEST(Smith, DivisorChainIsNormalized) {
  // diag(2, 3) = Z/6, diag(4, 6) = Z/2 + Z/12
  EXPECT_EQ(to_string(smith_normal_form(from_rows({{2, 0}, {0, 3}}, 2))), "Z/6");
  EXPECT_EQ(to_string(smith_normal_form(from_rows({{4, 0}, {0, 6}}, 2))), "Z/2 + Z/12");
  EXPECT_EQ(to_string(smith_normal_form(from_rows({{1, 1, 0}}, 3))), "Z^2");
  EXPECT_EQ(to_string(smith_normal_form(from_rows({{1, -1}}, 2))), "Z");
  EXPECT_EQ(to_string(smith_normal_form(from_rows({{1, 0}, {0, 1}}, 2))), "0");
}

TEST(Smith, MatchesDeterminantalDivisors) {
  std::mt19937 rng(51);
  std::uniform_int_distribution<int> val(-6, 6), dim(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t rows = static_cast<std::size_t>(dim(rng)), cols = static_cast<std::size_t>(dim(rng));
    std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
    for (auto& row : m)
      for (auto& x : row) x = trial % 3 == 0 ? 2 * val(rng) : val(rng);
    auto got = smith_normal_form(from_rows(m, cols));
    EXPECT_EQ(got, oracle_invariants(m, cols)) << "trial " << trial;
    for (std::size_t k = 1; k < got.torsion.size(); ++k) EXPECT_EQ(got.torsion[k] % got.torsion[k - 1], 0);
  }
}

TEST(Smith, InvariantUnderRowAndColumnPermutation) {
  std::mt19937 rng(52);
  std::uniform_int_distribution<int> val(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 5, cols = 4;
    std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
    for (auto& row : m)
      for (auto& x : row) x = val(rng);
    auto base = smith_normal_form(from_rows(m, cols));
    std::vector<std::size_t> rp(rows), cp(cols);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    std::vector<std::vector<long long>> p(rows, std::vector<long long>(cols));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) p[r][c] = m[rp[r]][cp[c]];
    EXPECT_EQ(smith_normal_form(from_rows(p, cols)), base);
  }
}

TEST(Smith, LargeEntriesStayExact) {
  IntMatrix m(2, 2);
  m(0, 0) = Integer("1000000000000000000000000");
  m(1, 1) = Integer("10");
  auto a = smith_normal_form(m);
  ASSERT_EQ(a.torsion.size(), 2u);
  EXPECT_EQ(a.torsion[0], 10);
  EXPECT_EQ(a.torsion[1], Integer("1000000000000000000000000"));
}
