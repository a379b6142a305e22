#include <gtest/gtest.h>

#include <map>
#include <random>

#include "hbraid/magnus.hpp"
#include "oracles.hpp"

using namespace hbraid;

namespace {

Word w(const char* text) { return parse_word(text); }

std::vector<std::pair<int, int>> as_pairs(const Word& x) {
  std::vector<std::pair<int, int>> out;
  for (const auto& l : x.letters()) out.emplace_back(std::stoi(l.sym.name.substr(1)), l.exp);
  return out;
}

// Every monomial with distinct letters from 1..k.
std::vector<Monomial> all_monomials(int k) {
  std::vector<Monomial> out{{}};
  for (std::size_t p = 0; p < out.size(); ++p)
    for (int i = 1; i <= k; ++i)
      if (std::find(out[p].begin(), out[p].end(), i) == out[p].end()) {
        Monomial m = out[p];
        m.push_back(i);
        out.push_back(m);
      }
  return out;
}

}  // namespace

TEST(SeriesMul, KnownValues) {
  auto a = NonRepeatingSeries::generator(2, 1, 1), b = NonRepeatingSeries::generator(2, 1, -1);
  EXPECT_TRUE((a * b).is_one());
  auto c = NonRepeatingSeries::generator(2, 1, 1) * NonRepeatingSeries::generator(2, 2, 1);
  EXPECT_EQ(to_string(c), "1 + X1 + X2 + X1X2");
  EXPECT_EQ(NonRepeatingSeries::one(2) * c, c);
  EXPECT_THROW(series_mul(NonRepeatingSeries::one(2), NonRepeatingSeries::one(3)), Error);
}

TEST(MagnusImage, KnownValues) {
  EXPECT_EQ(to_string(magnus_image(w("x1"), 1)), "1 + X1");
  EXPECT_EQ(to_string(magnus_image(commutator(w("x1"), w("x2")), 2)), "1 + X1X2 - X2X1");
  EXPECT_TRUE(is_rf_trivial(commutator(w("x1"), conjugate(w("x1"), w("x2"))), 2));
  EXPECT_FALSE(is_rf_trivial(commutator(w("x1"), w("x2")), 2));
  EXPECT_TRUE(is_rf_trivial(Word(), 3));
  EXPECT_THROW(magnus_image(w("x3"), 2), UnsupportedAlphabet);
  EXPECT_THROW(magnus_image(w("s1"), 2), UnsupportedAlphabet);
}

TEST(MagnusImage, ZeroSeriesPrints) { EXPECT_EQ(to_string(NonRepeatingSeries(2)), "0"); }

TEST(MuCoefficient, KnownValues) {
  EXPECT_EQ(mu_coefficient(w("x1^3 x2"), {1}, 2), 3);
  EXPECT_EQ(mu_coefficient(commutator(w("x1"), w("x2")), {1, 2}, 2), 1);
  EXPECT_EQ(mu_coefficient(Word(), {}, 2), 1);
  EXPECT_THROW(mu_coefficient(w("x1"), {1, 1}, 2), Error);
}

TEST(MagnusImage, MatchesSubsequenceCountingOracle) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    int k = 1 + trial % 4;
    Word x = oracle::random_atom_word(rng, k, 12);
    auto img = magnus_image(x, k);
    for (const auto& m : all_monomials(k))
      EXPECT_EQ(img.coefficient(m), oracle::magnus_coefficient(as_pairs(x), m)) << to_string(x);
  }
}

TEST(MagnusImage, MultiplicativeAndInvertible) {
  std::mt19937 rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    Word u = oracle::random_atom_word(rng, 4, 10), v = oracle::random_atom_word(rng, 4, 10);
    EXPECT_EQ(magnus_image(u * v, 4), magnus_image(u, 4) * magnus_image(v, 4));
    EXPECT_TRUE((magnus_image(u, 4) * magnus_image(invert(u), 4)).is_one());
    for (int i = 1; i <= 4; ++i)
      EXPECT_EQ(magnus_image(u, 4).coefficient({i}), u.exponent_sum(atom("x" + std::to_string(i))));
  }
}

TEST(MagnusImage, ConstantTermIsOne) {
  std::mt19937 rng(33);
  for (int trial = 0; trial < 100; ++trial) EXPECT_EQ(magnus_image(oracle::random_atom_word(rng, 3, 15), 3).coefficient({}), 1);
}

TEST(LhKernel, AllSelfConjugateCommutatorsAreTrivial) {
  for (int k = 1; k <= 3; ++k) {
    auto basis = atom_basis(k);
    for (int i = 0; i < k; ++i) {
      Word xi = Word::letter(basis[static_cast<std::size_t>(i)]);
      auto e = enumerate_shortlex(basis, 3);
      while (auto g = e.next()) EXPECT_TRUE(is_rf_trivial(commutator(xi, conjugate(xi, *g)), basis));
    }
  }
}

// Words of length <= 3 over two letters: two words get the same image iff the
// subsequence oracle gives them the same coefficients.
TEST(Separation, AgreesWithBruteForce) {
  auto words = enumerate_shortlex(atom_basis(2), 3).collect();
  auto monos = all_monomials(2);
  for (std::size_t a = 0; a < words.size(); ++a)
    for (std::size_t b = a + 1; b < words.size(); ++b) {
      bool differ = false;
      for (const auto& m : monos)
        differ = differ || oracle::magnus_coefficient(as_pairs(words[a]), m) != oracle::magnus_coefficient(as_pairs(words[b]), m);
      EXPECT_EQ(differ, !is_rf_trivial(invert(words[a]) * words[b], 2))
          << to_string(words[a]) << " vs " << to_string(words[b]);
    }
}
