#include <gtest/gtest.h>

#include "hbraid/dehornoy.hpp"
#include "hbraid/extension.hpp"
#include "hbraid/verify.hpp"

using namespace hbraid;

namespace {

Word w(const char* text) { return parse_word(text); }

// <x | > by <y | y^2> with y acting trivially
ExtensionData toy() {
  ExtensionData d;
  d.kernel.generators = {atom("x")};
  d.quotient.generators = {atom("y")};
  d.quotient.relators = {{"q", w("y^2")}};
  d.lifts[atom("y")] = w("y");
  d.rel_words["q"] = Word();
  d.conj_words[{atom("y"), atom("x")}] = w("x");
  return d;
}

std::vector<std::string> labels(const Presentation& p) {
  std::vector<std::string> out;
  for (const auto& r : p.relators) out.push_back(r.label);
  return out;
}

}  // namespace

TEST(Assemble, ToyDirectProduct) {
  auto p = assemble_extension(toy());
  EXPECT_EQ(p.family, FamilyTag::Custom);
  EXPECT_EQ(p.generators, (std::vector<Symbol>{atom("x"), atom("y")}));
  ASSERT_EQ(p.relators.size(), 2u);
  EXPECT_EQ(p.relators[0].word, w("y^2"));
  EXPECT_EQ(p.relators[1].word, w("y x y^-1 x^-1"));
  EXPECT_EQ(labels(p), (std::vector<std::string>{"T2:q", "T3:y,x"}));
  EXPECT_EQ(to_string(h1(p)), "Z + Z/2");
}

TEST(Assemble, MissingDataIsReported) {
  auto d = toy();
  d.conj_words.clear();
  EXPECT_THROW(assemble_extension(d), IncompleteData);
  d = toy();
  d.rel_words.clear();
  EXPECT_THROW(assemble_extension(d), IncompleteData);
  d = toy();
  d.lifts.clear();
  EXPECT_THROW(assemble_extension(d), IncompleteData);
  d = toy();
  d.lifts[atom("y")] = w("y y");
  EXPECT_THROW(assemble_extension(d), Error);
}

TEST(Assemble, BuiltInBraidData) {
  for (int n = 2; n <= 4; ++n)
    for (int g = 1; g <= 2; ++g) {
      auto d = homotopy_extension_data(n, g, true, 1);
      auto p = assemble_extension(d);
      EXPECT_EQ(p.family, FamilyTag::Extension);
      const std::size_t expect_gens = static_cast<std::size_t>(2 * g * n + n * (n - 1) / 2 + (n - 1));
      EXPECT_EQ(p.generators.size(), expect_gens);
      EXPECT_EQ(p.generators.back(), sigma(n - 1));
      std::size_t t3 = 0;
      for (const auto& r : p.relators) t3 += r.label.rfind("T3:", 0) == 0;
      EXPECT_EQ(t3, d.conj_words.size());
      EXPECT_EQ(h1(p), *expected_h1(p)) << n << "," << g;
    }
}

TEST(Tietze, EliminatesAnIsolatedGenerator) {
  Presentation p;
  p.generators = {atom("x"), atom("y"), atom("z")};
  p.relators = {{"def", w("z x^-1 y^-1")}, {"use", w("z^2 y")}, {"keep", w("x^3")}};
  auto q = tietze_eliminate(p, atom("z"), "def");
  EXPECT_EQ(q.generators, (std::vector<Symbol>{atom("x"), atom("y")}));
  ASSERT_EQ(q.relators.size(), 2u);
  EXPECT_EQ(q.relators[0].label, "use");
  EXPECT_EQ(q.relators[0].word, w("y x y x y"));
  EXPECT_EQ(q.relators[1].word, w("x^3"));
}

TEST(Tietze, InverseOccurrenceAndDroppedRelators) {
  Presentation p;
  p.generators = {atom("x"), atom("y")};
  p.relators = {{"def", w("x y^-1")}, {"gone", w("y x^-1")}};
  auto q = tietze_eliminate(p, atom("y"), "def");
  EXPECT_TRUE(q.relators.empty());
  EXPECT_EQ(q.generators, std::vector<Symbol>{atom("x")});
}

TEST(Tietze, Errors) {
  Presentation p;
  p.generators = {atom("x"), atom("y")};
  p.relators = {{"twice", w("x y x")}, {"none", w("y")}};
  EXPECT_THROW(tietze_eliminate(p, atom("x"), "twice"), Error);
  EXPECT_THROW(tietze_eliminate(p, atom("x"), "none"), Error);
  EXPECT_THROW(tietze_eliminate(p, atom("x"), "missing"), Error);
}

TEST(Tietze, AuxiliaryRelatorsRemoveDerivedGenerators) {
  auto p = assemble_extension(homotopy_extension_data(3, 1, true, 1));
  auto aux = auxiliary_relators(3, 1, p.alphabet());
  for (auto& r : aux) r.label = "aux:" + r.label;
  p.relators.insert(p.relators.end(), aux.begin(), aux.end());
  auto q = tietze_eliminate(p, tgen(1, 2), "aux:R9[1,2]");
  EXPECT_EQ(std::count(q.generators.begin(), q.generators.end(), tgen(1, 2)), 0);
  for (const auto& r : q.relators) EXPECT_FALSE(r.word.contains(tgen(1, 2))) << r.label;
  auto q2 = tietze_eliminate(q, surf_a(2, 1), "aux:R8[1,1]");
  for (const auto& r : q2.relators) EXPECT_FALSE(r.word.contains(surf_a(2, 1))) << r.label;
}

TEST(Reduce, ChainLeavesSurfaceGenerators) {
  for (int n = 2; n <= 4; ++n)
    for (int g = 1; g <= 2; ++g) {
      auto assembled = assemble_extension(homotopy_extension_data(n, g, true, 1));
      auto reduced = reduce_to_surface_generators(assembled);
      std::vector<Symbol> expect;
      for (int r = 1; r <= 2 * g; ++r) expect.push_back(surf_a(1, r));
      for (int i = 1; i < n; ++i) expect.push_back(sigma(i));
      auto got = reduced.generators;
      std::sort(got.begin(), got.end());
      std::sort(expect.begin(), expect.end());
      EXPECT_EQ(got, expect) << n << "," << g;
      EXPECT_TRUE(purity_report(reduced.relators, n).passed());
      EXPECT_EQ(h1(reduced), h1(assembled));
      EXPECT_EQ(h1(reduced), h1(surface_braid_presentation(n, g)));
    }
}

TEST(ConjugationWords, BandGeneratorsMatchInTheBraidGroup) {
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k < n; ++k)
      for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          Word lhs = Word::letter(sigma(k)) * expand_t(i, j) * Word::letter(sigma(k), -1);
          Word rhs = expand_derived(conjugation_word_t(k, i, j), 1);
          EXPECT_TRUE(is_trivial_braid(lhs * invert(rhs))) << "k=" << k << " t" << i << "." << j;
        }
}

TEST(ConjugationWords, SurfaceGeneratorsOnTheSwappedStrands) {
  for (int n = 2; n <= 4; ++n)
    for (int g = 1; g <= 2; ++g)
      for (int k = 1; k < n; ++k)
        for (int i : {k, k + 1})
          for (int r = 1; r <= 2 * g; ++r) {
            Word lhs = Word::letter(sigma(k)) * expand_a(i, r, g) * Word::letter(sigma(k), -1);
            Word rhs = expand_derived(conjugation_word_a(k, i, r), g);
            EXPECT_EQ(lhs, rhs) << "k=" << k << " a" << i << "." << r;
          }
}

TEST(ConjugationWords, OtherStrandsAreFixed) {
  EXPECT_EQ(conjugation_word_a(2, 1, 1), Word::letter(surf_a(1, 1)));
  EXPECT_EQ(conjugation_word_a(1, 3, 2), Word::letter(surf_a(3, 2)));
  EXPECT_EQ(conjugation_word_t(3, 1, 2), Word::letter(tgen(1, 2)));
}
