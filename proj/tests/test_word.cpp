#include <doctest.h>

#include "genhecke/word.hpp"

using namespace genhecke;

namespace {

const GeneratorSet& g26_gens() {
  static GeneratorSet gens({"s1", "s2", "t"});
  return gens;
}

Word random_word(SplitMix64& rng) {
  Word w;
  int n = static_cast<int>(rng.next() % 6);
  for (int i = 0; i < n; ++i) {
    int gen = static_cast<int>(rng.next() % 3);
    int exp = static_cast<int>(rng.next() % 5) - 2;
    w.push(gen, exp);
  }
  return w;
}

}  // namespace

TEST_CASE("concatenation merges and cancels") {
  const auto& gens = g26_gens();
  Word s1 = Word::parse(gens, "s1");
  CHECK((s1 * Word::parse(gens, "s1^-1")).empty());
  CHECK(Word::parse(gens, "t s2") * Word::parse(gens, "s2^2") ==
        Word::parse(gens, "t s2^3"));
  Word w = Word::parse(gens, "t s2 s1^-1");
  CHECK(Word() * w == w);
  CHECK(w * Word() == w);
}

TEST_CASE("associativity on random triples") {
  SplitMix64 rng(55);
  for (int iter = 0; iter < 1000; ++iter) {
    Word a = random_word(rng), b = random_word(rng), c = random_word(rng);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("inverse and powers") {
  const auto& gens = g26_gens();
  Word w = Word::parse(gens, "t s2 s1^-1 s2 t");
  CHECK((w * w.inverse()).empty());
  CHECK(w.pow(0).empty());
  CHECK(w.pow(-2) == (w * w).inverse());
  CHECK(w.pow(3).expanded_size() == 15);
}

TEST_CASE("round-trip is bit-exact") {
  const auto& gens = g26_gens();
  for (const char* text : {"1", "t", "t s2 s1^-1 s2 t", "s1^2 s2^-3 t s1"}) {
    Word w = Word::parse(gens, text);
    CHECK(w.str(gens) == text);
  }
  SplitMix64 rng(77);
  for (int iter = 0; iter < 500; ++iter) {
    Word w = random_word(rng);
    CHECK(Word::parse(gens, w.str(gens)) == w);
  }
  CHECK_THROWS_AS(Word::parse(gens, "t^0"), Error);
  CHECK_THROWS_AS(Word::parse(gens, "u"), Error);
}

TEST_CASE("canonical order: length first, then lexicographic") {
  const auto& gens = g26_gens();
  CHECK(Word() < Word::parse(gens, "s1"));
  CHECK(Word::parse(gens, "t") < Word::parse(gens, "s1 s2"));     // shorter first
  CHECK(Word::parse(gens, "s1 s2") < Word::parse(gens, "s2 s1"));
  CHECK(Word::parse(gens, "s1^-1") < Word::parse(gens, "s1"));
  CHECK(Word::parse(gens, "t") < Word::parse(gens, "s1^2"));      // expanded length 1 vs 2
}

TEST_CASE("expansion round-trip") {
  const auto& gens = g26_gens();
  Word w = Word::parse(gens, "s1^2 s2^-3 t");
  auto units = w.expanded();
  CHECK(units.size() == 6);
  CHECK(Word::from_expanded(units) == w);
}
