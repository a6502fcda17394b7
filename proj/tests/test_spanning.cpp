#include <doctest.h>

#include <set>

#include "genhecke/spanning.hpp"

using namespace genhecke;

namespace {

std::string data_dir() { return default_data_dir(); }

}  // namespace

TEST_CASE("the 30-word family dedupes to 24 window words") {
  Presentation g4 = catalogue("G4", data_dir());
  std::vector<Word> family = a3_word_family(g4);
  CHECK(family.size() == 24);
  std::set<Word> distinct(family.begin(), family.end());
  CHECK(distinct.size() == 24);
  CHECK(distinct.count(Word()) == 1);
  for (const Word& w : family)
    for (const Letter& l : w.letters()) CHECK((l.exp == 1 || l.exp == -1));
}

TEST_CASE("the 30-word family spans the rank-24 algebra") {
  Presentation g4 = catalogue("G4", data_dir());
  EnumerationResult r = enumerate_random(g4, 17);
  REQUIRE(r.dimension == 24);
  SpanningCertificate cert = certify_spanning(a3_word_family(g4), r);
  CHECK(cert.ok);
  CHECK(cert.rank == 24);
  // the whole deduplicated family is independent, in listed order
  CHECK(cert.independent.size() == 24);
  CHECK(cert.independent.front() == 0);
}

TEST_CASE("the 18-word family is a basis of the parabolic") {
  Presentation para = catalogue("G26-parabolic-s2t", data_dir());
  std::vector<Word> family = parabolic_word_family(para);
  CHECK(family.size() == 18);
  EnumerationResult r = enumerate_random(para, 17);
  REQUIRE(r.dimension == 18);
  SpanningCertificate cert = certify_spanning(family, r);
  CHECK(cert.ok);
  CHECK(cert.rank == 18);
}

TEST_CASE("the ariki-koike family spans") {
  Presentation gd3 = catalogue("Gd12(3)", data_dir());
  std::vector<Word> family = ariki_koike_family(gd3, 3);
  CHECK(family.size() == 18);
  EnumerationResult r = enumerate_random(gd3, 17);
  REQUIRE(r.dimension == 18);
  CHECK(certify_spanning(family, r).ok);
}

TEST_CASE("candidate family construction") {
  Presentation g26 = catalogue("G26", data_dir());
  Presentation g4 = catalogue("G4", data_dir());
  CandidateFamily fam = build_candidate_1296(g26, g4);
  CHECK(fam.b24.size() == 24);
  CHECK(fam.g54.size() == 54);
  CHECK(fam.words.size() == 1296);
  std::set<Word> distinct(fam.words.begin(), fam.words.end());
  CHECK(distinct.size() == 1296);
  CHECK(distinct.count(Word()) == 1);

  // all window-reduced: s-exponents in {-1,1}, t-exponent 1
  int t = g26.gens.index("t");
  for (const Word& w : fam.words)
    for (const Letter& l : w.letters()) {
      if (l.gen == t) CHECK(l.exp == 1);
      else CHECK((l.exp == 1 || l.exp == -1));
    }

  // the long surrogate words are present
  Word c2 = Word::parse(g26.gens, "t s2 s1 t s2 s1 t s2 s1").pow(2);
  CHECK(distinct.count(c2) == 1);
  Word head = Word::parse(g26.gens, "t s2 s1 t s2 t");
  CHECK(distinct.count(head) == 1);

  // fallback words: expansions of the exact inverse-t words, all positive
  CHECK(!fam.fallback.empty());
  for (const Word& w : fam.fallback)
    for (const Letter& l : w.letters())
      if (l.gen == t) CHECK(l.exp >= 1);
}

TEST_CASE("tier sizes inside the 54-word generator list") {
  Presentation g26 = catalogue("G26", data_dir());
  Presentation g4 = catalogue("G4", data_dir());
  CandidateFamily fam = build_candidate_1296(g26, g4);
  int t = g26.gens.index("t");
  // count words by number of t letters: 1+8 with <=1, 24 with 2, 18 with 3,
  // 3 long ones with 6 or 9
  std::map<int, int> by_t;
  for (const Word& w : fam.g54) {
    int n = 0;
    for (const Letter& l : w.letters())
      if (l.gen == t) n += l.exp;
    ++by_t[n];
  }
  CHECK(by_t[0] == 1);
  CHECK(by_t[1] == 8);
  CHECK(by_t[2] == 24);
  CHECK(by_t[3] == 18);
  CHECK(by_t[6] == 2);  // C^2 and the C^-2 surrogate
  CHECK(by_t[9] == 1);  // C^3
}

TEST_CASE("certify_candidate falls back when the primary list is deficient") {
  Presentation g4 = catalogue("G4", data_dir());
  EnumerationResult r = enumerate_random(g4, 18);
  CandidateFamily fake;
  fake.b24 = {Word()};
  fake.words = {Word()};
  fake.fallback = a3_word_family(g4);
  SpanningCertificate cert = certify_candidate(fake, r);
  CHECK(cert.list_used == "fallback");
  CHECK(cert.ok);  // the fallback words alone span the 24-dim algebra
  CHECK(cert.rank == 24);
}

TEST_CASE("spanning failure reports the deficit") {
  Presentation g4 = catalogue("G4", data_dir());
  EnumerationResult r = enumerate_random(g4, 19);
  std::vector<Word> few = {Word(), Word::parse(g4.gens, "s1")};
  SpanningCertificate cert = certify_spanning(few, r);
  CHECK_FALSE(cert.ok);
  CHECK(cert.rank == 2);
  CHECK(cert.contains_identity);
}
