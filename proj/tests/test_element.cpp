#include <doctest.h>

#include "genhecke/element.hpp"
#include "genhecke/presentation.hpp"

using namespace genhecke;

namespace {

const Presentation& g26() {
  static Presentation p = catalogue("G26", default_data_dir());
  return p;
}

Element<LaurentPoly> random_element(const Presentation& p, SplitMix64& rng) {
  Element<LaurentPoly> x;
  int terms = 1 + static_cast<int>(rng.next() % 3);
  for (int t = 0; t < terms; ++t) {
    Word w;
    int n = static_cast<int>(rng.next() % 4);
    for (int i = 0; i < n; ++i)
      w.push(static_cast<int>(rng.next() % 3), static_cast<int>(rng.next() % 5) - 2);
    long c = static_cast<long>(rng.next() % 9) - 4;
    x.add(w, LaurentPoly::constant(p.ring, c));
  }
  return x;
}

}  // namespace

TEST_CASE("window rewrites match the order relations") {
  const Presentation& p = g26();
  auto policy = p.window_policy();
  const auto& gens = p.gens;
  auto one = LaurentPoly::constant(p.ring, 1);

  // s1^2 -> a s1 + b + c s1^-1
  Element<LaurentPoly> s1sq = window_reduce(Word::parse(gens, "s1^2"), one, policy);
  Element<LaurentPoly> want;
  want.add(Word::parse(gens, "s1"), LaurentPoly::variable(p.ring, "a"));
  want.add(Word(), LaurentPoly::variable(p.ring, "b"));
  want.add(Word::parse(gens, "s1^-1"), LaurentPoly::variable(p.ring, "c"));
  CHECK(s1sq == want);

  // t^-1 -> e^-1 t - d e^-1
  Element<LaurentPoly> tinv = window_reduce(Word::parse(gens, "t^-1"), one, policy);
  Element<LaurentPoly> want_t;
  want_t.add(Word::parse(gens, "t"), LaurentPoly::variable(p.ring, "e", -1));
  want_t.add(Word(), LaurentPoly::parse(p.ring, "-d*e^-1"));
  CHECK(tinv == want_t);

  // s1^-2 -> c^-1 s1 - a c^-1 - b c^-1 s1^-1
  Element<LaurentPoly> s1m2 = window_reduce(Word::parse(gens, "s1^-2"), one, policy);
  Element<LaurentPoly> want_m2;
  want_m2.add(Word::parse(gens, "s1"), LaurentPoly::parse(p.ring, "c^-1"));
  want_m2.add(Word(), LaurentPoly::parse(p.ring, "-a*c^-1"));
  want_m2.add(Word::parse(gens, "s1^-1"), LaurentPoly::parse(p.ring, "-b*c^-1"));
  CHECK(s1m2 == want_m2);

  // oracle by repeated substitution: t^3 = (d^2+e) t + d e
  Element<LaurentPoly> t3 = window_reduce(Word::parse(gens, "t^3"), one, policy);
  Element<LaurentPoly> want_t3;
  want_t3.add(Word::parse(gens, "t"), LaurentPoly::parse(p.ring, "d^2 + e"));
  want_t3.add(Word(), LaurentPoly::parse(p.ring, "d*e"));
  CHECK(t3 == want_t3);
}

TEST_CASE("t times t window-reduces to d t + e") {
  const Presentation& p = g26();
  auto policy = p.window_policy();
  Element<LaurentPoly> t(Word::parse(p.gens, "t"), LaurentPoly::constant(p.ring, 1));
  Element<LaurentPoly> prod = window_reduce(t * t, policy);
  Element<LaurentPoly> want;
  want.add(Word::parse(p.gens, "t"), LaurentPoly::variable(p.ring, "d"));
  want.add(Word(), LaurentPoly::variable(p.ring, "e"));
  CHECK(prod == want);
}

TEST_CASE("multiplication is bilinear with unit and zero") {
  const Presentation& p = g26();
  SplitMix64 rng(31);
  Element<LaurentPoly> one(Word(), LaurentPoly::constant(p.ring, 1));
  for (int iter = 0; iter < 100; ++iter) {
    Element<LaurentPoly> x = random_element(p, rng);
    CHECK(one * x == x);
    CHECK((x * Element<LaurentPoly>()).is_zero());
  }
}

TEST_CASE("window reduction is idempotent") {
  const Presentation& p = g26();
  auto policy = p.window_policy();
  SplitMix64 rng(32);
  for (int iter = 0; iter < 200; ++iter) {
    Element<LaurentPoly> x = random_element(p, rng);
    Element<LaurentPoly> red = window_reduce(x, policy);
    CHECK(window_reduce(red, policy) == red);
  }
}

TEST_CASE("window reduction commutes with specialization") {
  const Presentation& p = g26();
  auto policy = p.window_policy();
  SplitMix64 rng(33);
  for (int iter = 0; iter < 100; ++iter) {
    Specialization s = random_specialization(p.ring, 1000 + iter);
    auto spolicy = specialize(policy, s, p.num_gens());
    Element<LaurentPoly> x = random_element(p, rng);
    Element<Rational> a = specialize(window_reduce(x, policy), s);
    Element<Rational> b = window_reduce(specialize(x, s), spolicy);
    CHECK(a == b);
  }
}

TEST_CASE("policy must cover all generators") {
  const Presentation& p = g26();
  WindowPolicy<LaurentPoly> partial;
  partial.set_rule(0, p.order_rules[0]);
  CHECK_THROWS_AS(window_reduce(Word::parse(p.gens, "t^2"),
                                LaurentPoly::constant(p.ring, 1), partial),
                  Error);
}

TEST_CASE("element text round-trip") {
  const Presentation& p = g26();
  Element<LaurentPoly> x;
  x.add(Word::parse(p.gens, "t s2^-1"), LaurentPoly::parse(p.ring, "c^9"));
  x.add(Word(), LaurentPoly::parse(p.ring, "2"));
  std::string text = element_str(x, p.gens);
  CHECK(element_parse(p.ring, p.gens, text) == x);
}
