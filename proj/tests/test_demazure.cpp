#include <doctest.h>

#include "genhecke/demazure.hpp"

using namespace genhecke;

namespace {

Poly2 random_poly(SplitMix64& rng, int max_deg = 4) {
  Poly2 p;
  int terms = 1 + static_cast<int>(rng.next() % 4);
  for (int t = 0; t < terms; ++t) {
    int dx = static_cast<int>(rng.next() % (max_deg + 1));
    int dy = static_cast<int>(rng.next() % (max_deg + 1));
    int a = static_cast<int>(rng.next() % 9) - 4;
    int b = static_cast<int>(rng.next() % 9) - 4;
    p.add(dx, dy, Cyclo3(a, b));
  }
  return p;
}

}  // namespace

TEST_CASE("reflection images of the coordinates") {
  Cyclo3 j = Cyclo3::j(), j2 = Cyclo3::j2();
  CHECK(reflect(1, Poly2::x()) == Poly2::x());
  CHECK(reflect(1, Poly2::y()) == Poly2::y().scaled(j));
  // s2 maps x to ((j-j^2) x + (4j+2j^2) y)/3
  Poly2 sx = reflect(2, Poly2::x());
  Cyclo3 third(Rational(1, 3), 0);
  Poly2 want = (Poly2::x().scaled(j - j2) + Poly2::y().scaled(j * 4 + j2 * 2)).scaled(third);
  CHECK(sx == want);
  // the hyperplane direction x - 2y is fixed by s2
  Poly2 fixed = Poly2::x() - Poly2::y().scaled(Cyclo3(2));
  CHECK(reflect(2, fixed) == fixed);
}

TEST_CASE("reflections are algebra maps of order three") {
  SplitMix64 rng(11);
  for (int iter = 0; iter < 50; ++iter) {
    Poly2 p = random_poly(rng), q = random_poly(rng);
    for (int i : {1, 2}) {
      CHECK(reflect(i, p * q) == reflect(i, p) * reflect(i, q));
      CHECK(reflect(i, reflect(i, reflect(i, p))) == p);
    }
  }
}

TEST_CASE("exact division") {
  LinearForm xy{Cyclo3(1), Cyclo3(1)};  // x + y
  LinearForm ly{Cyclo3(0), Cyclo3(1)};  // y
  Poly2 x = Poly2::x(), y = Poly2::y();
  CHECK(exact_divide((x + y) * x, xy) == x);
  CHECK(exact_divide(y.pow(3), ly) == y.pow(2));
  // (s1.y^4 - y^4) / y = (j - 1) y^3
  Poly2 num = reflect(1, y.pow(4)) - y.pow(4);
  CHECK(exact_divide(num, ly) == y.pow(3).scaled(Cyclo3::j() - Cyclo3(1)));
  CHECK_THROWS_WITH_AS(exact_divide(x + Poly2::monomial(0, 0, 1), xy),
                       doctest::Contains("remainder"), Error);
}

TEST_CASE("delta on monomials") {
  Cyclo3 j = Cyclo3::j(), j2 = Cyclo3::j2();
  // delta_1 maps x^a y^b to (j^b - 1) x^a y^(b-1)
  SplitMix64 rng(12);
  for (int iter = 0; iter < 40; ++iter) {
    int a = static_cast<int>(rng.next() % 5);
    int b = 1 + static_cast<int>(rng.next() % 5);
    Cyclo3 jb(1);
    for (int k = 0; k < b; ++k) jb *= j;
    Poly2 m = Poly2::monomial(a, b, 1);
    CHECK(delta(1, m) == Poly2::monomial(a, b - 1, jb - Cyclo3(1)));
  }
  CHECK(delta(1, Poly2::monomial(3, 0, 1)).is_zero());
  CHECK(delta(2, Poly2::y()).scaled(3) == Poly2::monomial(0, 0, j * 2 + j2));
  Poly2 dxy = delta(2, Poly2::x() * Poly2::y()).scaled(3);
  CHECK(dxy == Poly2::x().scaled(j2) + Poly2::y().scaled(Cyclo3(-2)));
}

TEST_CASE("twisted Leibniz rule") {
  SplitMix64 rng(13);
  for (int iter = 0; iter < 60; ++iter) {
    Poly2 p = random_poly(rng, 3), q = random_poly(rng, 3);
    for (int i : {1, 2}) {
      Poly2 lhs = delta(i, p * q);
      Poly2 rhs = delta(i, p) * q + reflect(i, p) * delta(i, q);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("displayed table reproduces") {
  auto rows = demazure_table();
  CHECK(rows.size() == 8);
  for (const auto& row : rows) {
    INFO(row.label, " computed ", row.computed.str());
    CHECK(row.ok);
  }
}

TEST_CASE("braid failure certificate") {
  BraidFailureReport rpt = braid_failure_check();
  CHECK(rpt.ok);
  CHECK(rpt.u_matches);
  CHECK(rpt.v_matches);
  CHECK(rpt.independent);
  // the two vectors in the (1, j) basis
  Cyclo3 j = Cyclo3::j(), j2 = Cyclo3::j2();
  CHECK(rpt.u3.coeff(1, 0) == j2 * 5 - j * 2);
  CHECK(rpt.u3.coeff(0, 1) == j * 10 + j2 * 8);
  CHECK(rpt.v9.coeff(1, 0) == j * 4 - j2 * 13);
  CHECK(rpt.v9.coeff(0, 1) == j2 * 2 - j * 2);
  CHECK_FALSE(rpt.det.is_zero());
}

TEST_CASE("nilpotency sweep") {
  check_nilpotency(12);  // throws on failure
  // delta_i^3 kills every monomial of degree <= 12; spot-check one larger
  CHECK(delta(2, delta(2, delta(2, Poly2::monomial(7, 6, 1)))).is_zero());
}

TEST_CASE("degree bookkeeping rejects negatives") {
  CHECK_THROWS_AS(Poly2::monomial(-1, 0, 1), Error);
  CHECK(Poly2().total_degree() == -1);
}
