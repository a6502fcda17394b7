#ifndef GENHECKE_DEMAZURE_HPP
#define GENHECKE_DEMAZURE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "genhecke/cyclo.hpp"

namespace genhecke {

/// Polynomial in Q(j)[x,y]; (x-degree, y-degree) -> coefficient.
class Poly2 {
 public:
  using TermMap = std::map<std::pair<int, int>, Cyclo3>;

  Poly2() = default;
  static Poly2 monomial(int dx, int dy, Cyclo3 coeff);
  static Poly2 x() { return monomial(1, 0, 1); }
  static Poly2 y() { return monomial(0, 1, 1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Cyclo3 coeff(int dx, int dy) const;

  void add(int dx, int dy, const Cyclo3& c);
  Poly2 operator+(const Poly2& o) const;
  Poly2 operator-(const Poly2& o) const;
  Poly2 operator*(const Poly2& o) const;
  Poly2 scaled(const Cyclo3& k) const;
  Poly2 pow(int n) const;

  bool operator==(const Poly2& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly2& o) const { return !(*this == o); }

  int total_degree() const;  // -1 for zero
  std::string str() const;

 private:
  TermMap terms_;
};

/// nonzero linear form  cx*x + cy*y
struct LinearForm {
  Cyclo3 cx, cy;
};

/// image of p under the reflection matrix of s_i, i in {1,2}
Poly2 reflect(int i, const Poly2& p);

/// exact quotient p / l; throws with the remainder when l does not divide p
Poly2 exact_divide(const Poly2& p, const LinearForm& l);

/// divided-difference operator: s_i.p - p = l_i * delta_i(p) with
/// l_1 = y and l_2 = x + y
Poly2 delta(int i, const Poly2& p);

struct TableRow {
  std::string label;
  Poly2 expected;
  Poly2 computed;
  bool ok = false;
};

/// The displayed single-operator values (the delta_2 table and
/// delta_1.y^4), recomputed and compared exactly.
std::vector<TableRow> demazure_table();

struct BraidFailureReport {
  bool ok = false;
  Poly2 u3;            // 3 * d1 d2 d1 . y^4
  Poly2 v9;            // 9 * d2 d1 d2 . y^4
  bool u_matches = false;
  bool v_matches = false;
  Cyclo3 det;          // 2x2 determinant of the (x,y) coefficients of u, v
  bool independent = false;
  std::string message;
};

/// Certifies the two composite values against their stored targets and the
/// linear independence of the pair (so no scalar can fix the braid relation).
BraidFailureReport braid_failure_check();

/// delta_i^3 annihilates monomials up to the degree bound and the
/// reflections cube to the identity there; throws on violation.
void check_nilpotency(int max_degree);

}  // namespace genhecke

#endif  // GENHECKE_DEMAZURE_HPP
