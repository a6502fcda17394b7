#ifndef GENHECKE_CYCLO_HPP
#define GENHECKE_CYCLO_HPP

#include <string>

#include "genhecke/ring.hpp"

namespace genhecke {

/// An element r0 + r1*j of Q(j), j a primitive cube root of unity.
/// Multiplication reduces with j^2 = -1 - j; the class is a field.
class Cyclo3 {
 public:
  Cyclo3() = default;
  Cyclo3(Rational r0, Rational r1) : r0_(std::move(r0)), r1_(std::move(r1)) {
    r0_.canonicalize();
    r1_.canonicalize();
  }
  Cyclo3(int n) : r0_(n) {}  // NOLINT: implicit from int is convenient

  static Cyclo3 j() { return Cyclo3(0, 1); }
  /// j^2 = -1 - j
  static Cyclo3 j2() { return Cyclo3(-1, -1); }

  const Rational& re() const { return r0_; }   // coefficient of 1
  const Rational& jc() const { return r1_; }   // coefficient of j

  bool is_zero() const { return r0_ == 0 && r1_ == 0; }

  Cyclo3 operator+(const Cyclo3& o) const { return {r0_ + o.r0_, r1_ + o.r1_}; }
  Cyclo3 operator-(const Cyclo3& o) const { return {r0_ - o.r0_, r1_ - o.r1_}; }
  Cyclo3 operator-() const { return {-r0_, -r1_}; }
  Cyclo3 operator*(const Cyclo3& o) const;
  Cyclo3 inverse() const;  // throws on zero
  Cyclo3 operator/(const Cyclo3& o) const { return *this * o.inverse(); }

  Cyclo3& operator+=(const Cyclo3& o) { return *this = *this + o; }
  Cyclo3& operator-=(const Cyclo3& o) { return *this = *this - o; }
  Cyclo3& operator*=(const Cyclo3& o) { return *this = *this * o; }

  bool operator==(const Cyclo3& o) const { return r0_ == o.r0_ && r1_ == o.r1_; }
  bool operator!=(const Cyclo3& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Rational r0_ = 0;
  Rational r1_ = 0;
};

}  // namespace genhecke

#endif  // GENHECKE_CYCLO_HPP
