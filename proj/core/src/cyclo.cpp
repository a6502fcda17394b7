#include "genhecke/cyclo.hpp"

#include <sstream>

namespace genhecke {

Cyclo3 Cyclo3::operator*(const Cyclo3& o) const {
  // (a + bj)(c + dj) = ac + (ad + bc) j + bd j^2,  j^2 = -1 - j
  Rational ac = r0_ * o.r0_;
  Rational bd = r1_ * o.r1_;
  Rational cross = r0_ * o.r1_ + r1_ * o.r0_;
  return {ac - bd, cross - bd};
}

Cyclo3 Cyclo3::inverse() const {
  if (is_zero()) throw Error("inversion of zero in Q(j)");
  // conjugate is (a - b) - b j, norm is a^2 - a b + b^2
  Rational norm = r0_ * r0_ - r0_ * r1_ + r1_ * r1_;
  return {(r0_ - r1_) / norm, -r1_ / norm};
}

std::string Cyclo3::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool emitted = false;
  if (r0_ != 0) {
    out << r0_.get_str();
    emitted = true;
  }
  if (r1_ != 0) {
    if (emitted) out << (r1_ > 0 ? " + " : " - ");
    else if (r1_ < 0) out << "-";
    Rational mag = abs(r1_);
    if (mag != 1) out << mag.get_str() << "*";
    out << "j";
  }
  return out.str();
}

}  // namespace genhecke
