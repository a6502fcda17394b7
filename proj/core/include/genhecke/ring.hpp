#ifndef GENHECKE_RING_HPP
#define GENHECKE_RING_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace genhecke {

using Int = mpz_class;
using Rational = mpq_class;

/// Thrown on any contract violation (ring mismatch, bad parse, zero
/// inversion, ...). All library errors derive from this.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An ordered list of variable names, a subset of which are invertible
/// (allowed to carry negative exponents).
class RingSpec {
 public:
  RingSpec(std::vector<std::string> variables, std::vector<std::string> invertible);

  std::size_t size() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  bool invertible(std::size_t i) const { return invertible_[i]; }
  const std::string& name(std::size_t i) const { return vars_[i]; }

  // index of a variable name, throws on unknown name
  std::size_t index(const std::string& name) const;
  bool has(const std::string& name) const;

  bool operator==(const RingSpec& other) const {
    return vars_ == other.vars_ && invertible_ == other.invertible_;
  }

 private:
  std::vector<std::string> vars_;
  std::vector<bool> invertible_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

RingPtr make_ring(std::vector<std::string> variables,
                  std::vector<std::string> invertible);

/// The ring of integers, as the Laurent ring with no variables.
RingPtr trivial_ring();

namespace detail {
// graded-lexicographic order on exponent vectors
struct GradedLex {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};
}  // namespace detail

/// Exact multivariate Laurent polynomial over Z. Exponents of
/// non-invertible variables stay >= 0; zero coefficients are never stored.
class LaurentPoly {
 public:
  using TermMap = std::map<std::vector<int>, Int, detail::GradedLex>;

  LaurentPoly() : ring_(trivial_ring()) {}
  explicit LaurentPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static LaurentPoly constant(RingPtr ring, Int value);
  static LaurentPoly variable(RingPtr ring, const std::string& name, int exponent = 1);
  // monomial  coeff * prod vars[i]^exps[i]
  static LaurentPoly monomial(RingPtr ring, Int coeff, std::vector<int> exps);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  // constant term (zero if absent)
  Int constant_term() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  /// Inverse of a unit monomial (+-1 times a product of invertible
  /// variables); throws if the polynomial is not of that shape.
  LaurentPoly unit_inverse() const;

  std::string str() const;

  /// Parses the textual form, e.g. "2*a*c^-1 + b". Round-trips with str().
  static LaurentPoly parse(RingPtr ring, const std::string& text);

  void add_term(std::vector<int> exps, Int coeff);

 private:
  void check_exponents(const std::vector<int>& exps) const;

  RingPtr ring_;
  TermMap terms_;
};

/// Ring morphism to Q: one rational value per variable, nonzero on the
/// invertible ones.
class Specialization {
 public:
  Specialization(RingPtr ring, std::vector<Rational> values);
  static Specialization from_map(RingPtr ring,
                                 const std::map<std::string, Rational>& values);

  const RingPtr& ring() const { return ring_; }
  const Rational& value(std::size_t i) const { return values_[i]; }
  const std::vector<Rational>& values() const { return values_; }

  Rational operator()(const LaurentPoly& p) const;

  std::string str() const;  // "a=0,b=0,c=1"

 private:
  RingPtr ring_;
  std::vector<Rational> values_;
};

/// Deterministic PRNG (splitmix64) used wherever seeded randomness is
/// required; never depends on std:: distribution internals.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// uniform-ish draw in [1, 100]
  int small_positive();

 private:
  std::uint64_t state_;
};

/// Small random rationals with numerator/denominator in [1,100]; every
/// variable gets a nonzero value, so any specialization drawn this way
/// is valid.
Specialization random_specialization(RingPtr ring, std::uint64_t seed);

Rational parse_rational(const std::string& text);
std::string rational_str(const Rational& q);

}  // namespace genhecke

#endif  // GENHECKE_RING_HPP
