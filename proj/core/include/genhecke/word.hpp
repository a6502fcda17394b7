#ifndef GENHECKE_WORD_HPP
#define GENHECKE_WORD_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "genhecke/ring.hpp"

namespace genhecke {

/// Generator names for printing/parsing words; index = generator id.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  explicit GeneratorSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(int g) const { return names_.at(g); }
  const std::vector<std::string>& names() const { return names_; }
  int index(const std::string& name) const;  // throws on unknown
  bool has(const std::string& name) const;

 private:
  std::vector<std::string> names_;
};

struct Letter {
  int gen;
  int exp;
  bool operator==(const Letter&) const = default;
};

/// Reduced word in a braid-group alphabet: adjacent letters never share a
/// generator, exponents are nonzero, the empty word is the identity.
class Word {
 public:
  Word() = default;
  static Word single(int gen, int exp = 1);

  /// appends one letter, merging/cancelling at the back
  Word& push(int gen, int exp);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  Word operator*(const Word& o) const;
  Word inverse() const;
  Word pow(int k) const;  // k may be negative

  /// total number of unit letters (sum of |exp|)
  int expanded_size() const;
  /// unit letters with exp = +-1
  std::vector<Letter> expanded() const;
  static Word from_expanded(const std::vector<Letter>& units);

  int max_gen() const;  // -1 for the empty word

  bool operator==(const Word& o) const { return letters_ == o.letters_; }
  bool operator!=(const Word& o) const { return !(*this == o); }
  /// canonical order: expanded length, then lexicographic on letters
  bool operator<(const Word& o) const;

  std::size_t hash() const;

  std::string str(const GeneratorSet& gens) const;  // "t s2 s1^-1"; "1" for the identity
  static Word parse(const GeneratorSet& gens, const std::string& text);

 private:
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const { return w.hash(); }
};

}  // namespace genhecke

#endif  // GENHECKE_WORD_HPP
