#ifndef GENHECKE_ENUMERATE_HPP
#define GENHECKE_ENUMERATE_HPP

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "genhecke/presentation.hpp"

namespace genhecke {

/// sorted sparse rational vector (index ascending, no zero entries)
struct SparseVec {
  std::vector<std::pair<int, Rational>> entries;

  static SparseVec unit(int i) { return SparseVec{{{i, Rational(1)}}}; }
  bool empty() const { return entries.empty(); }
  std::size_t size() const { return entries.size(); }
  int max_index() const { return entries.empty() ? -1 : entries.back().first; }
  const Rational* find(int i) const;
  void scale(const Rational& k);
  bool operator==(const SparseVec& o) const { return entries == o.entries; }
};

SparseVec vec_add(const SparseVec& a, const SparseVec& b);
SparseVec vec_sub(const SparseVec& a, const SparseVec& b);
/// a + k*b
SparseVec vec_axpy(const SparseVec& a, const Rational& k, const SparseVec& b);

/// accumulator used for row combinations
class VecAccum {
 public:
  void add(int i, const Rational& c);
  void add_scaled(const SparseVec& v, const Rational& k);
  SparseVec take();

 private:
  std::unordered_map<int, Rational> slots_;
};

using Mat = std::vector<SparseVec>;  // row i = image of basis vector i

struct EnumerationOptions {
  int max_dim = 100000;
  int max_len = 64;
  int sweep_every = 32;
  std::string checkpoint_path;  // empty: no checkpointing
  long checkpoint_every = 4096;
  std::function<void(const std::string&)> log;  // nullptr: silent
};

struct BudgetExceeded : Error {
  BudgetExceeded(const std::string& what, int live, std::size_t frontier)
      : Error(what), live_dimension(live), frontier_size(frontier) {}
  int live_dimension;
  std::size_t frontier_size;
};

/// Certified output: a word basis, the right-multiplication matrix of every
/// generator, and the data needed to reproduce the run.
struct EnumerationResult {
  std::string presentation;
  int dimension = 0;
  std::vector<Word> basis;
  std::vector<Mat> matrices;  // [gen]
  Specialization spec;
  std::optional<std::uint64_t> seed;
  int max_len_explored = 0;
  long total_words = 0;  // words interned before coincidences
  /// specialized order-relation coefficients per generator (c_0 invertible)
  std::vector<std::vector<Rational>> order_coeffs;

  EnumerationResult(Specialization s) : spec(std::move(s)) {}
};

/// Todd-Coxeter-style closure over Q at a specialization: BFS definitions,
/// braid-relation imposition, echelon coincidence processing.
EnumerationResult enumerate(const Presentation& p, const Specialization& s,
                            const EnumerationOptions& opts = {});

/// enumerate at random_specialization(p.ring, seed), recording the seed
EnumerationResult enumerate_random(const Presentation& p, std::uint64_t seed,
                                   const EnumerationOptions& opts = {});

/// Resume an interrupted run from a checkpoint file written by enumerate().
EnumerationResult enumerate_resume(const Presentation& p, const std::string& checkpoint,
                                   const EnumerationOptions& opts = {});

struct VerifyCertificate {
  bool ok = false;
  std::string message;
  long identities_checked = 0;
};

/// Re-checks from scratch that every braid relation holds as a matrix
/// identity, every order polynomial annihilates its generator matrix and
/// every generator matrix is invertible (explicit inverse from the order
/// relation). Independent of the enumeration internals.
VerifyCertificate verify_result(const EnumerationResult& r, const Presentation& p);

// --- exact sparse matrix helpers ---
Mat mat_identity(int n);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_scale(const Mat& a, const Rational& k);
Mat mat_add(const Mat& a, const Mat& b);
bool mat_equal(const Mat& a, const Mat& b);
bool mat_is_identity(const Mat& a);

/// product of generator matrices along the word; negative letters use the
/// inverse supplied by the order relation
Mat eval_word(const EnumerationResult& r, const Word& w);

/// row vector v -> v * M_g^(+-1)
SparseVec apply_letter(const EnumerationResult& r, const SparseVec& v, int gen, int sign);
/// coordinates of a word in the basis: e_1 * M_w (the identity basis vector
/// is the empty word)
SparseVec word_coordinates(const EnumerationResult& r, const Word& w);

struct RankCertificate {
  bool full = false;
  int rank = 0;
  int rows = 0;
  std::vector<int> independent;  // row indices of the greedy independent subset
  int first_dependent = -1;
  /// "modular" when full rank was certified mod p (a sound one-sided
  /// certificate), "exact" when rational elimination ran
  std::string method;
};

/// Greedy row rank in listed order. Full rank mod p implies full rank over
/// Q; a deficit falls back to exact rational elimination.
RankCertificate row_rank(const std::vector<SparseVec>& rows, int dim);

struct SpanningCertificate {
  bool ok = false;
  int rank = 0;
  int dimension = 0;
  std::string message;
  std::string list_used;  // "primary" or "fallback"
  bool contains_identity = false;
  int first_dependent = -1;
  /// greedy independent subset, as indices into the word list in order
  std::vector<int> independent;
};

/// Certifies that the words span the regular module of the enumeration:
/// coordinates are chased, row-reduced, and the rank must equal the
/// dimension.
SpanningCertificate certify_spanning(const std::vector<Word>& words,
                                     const EnumerationResult& r);

/// canonical text form used for bit-identity checks; JSON IO lives in
/// report.hpp
std::string result_to_text(const EnumerationResult& r);

}  // namespace genhecke

#endif  // GENHECKE_ENUMERATE_HPP
