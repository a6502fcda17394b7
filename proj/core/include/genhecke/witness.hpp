#ifndef GENHECKE_WITNESS_HPP
#define GENHECKE_WITNESS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "genhecke/presentation.hpp"
#include "genhecke/ring.hpp"
#include "genhecke/word.hpp"

namespace genhecke {

/// finitely supported combination of indexed basis symbols
/// (family, index) -> integer coefficient, index arithmetic exact
using FormalVector = std::map<std::pair<int, long>, Int>;

/// An explicit module over a 0-Hecke-style quotient: named families of
/// basis symbols indexed by r >= 1 and local action rules
/// g . family[r] = sum coeff * target[r + offset], offset in {-1,0,1,2}.
class WitnessModule {
 public:
  struct ActionTerm {
    int family;
    int offset;
    Int coeff;
  };

  std::string name;
  std::string presentation_name;  // catalogue entry the module certifies
  std::vector<std::string> families;
  GeneratorSet gens;
  std::vector<std::vector<std::vector<ActionTerm>>> action;  // [gen][family]
  Word growth_word;
  int growth_family = 0;
  long growth_start = 1;

  int family_index(const std::string& f) const;

  FormalVector act(int gen, const FormalVector& v) const;
  /// left action of a positive word: rightmost letter acts first
  FormalVector act_word(const Word& w, const FormalVector& v) const;
};

WitnessModule parse_witness(const std::string& text);
WitnessModule load_witness_file(const std::string& path);
/// loads data_dir/witnesses/<name>.wit
WitnessModule witness_catalogue(const std::string& name, const std::string& data_dir);

struct RelationCertificate {
  bool ok = false;
  long bound = 0;
  std::string message;  // first violated relation on failure
  long checked = 0;     // number of (symbol, relation) pairs verified
};

/// Verifies every defining relation of the presentation on every basis
/// symbol with index <= R. Indices are never truncated, so symbols above R
/// appearing in intermediate vectors are handled exactly.
RelationCertificate check_relations(const WitnessModule& m, const Presentation& p, long R);

struct GrowthCertificate {
  bool ok = false;
  std::string message;
  /// orbit[k] = (family, index) of word^k applied to the start symbol
  std::vector<std::pair<std::string, long>> orbit;
};

/// Certifies that the k-th powers of the word move the start symbol along
/// single basis symbols with strictly increasing indices.
GrowthCertificate growth_witness(const WitnessModule& m, const Word& word,
                                 int family, long start, int iterations);

struct TorsionCertificate {
  bool ok = false;
  std::string message;
  bool trace_ok = false;        // c (s1^2 s2^2)^6 = c^9 replayed
  bool module_ok = false;       // (S1^2 S2^2)^6 w_1 = w_13 != 0
  long witness_index = 0;       // 13
};

/// Combines the shipped torsion trace with the nil witness module: the
/// trace gives c((s1^2 s2^2)^6 - c^8) = 0 while the module shows the word
/// has infinite order at c = 0, so (s1^2 s2^2)^6 - c^8 is nonzero torsion.
TorsionCertificate torsion_witness(const std::string& data_dir);

}  // namespace genhecke

#endif  // GENHECKE_WITNESS_HPP
