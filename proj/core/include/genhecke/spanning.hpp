#ifndef GENHECKE_SPANNING_HPP
#define GENHECKE_SPANNING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "genhecke/enumerate.hpp"
#include "genhecke/presentation.hpp"

namespace genhecke {

/// The 30-word family {s1^a s2^b s1^c} u {s1^a s2 s1^-1 s2} over the rank-2
/// parabolic alphabet, deduplicated and restricted to window-reduced words
/// (24 distinct words).
std::vector<Word> a3_word_family(const Presentation& g4);

/// The 18-word basis family of the <s2,t> parabolic:
/// s2^a, s2^a t s2^b, s2^a t s2 t, s2^a t s2^-1 t for a,b in {-1,0,1}.
std::vector<Word> parabolic_word_family(const Presentation& parabolic);

/// Ariki-Koike spanning family t^m u^n s^eps with u = s t s,
/// 0 <= m,n < d, eps in {0,1}; 2d^2 words.
std::vector<Word> ariki_koike_family(const Presentation& gd12, int d);

struct CandidateFamily {
  std::vector<Word> b24;      // basis of the rank-2 parabolic subalgebra
  std::vector<Word> g54;      // module generators over that subalgebra
  std::vector<Word> words;    // the 1296 products b * g
  std::vector<Word> fallback; // extra words with the t^-1 letters expanded
  std::uint64_t selection_seed = 0;
};

/// Builds the 1296-word candidate spanning family of the rank-3 algebra:
/// b24 is selected greedily from the 30-word family by a rank test against
/// an internal rank-24 enumeration seeded from selection_seed; g54 stacks
/// the module generators tier by tier (9 + 24 + 18 + 3), with positive-t
/// surrogates standing in for the inverse-t words.
CandidateFamily build_candidate_1296(const Presentation& g26, const Presentation& g4,
                                     std::uint64_t selection_seed = 24);

/// certify_spanning on the primary list; on a rank deficit retries with the
/// fallback words appended and records which list succeeded.
SpanningCertificate certify_candidate(const CandidateFamily& family,
                                      const EnumerationResult& r);

}  // namespace genhecke

#endif  // GENHECKE_SPANNING_HPP
