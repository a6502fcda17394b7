#include "genhecke/spanning.hpp"

#include <algorithm>
#include <set>

namespace genhecke {

namespace {

Word word_of(std::initializer_list<Letter> letters) {
  Word w;
  for (const Letter& l : letters) w.push(l.gen, l.exp);
  return w;
}

/// flips the sign of every s-letter, keeps t positive: the surrogate of the
/// image under the inversion automorphism modulo lower filtration pieces
Word flip_s(const Word& w, int t_gen) {
  Word out;
  for (const Letter& l : w.letters()) out.push(l.gen, l.gen == t_gen ? l.exp : -l.exp);
  return out;
}

void append_unique(std::vector<Word>& list, const Word& w) {
  if (std::find(list.begin(), list.end(), w) == list.end()) list.push_back(w);
}

}  // namespace

std::vector<Word> a3_word_family(const Presentation& g4) {
  int s1 = g4.gens.index("s1"), s2 = g4.gens.index("s2");
  std::set<Word> seen;
  std::vector<Word> family;
  auto add = [&](const Word& w) {
    // keep window-reduced words only (drops s1^{+-2} from the b=0 slice)
    for (const Letter& l : w.letters())
      if (l.exp < -1 || l.exp > 1) return;
    if (seen.insert(w).second) family.push_back(w);
  };
  for (int a : {-1, 0, 1})
    for (int b : {-1, 0, 1})
      for (int c : {-1, 0, 1})
        add(word_of({{s1, a}, {s2, b}, {s1, c}}));
  for (int a : {-1, 0, 1}) add(word_of({{s1, a}, {s2, 1}, {s1, -1}, {s2, 1}}));
  std::sort(family.begin(), family.end());
  return family;
}

std::vector<Word> parabolic_word_family(const Presentation& parabolic) {
  int s2 = parabolic.gens.index("s2"), t = parabolic.gens.index("t");
  std::vector<Word> family;
  for (int a : {-1, 0, 1}) family.push_back(word_of({{s2, a}}));
  for (int a : {-1, 0, 1})
    for (int b : {-1, 0, 1}) family.push_back(word_of({{s2, a}, {t, 1}, {s2, b}}));
  for (int a : {-1, 0, 1}) family.push_back(word_of({{s2, a}, {t, 1}, {s2, 1}, {t, 1}}));
  for (int a : {-1, 0, 1}) family.push_back(word_of({{s2, a}, {t, 1}, {s2, -1}, {t, 1}}));
  return family;
}

std::vector<Word> ariki_koike_family(const Presentation& gd12, int d) {
  int t = gd12.gens.index("t"), s = gd12.gens.index("s");
  Word u = word_of({{s, 1}, {t, 1}, {s, 1}});
  std::vector<Word> family;
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n)
      for (int eps : {0, 1}) {
        Word w = Word::single(t, 1).pow(m) * u.pow(n);
        if (eps) w = w * Word::single(s, 1);
        family.push_back(w);
      }
  return family;
}

CandidateFamily build_candidate_1296(const Presentation& g26, const Presentation& g4,
                                     std::uint64_t selection_seed) {
  CandidateFamily fam;
  fam.selection_seed = selection_seed;
  int s1 = g26.gens.index("s1"), s2 = g26.gens.index("s2"), t = g26.gens.index("t");

  // --- b24: greedy rank selection from the 30-word family ---
  EnumerationResult probe = enumerate_random(g4, selection_seed);
  if (probe.dimension != 24)
    throw Error("internal rank-24 probe enumerated to dimension " +
                std::to_string(probe.dimension));
  std::vector<Word> pool = a3_word_family(g4);
  std::vector<SparseVec> echelon;
  std::vector<int> pivots;
  for (const Word& w : pool) {
    SparseVec v = word_coordinates(probe, w);
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      const Rational* c = v.find(pivots[e]);
      if (c) v = vec_axpy(v, -*c, echelon[e]);
    }
    if (v.empty()) continue;
    v.scale(1 / v.entries.front().second);
    pivots.push_back(v.entries.front().first);
    echelon.push_back(std::move(v));
    // the pool lives in the s1/s2 alphabet shared with the rank-3 entry
    fam.b24.push_back(w);
    if (fam.b24.size() == 24) break;
  }
  if (fam.b24.size() != 24)
    throw Error("greedy selection found only " + std::to_string(fam.b24.size()) +
                " independent words in the 30-word family");

  // --- module generator lists over the parabolic subalgebra ---
  // m8: left u1-module generators of the subalgebra, m8p: the s1<->s2 swap
  std::vector<Word> m8 = {Word(),
                          word_of({{s2, 1}}),
                          word_of({{s2, 1}, {s1, 1}}),
                          word_of({{s2, 1}, {s1, -1}}),
                          word_of({{s2, -1}}),
                          word_of({{s2, -1}, {s1, 1}}),
                          word_of({{s2, -1}, {s1, -1}}),
                          word_of({{s2, 1}, {s1, -1}, {s2, 1}})};
  std::vector<Word> m8p;
  for (const Word& w : m8) {
    Word swapped;
    for (const Letter& l : w.letters())
      swapped.push(l.gen == s1 ? s2 : s1, l.exp);
    m8p.push_back(swapped);
  }

  std::vector<Word>& g54 = fam.g54;
  // tier 1 (9): 1 and t m for m in m8
  g54.push_back(Word());
  for (const Word& m : m8) append_unique(g54, Word::single(t, 1) * m);
  // tier 2 (24): t s2 t m', t s2^-1 t m', t s2 s1^-1 s2 t m
  Word ts2t = word_of({{t, 1}, {s2, 1}, {t, 1}});
  Word ts2it = word_of({{t, 1}, {s2, -1}, {t, 1}});
  Word tzt = word_of({{t, 1}, {s2, 1}, {s1, -1}, {s2, 1}, {t, 1}});
  for (const Word& m : m8p) append_unique(g54, ts2t * m);
  for (const Word& m : m8p) append_unique(g54, ts2it * m);
  for (const Word& m : m8) append_unique(g54, tzt * m);
  // tier 3 (18): the nine braid-group elements and their flipped surrogates
  Word head_plus = word_of({{t, 1}, {s2, 1}, {s1, 1}, {t, 1}, {s2, 1}, {t, 1}});
  Word head_minus = word_of({{t, 1}, {s2, 1}, {s1, 1}, {t, 1}, {s2, -1}, {t, 1}});
  std::vector<Word> nine;
  nine.push_back(head_plus);
  for (int b : {-1, 1})
    for (int a : {-1, 0, 1}) nine.push_back(head_minus * word_of({{s1, b}, {s2, a}}));
  nine.push_back(head_minus * word_of({{s1, 1}, {s2, -1}, {s1, 1}}));
  nine.push_back(head_minus);
  for (const Word& w : nine) append_unique(g54, w);
  for (const Word& w : nine) append_unique(g54, flip_s(w, t));
  // tier 4 (3): C^2, C^3 and the positive surrogate of C^-2
  Word c = word_of({{t, 1}, {s2, 1}, {s1, 1}});
  Word c_flip = word_of({{t, 1}, {s2, -1}, {s1, -1}});
  append_unique(g54, c.pow(6));
  append_unique(g54, c.pow(9));
  append_unique(g54, c_flip.pow(6));

  if (g54.size() != 54)
    throw Error("module generator list has " + std::to_string(g54.size()) + " words");

  std::set<Word> distinct;
  for (const Word& b : fam.b24)
    for (const Word& g : g54) {
      Word w = b * g;
      if (!distinct.insert(w).second) throw Error("candidate words collide");
      fam.words.push_back(w);
    }

  // fallback: the exact inverse-t words, window-expanded into all
  // positive-t sign choices
  std::vector<Word> exact;
  Word tis2ti = word_of({{t, -1}, {s2, -1}, {t, -1}});
  for (const Word& m : m8p) exact.push_back(tis2ti * m);
  for (const Word& w : nine) {
    Word phi;
    for (const Letter& l : w.letters()) phi.push(l.gen, -l.exp);
    exact.push_back(phi);
  }
  exact.push_back(word_of({{t, -1}, {s2, -1}, {s1, -1}}).pow(6));
  std::set<Word> fb_seen;
  for (const Word& w : exact) {
    // every t^-1 contributes t or 1
    std::vector<Word> variants{Word()};
    for (const Letter& l : w.letters()) {
      if (l.gen == t && l.exp < 0) {
        if (l.exp != -1) throw Error("fallback expects unit t^-1 letters");
        std::vector<Word> next;
        for (const Word& v : variants) {
          next.push_back(v * Word::single(t, 1));
          next.push_back(v);
        }
        variants = std::move(next);
      } else {
        for (Word& v : variants) v = v * Word::single(l.gen, l.exp);
      }
    }
    for (const Word& v : variants)
      if (fb_seen.insert(v).second) fam.fallback.push_back(v);
  }
  return fam;
}

SpanningCertificate certify_candidate(const CandidateFamily& family,
                                      const EnumerationResult& r) {
  SpanningCertificate primary = certify_spanning(family.words, r);
  primary.list_used = "primary";
  if (primary.ok) return primary;

  std::vector<Word> extended = family.words;
  for (const Word& b : family.b24)
    for (const Word& g : family.fallback) extended.push_back(b * g);
  SpanningCertificate fb = certify_spanning(extended, r);
  fb.list_used = "fallback";
  fb.message += " (primary list rank " + std::to_string(primary.rank) + ")";
  return fb;
}

}  // namespace genhecke
