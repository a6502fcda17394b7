#ifndef GENHECKE_REWRITE_HPP
#define GENHECKE_REWRITE_HPP

#include <string>
#include <vector>

#include "genhecke/element.hpp"
#include "genhecke/ring.hpp"
#include "genhecke/word.hpp"

namespace genhecke {

/// lhs -> rhs. Braid rules are word <-> word with unit coefficient and may
/// be applied in both directions; order rules map a power to a combination
/// and are reversible only when the rhs is a single term.
struct RewriteRule {
  std::string id;
  Word lhs;
  Element<LaurentPoly> rhs;
  bool is_braid = false;
};

struct TraceStep {
  int term = 0;          // canonical index into the stored element
  int pos = 0;           // position in the expanded word
  std::string rule;
  bool forward = true;
};

/// A rewriting trace: start/end elements plus the step list, together with
/// the ring, alphabet and rules it runs under.
struct RewriteTrace {
  int version = 1;
  std::string name;
  RingPtr ring;
  GeneratorSet gens;
  std::vector<RewriteRule> rules;
  Element<LaurentPoly> start;
  Element<LaurentPoly> end;
  std::vector<TraceStep> steps;

  const RewriteRule& rule(const std::string& id) const;
};

/// Applies one step; throws Error (with term/pos/rule diagnostics) when the
/// selected pattern does not match at the stated position.
Element<LaurentPoly> apply_step(const Element<LaurentPoly>& x, const RewriteTrace& ctx,
                                const TraceStep& step);

struct TraceCertificate {
  bool ok = false;
  std::string message;
  int failed_step = -1;  // -1: endpoint mismatch or success
  Element<LaurentPoly> final;
};

/// Replays every step and requires exact equality with the declared end.
TraceCertificate check_trace(const RewriteTrace& trace);

RewriteTrace parse_trace(const std::string& text);
RewriteTrace load_trace_file(const std::string& path);

}  // namespace genhecke

#endif  // GENHECKE_REWRITE_HPP
