#ifndef GENHECKE_PRESENTATION_HPP
#define GENHECKE_PRESENTATION_HPP

#include <string>
#include <utility>
#include <vector>

#include "genhecke/element.hpp"
#include "genhecke/ring.hpp"
#include "genhecke/word.hpp"

namespace genhecke {

/// A finitely presented algebra: braid relations (homogeneous word pairs)
/// plus one monic order relation per generator.
class Presentation {
 public:
  std::string name;
  RingPtr ring;
  GeneratorSet gens;
  std::vector<std::pair<Word, Word>> braid_relations;
  /// order_rules[g]: sigma^o = sum coeffs[i] sigma^i with LaurentPoly coeffs
  std::vector<OrderRule<LaurentPoly>> order_rules;
  /// set on the 0-Hecke-style entries whose order constant is not a unit;
  /// window reduction and enumeration refuse these
  bool non_unital_constant = false;

  int num_gens() const { return static_cast<int>(gens.size()); }

  void validate() const;  // throws on malformed relations

  WindowPolicy<LaurentPoly> window_policy() const;

  /// the specialization with every order relation sent to sigma^o = 1,
  /// e.g. {a:0,b:0,c:1,d:0,e:1} for the rank-3 entry
  Specialization group_specialization() const;

  std::string str() const;  // presentation file text
};

/// Parses the presentation file format (see data/presentations/).
Presentation parse_presentation(const std::string& text);
Presentation load_presentation_file(const std::string& path);

/// Catalogue lookup. Fixed entries (G4, G12, G26, G26-parabolic-s2t,
/// G12-nil, G12-idem, Gd12-nil, AB2-nil) load from data files under
/// data_dir/presentations; the parametric families Gd12(d) and G4-nil(m)
/// are synthesized. Throws on unknown names or d < 2.
Presentation catalogue(const std::string& name, const std::string& data_dir);

/// Directory resolution: explicit argument beats GENHECKE_DATA_DIR beats
/// ./data.
std::string default_data_dir();

}  // namespace genhecke

#endif  // GENHECKE_PRESENTATION_HPP
