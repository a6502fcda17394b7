#include "genhecke/element.hpp"

#include <sstream>

namespace genhecke {

Element<Rational> specialize(const Element<LaurentPoly>& x, const Specialization& s) {
  Element<Rational> out;
  for (const auto& [w, c] : x.terms()) out.add(w, s(c));
  return out;
}

WindowPolicy<Rational> specialize(const WindowPolicy<LaurentPoly>& policy,
                                  const Specialization& s, int num_gens) {
  WindowPolicy<Rational> out;
  for (int g = 0; g < num_gens; ++g) {
    if (!policy.covers(g)) continue;
    const auto& rule = policy.rule(g);
    OrderRule<Rational> r;
    r.order = rule.order;
    r.coeffs.reserve(rule.coeffs.size());
    for (const auto& c : rule.coeffs) r.coeffs.push_back(s(c));
    out.set_rule(g, std::move(r));
  }
  return out;
}

std::string element_str(const Element<LaurentPoly>& x, const GeneratorSet& gens) {
  if (x.is_zero()) return "(0)";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.str() << ")";
    if (!w.empty()) out << " " << w.str(gens);
  }
  return out.str();
}

Element<LaurentPoly> element_parse(RingPtr ring, const GeneratorSet& gens,
                                   const std::string& text) {
  Element<LaurentPoly> out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    LaurentPoly coeff = LaurentPoly::constant(ring, 1);
    if (text[i] == '(') {
      std::size_t close = text.find(')', i);
      if (close == std::string::npos) throw Error("unbalanced '(' in element: " + text);
      std::string inner = text.substr(i + 1, close - i - 1);
      coeff = inner.find_first_not_of(" \t") == std::string::npos ||
                      inner.substr(inner.find_first_not_of(" \t")) == "0"
                  ? LaurentPoly(ring)
                  : LaurentPoly::parse(ring, inner);
      i = close + 1;
    }
    // the word runs to the next '+' at top level
    std::size_t plus = text.find('+', i);
    std::string word_text =
        plus == std::string::npos ? text.substr(i) : text.substr(i, plus - i);
    out.add(Word::parse(gens, word_text), coeff);
    if (plus == std::string::npos) break;
    i = plus + 1;
  }
  return out;
}

// explicit instantiations of the two coefficient contexts in use
template class Element<Rational>;
template class Element<LaurentPoly>;
template class WindowPolicy<Rational>;
template class WindowPolicy<LaurentPoly>;

}  // namespace genhecke
