#ifndef GENHECKE_ELEMENT_HPP
#define GENHECKE_ELEMENT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "genhecke/ring.hpp"
#include "genhecke/word.hpp"

namespace genhecke {

inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const LaurentPoly& c) { return c.is_zero(); }
inline Rational coeff_inverse(const Rational& c) {
  if (c == 0) throw Error("inversion of zero");
  return 1 / c;
}
inline LaurentPoly coeff_inverse(const LaurentPoly& c) { return c.unit_inverse(); }

/// Finite linear combination of Words; no zero coefficients stored, terms
/// kept in the canonical word order.
template <class C>
class Element {
 public:
  using TermMap = std::map<Word, C>;

  Element() = default;
  explicit Element(const Word& w, C coeff) { add(w, std::move(coeff)); }

  static Element zero() { return Element(); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Word& w, C coeff) {
    if (coeff_is_zero(coeff)) return;
    auto [it, inserted] = terms_.emplace(w, coeff);
    if (!inserted) {
      it->second += coeff;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  /// term by canonical index
  const std::pair<const Word, C>& term(std::size_t i) const {
    if (i >= terms_.size()) throw Error("term index out of range");
    auto it = terms_.begin();
    std::advance(it, i);
    return *it;
  }

  Element operator+(const Element& o) const {
    Element r = *this;
    for (const auto& [w, c] : o.terms_) r.add(w, c);
    return r;
  }
  Element operator-(const Element& o) const {
    Element r = *this;
    for (const auto& [w, c] : o.terms_) r.add(w, -c);
    return r;
  }
  Element& operator+=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }

  /// bilinear extension of word concatenation; no window reduction
  Element operator*(const Element& o) const {
    Element r;
    for (const auto& [wa, ca] : terms_)
      for (const auto& [wb, cb] : o.terms_) r.add(wa * wb, ca * cb);
    return r;
  }

  Element scaled(const C& k) const {
    Element r;
    if (coeff_is_zero(k)) return r;
    for (const auto& [w, c] : terms_) r.add(w, c * k);
    return r;
  }

  bool operator==(const Element& o) const { return terms_ == o.terms_; }
  bool operator!=(const Element& o) const { return !(*this == o); }

 private:
  TermMap terms_;
};

/// One generator's order relation sigma^order = sum coeffs[i]*sigma^i,
/// driving the canonical exponent window:
///   order 2 -> {1};   order o >= 3 -> {-1, 1, ..., o-2}
template <class C>
struct OrderRule {
  int order = 0;
  std::vector<C> coeffs;  // size == order, index i is the sigma^i coefficient
};

/// Rewrites out-of-window generator powers using the order relations.
template <class C>
class WindowPolicy {
 public:
  WindowPolicy() = default;

  void set_rule(int gen, OrderRule<C> rule) {
    if (rule.order < 2 || rule.coeffs.size() != static_cast<std::size_t>(rule.order))
      throw Error("malformed order rule");
    if (gen >= static_cast<int>(rules_.size())) rules_.resize(gen + 1);
    rules_[gen] = std::move(rule);
  }

  bool covers(int gen) const {
    return gen >= 0 && gen < static_cast<int>(rules_.size()) && rules_[gen].has_value();
  }
  const OrderRule<C>& rule(int gen) const {
    if (!covers(gen)) throw Error("window policy does not cover generator");
    return *rules_[gen];
  }

  int window_lo(int gen) const { return rule(gen).order == 2 ? 1 : -1; }
  int window_hi(int gen) const { return rule(gen).order - 2 + (rule(gen).order == 2); }
  bool in_window(int gen, int exp) const {
    return exp != 0 && exp >= window_lo(gen) && exp <= window_hi(gen);
  }

 private:
  std::vector<std::optional<OrderRule<C>>> rules_;
};

namespace detail {

/// one rewrite of the leftmost out-of-window letter; empty optional when the
/// word is already reduced
template <class C>
std::optional<Element<C>> window_step(const Word& w, const WindowPolicy<C>& policy) {
  const auto& letters = w.letters();
  for (std::size_t pos = 0; pos < letters.size(); ++pos) {
    int g = letters[pos].gen;
    int k = letters[pos].exp;
    if (!policy.covers(g)) throw Error("window policy does not cover a generator of the word");
    if (policy.in_window(g, k)) continue;

    Word prefix, suffix;
    for (std::size_t i = 0; i < pos; ++i) prefix.push(letters[i].gen, letters[i].exp);
    for (std::size_t i = pos + 1; i < letters.size(); ++i)
      suffix.push(letters[i].gen, letters[i].exp);

    const OrderRule<C>& rule = policy.rule(g);
    int o = rule.order;
    Element<C> out;
    if (k > policy.window_hi(g)) {
      // sigma^k = sigma^(k-o) * (sum_i c_i sigma^i)
      for (int i = 0; i < o; ++i) {
        Word mid = Word::single(g, k - o + i);
        out.add(prefix * mid * suffix, rule.coeffs[i]);
      }
    } else {
      // sigma^k = c0^-1 sigma^(k+o) - sum_{i>=1} c0^-1 c_i sigma^(k+i)
      C inv0 = coeff_inverse(rule.coeffs[0]);
      out.add(prefix * Word::single(g, k + o) * suffix, inv0);
      for (int i = 1; i < o; ++i) {
        Word mid = Word::single(g, k + i);
        out.add(prefix * mid * suffix, -(inv0 * rule.coeffs[i]));
      }
    }
    return out;
  }
  return std::nullopt;
}

}  // namespace detail

/// Normal form of a single word under the policy windows. Terminates because
/// every rewrite strictly shrinks the expanded length of each produced word.
template <class C>
Element<C> window_reduce(const Word& w, const C& coeff, const WindowPolicy<C>& policy) {
  Element<C> done;
  Element<C> todo(w, coeff);
  while (!todo.is_zero()) {
    Element<C> next;
    for (const auto& [word, c] : todo.terms()) {
      auto step = detail::window_step(word, policy);
      if (!step) {
        done.add(word, c);
      } else {
        next += step->scaled(c);
      }
    }
    todo = std::move(next);
  }
  return done;
}

template <class C>
Element<C> window_reduce(const Element<C>& x, const WindowPolicy<C>& policy) {
  Element<C> out;
  for (const auto& [w, c] : x.terms()) out += window_reduce(w, c, policy);
  return out;
}

/// Applies a specialization to every coefficient of a Laurent element.
Element<Rational> specialize(const Element<LaurentPoly>& x, const Specialization& s);

/// Specialized copy of a Laurent window policy.
WindowPolicy<Rational> specialize(const WindowPolicy<LaurentPoly>& policy,
                                  const Specialization& s, int num_gens);

/// Textual form of a Laurent-coefficient element, e.g. "(c^9) + (2) s1 s2^-1".
std::string element_str(const Element<LaurentPoly>& x, const GeneratorSet& gens);
Element<LaurentPoly> element_parse(RingPtr ring, const GeneratorSet& gens,
                                   const std::string& text);

}  // namespace genhecke

#endif  // GENHECKE_ELEMENT_HPP
