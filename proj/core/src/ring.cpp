#include "genhecke/ring.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>

namespace genhecke {

RingSpec::RingSpec(std::vector<std::string> variables,
                   std::vector<std::string> invertible)
    : vars_(std::move(variables)), invertible_(vars_.size(), false) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (std::size_t j = i + 1; j < vars_.size(); ++j) {
      if (vars_[i] == vars_[j]) throw Error("duplicate ring variable " + vars_[i]);
    }
  }
  for (const auto& name : invertible) invertible_[index(name)] = true;
}

std::size_t RingSpec::index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  throw Error("unknown ring variable " + name);
}

bool RingSpec::has(const std::string& name) const {
  return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

RingPtr make_ring(std::vector<std::string> variables,
                  std::vector<std::string> invertible) {
  return std::make_shared<const RingSpec>(std::move(variables), std::move(invertible));
}

RingPtr trivial_ring() {
  static RingPtr ring = std::make_shared<const RingSpec>(
      std::vector<std::string>{}, std::vector<std::string>{});
  return ring;
}

namespace detail {
bool GradedLex::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  long da = 0, db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da < db;
  return a < b;
}
}  // namespace detail

static void require_same_ring(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.ring() != q.ring() && !(*p.ring() == *q.ring()))
    throw Error("ring mismatch");
}

LaurentPoly LaurentPoly::constant(RingPtr ring, Int value) {
  LaurentPoly p(std::move(ring));
  p.add_term(std::vector<int>(p.ring_->size(), 0), std::move(value));
  return p;
}

LaurentPoly LaurentPoly::variable(RingPtr ring, const std::string& name, int exponent) {
  std::size_t i = ring->index(name);
  LaurentPoly p(ring);
  std::vector<int> exps(ring->size(), 0);
  exps[i] = exponent;
  p.add_term(std::move(exps), 1);
  return p;
}

LaurentPoly LaurentPoly::monomial(RingPtr ring, Int coeff, std::vector<int> exps) {
  LaurentPoly p(std::move(ring));
  p.add_term(std::move(exps), std::move(coeff));
  return p;
}

bool LaurentPoly::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [exps, c] = *terms_.begin();
  if (c != 1) return false;
  return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& exps = terms_.begin()->first;
  return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

Int LaurentPoly::constant_term() const {
  auto it = terms_.find(std::vector<int>(ring_->size(), 0));
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::check_exponents(const std::vector<int>& exps) const {
  assert(exps.size() == ring_->size());
  for (std::size_t i = 0; i < exps.size(); ++i)
    assert(exps[i] >= 0 || ring_->invertible(i));
}

void LaurentPoly::add_term(std::vector<int> exps, Int coeff) {
  if (coeff == 0) return;
  check_exponents(exps);
  auto [it, inserted] = terms_.emplace(std::move(exps), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  require_same_ring(*this, o);
  for (const auto& [exps, c] : o.terms_) add_term(exps, c);
  return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  require_same_ring(*this, o);
  for (const auto& [exps, c] : o.terms_) add_term(exps, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(ring_);
  for (const auto& [exps, c] : terms_) r.terms_.emplace(exps, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  require_same_ring(*this, o);
  LaurentPoly r(ring_);
  std::vector<int> exps(ring_->size());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = ea[i] + eb[i];
      r.add_term(exps, ca * cb);
    }
  }
  return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  return (ring_ == o.ring_ || *ring_ == *o.ring_) && terms_ == o.terms_;
}

LaurentPoly LaurentPoly::unit_inverse() const {
  if (terms_.size() != 1) throw Error("not a unit: " + str());
  const auto& [exps, c] = *terms_.begin();
  if (c != 1 && c != -1) throw Error("not a unit: " + str());
  std::vector<int> inv(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] != 0 && !ring_->invertible(i))
      throw Error("not a unit: " + str());
    inv[i] = -exps[i];
  }
  return monomial(ring_, c, std::move(inv));
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // highest graded-lex term first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [exps, c] = *it;
    Int mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool monomial_empty =
        std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
    bool printed = false;
    if (mag != 1 || monomial_empty) {
      out << mag.get_str();
      printed = true;
    }
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (printed) out << "*";
      out << ring_->name(i);
      if (exps[i] != 1) out << "^" << exps[i];
      printed = true;
    }
  }
  return out.str();
}

namespace {

struct PolyLexer {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  std::string integer() {
    skip_ws();
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i || (i - start == 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      throw Error("expected integer in polynomial at offset " + std::to_string(start));
    return s.substr(start, i - start);
  }
  std::string identifier() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
      ++i;
    if (start == i) throw Error("expected variable name in polynomial");
    return s.substr(start, i - start);
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(RingPtr ring, const std::string& text) {
  LaurentPoly result(ring);
  PolyLexer lex{text};
  bool negative = false;
  if (lex.accept('-')) negative = true;
  while (true) {
    Int coeff = negative ? -1 : 1;
    std::vector<int> exps(ring->size(), 0);
    bool saw_factor = false;
    char c = lex.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coeff *= Int(lex.integer());
      saw_factor = true;
    }
    while (true) {
      if (saw_factor && !lex.accept('*')) {
        // variables may also follow without '*' only after the leading sign
        char n = lex.peek();
        if (!std::isalpha(static_cast<unsigned char>(n)) || saw_factor) break;
      }
      char n = lex.peek();
      if (!std::isalpha(static_cast<unsigned char>(n))) {
        if (saw_factor) throw Error("dangling '*' in polynomial: " + text);
        break;
      }
      std::string name = lex.identifier();
      int e = 1;
      if (lex.accept('^')) e = std::stoi(lex.integer());
      exps[ring->index(name)] += e;
      saw_factor = true;
    }
    if (!saw_factor) throw Error("empty term in polynomial: " + text);
    result.add_term(std::move(exps), std::move(coeff));
    if (lex.done()) break;
    if (lex.accept('+'))
      negative = false;
    else if (lex.accept('-'))
      negative = true;
    else
      throw Error("expected '+' or '-' in polynomial: " + text);
  }
  return result;
}

Specialization::Specialization(RingPtr ring, std::vector<Rational> values)
    : ring_(std::move(ring)), values_(std::move(values)) {
  if (values_.size() != ring_->size())
    throw Error("specialization must cover every ring variable");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    values_[i].canonicalize();
    if (ring_->invertible(i) && values_[i] == 0)
      throw Error("invertible variable " + ring_->name(i) + " specialized to 0");
  }
}

Specialization Specialization::from_map(RingPtr ring,
                                        const std::map<std::string, Rational>& values) {
  std::vector<Rational> v(ring->size());
  for (std::size_t i = 0; i < ring->size(); ++i) {
    auto it = values.find(ring->name(i));
    if (it == values.end())
      throw Error("specialization missing variable " + ring->name(i));
    v[i] = it->second;
  }
  if (values.size() != ring->size())
    throw Error("specialization names a variable outside the ring");
  return Specialization(std::move(ring), std::move(v));
}

Rational Specialization::operator()(const LaurentPoly& p) const {
  if (p.ring() != ring_ && !(*p.ring() == *ring_))
    throw Error("ring mismatch in specialization");
  Rational total = 0;
  for (const auto& [exps, c] : p.terms()) {
    Rational term(c);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      int e = exps[i];
      if (e == 0) continue;
      Rational base = values_[i];
      if (e < 0) {
        base = 1 / base;
        e = -e;
      }
      for (int k = 0; k < e; ++k) term *= base;
    }
    total += term;
  }
  return total;
}

std::string Specialization::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    if (i) out << ",";
    out << ring_->name(i) << "=" << rational_str(values_[i]);
  }
  return out.str();
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int SplitMix64::small_positive() { return 1 + static_cast<int>(next() % 100); }

Specialization random_specialization(RingPtr ring, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Rational> values;
  values.reserve(ring->size());
  for (std::size_t i = 0; i < ring->size(); ++i) {
    int num = rng.small_positive();
    int den = rng.small_positive();
    Rational q(num, den);
    q.canonicalize();
    values.push_back(q);
  }
  return Specialization(std::move(ring), std::move(values));
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw Error("empty rational");
  try {
    Rational q(text);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error("bad rational: " + text);
  }
}

std::string rational_str(const Rational& q) { return q.get_str(); }

}  // namespace genhecke
