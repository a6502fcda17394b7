#include "genhecke/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace genhecke {

GeneratorSet::GeneratorSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t k = i + 1; k < names_.size(); ++k)
      if (names_[i] == names_[k]) throw Error("duplicate generator " + names_[i]);
}

int GeneratorSet::index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  throw Error("unknown generator " + name);
}

bool GeneratorSet::has(const std::string& name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

Word Word::single(int gen, int exp) {
  Word w;
  w.push(gen, exp);
  return w;
}

Word& Word::push(int gen, int exp) {
  if (exp == 0) return *this;
  if (!letters_.empty() && letters_.back().gen == gen) {
    letters_.back().exp += exp;
    if (letters_.back().exp == 0) letters_.pop_back();
  } else {
    letters_.push_back({gen, exp});
  }
  return *this;
}

Word Word::operator*(const Word& o) const {
  Word r = *this;
  for (const Letter& l : o.letters_) r.push(l.gen, l.exp);
  return r;
}

Word Word::inverse() const {
  Word r;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    r.push(it->gen, -it->exp);
  return r;
}

Word Word::pow(int k) const {
  Word base = k < 0 ? inverse() : *this;
  int n = k < 0 ? -k : k;
  Word r;
  for (int i = 0; i < n; ++i) r = r * base;
  return r;
}

int Word::expanded_size() const {
  int n = 0;
  for (const Letter& l : letters_) n += l.exp < 0 ? -l.exp : l.exp;
  return n;
}

std::vector<Letter> Word::expanded() const {
  std::vector<Letter> units;
  units.reserve(expanded_size());
  for (const Letter& l : letters_) {
    int sign = l.exp < 0 ? -1 : 1;
    for (int i = 0; i < sign * l.exp; ++i) units.push_back({l.gen, sign});
  }
  return units;
}

Word Word::from_expanded(const std::vector<Letter>& units) {
  Word w;
  for (const Letter& u : units) w.push(u.gen, u.exp);
  return w;
}

int Word::max_gen() const {
  int m = -1;
  for (const Letter& l : letters_) m = std::max(m, l.gen);
  return m;
}

bool Word::operator<(const Word& o) const {
  int la = expanded_size(), lb = o.expanded_size();
  if (la != lb) return la < lb;
  return std::lexicographical_compare(
      letters_.begin(), letters_.end(), o.letters_.begin(), o.letters_.end(),
      [](const Letter& a, const Letter& b) {
        if (a.gen != b.gen) return a.gen < b.gen;
        return a.exp < b.exp;
      });
}

std::size_t Word::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const Letter& l : letters_) {
    h ^= static_cast<std::size_t>(l.gen) + 0x9e3779b9 + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(l.exp + 1024) + 0x9e3779b9 + (h << 6) + (h >> 2);
  }
  return h;
}

std::string Word::str(const GeneratorSet& gens) const {
  if (letters_.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out << " ";
    out << gens.name(letters_[i].gen);
    if (letters_[i].exp != 1) out << "^" << letters_[i].exp;
  }
  return out.str();
}

Word Word::parse(const GeneratorSet& gens, const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;  // identity letter
    std::string name = tok;
    int exp = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      name = tok.substr(0, caret);
      std::string e = tok.substr(caret + 1);
      try {
        exp = std::stoi(e);
      } catch (const std::exception&) {
        throw Error("bad exponent in word: " + tok);
      }
      if (exp == 0) throw Error("zero exponent in word: " + tok);
    }
    w.push(gens.index(name), exp);
  }
  return w;
}

}  // namespace genhecke
