#include "genhecke/presentation.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace genhecke {

void Presentation::validate() const {
  if (order_rules.size() != gens.size())
    throw Error(name + ": every generator needs an order relation");
  for (const auto& [lhs, rhs] : braid_relations) {
    if (lhs.expanded_size() != rhs.expanded_size())
      throw Error(name + ": braid relation sides differ in length");
    for (const auto& side : {lhs, rhs})
      for (const Letter& l : side.letters())
        if (l.exp < 0) throw Error(name + ": braid relations must be positive words");
  }
  for (int g = 0; g < num_gens(); ++g) {
    const auto& rule = order_rules[g];
    if (rule.order < 2) throw Error(name + ": order relation must have degree >= 2");
    if (!non_unital_constant) {
      // the window rewrites need an invertible constant term
      rule.coeffs[0].unit_inverse();
    }
  }
}

WindowPolicy<LaurentPoly> Presentation::window_policy() const {
  if (non_unital_constant)
    throw Error(name + ": window reduction is disabled for non-unital entries");
  WindowPolicy<LaurentPoly> policy;
  for (int g = 0; g < num_gens(); ++g) policy.set_rule(g, order_rules[g]);
  return policy;
}

Specialization Presentation::group_specialization() const {
  if (non_unital_constant)
    throw Error(name + ": no group specialization for non-unital entries");
  std::vector<Rational> values(ring->size(), Rational(0));
  for (const auto& rule : order_rules) {
    const LaurentPoly& c0 = rule.coeffs[0];
    // the constant coefficient must be a single ring variable
    if (c0.terms().size() != 1) throw Error(name + ": non-variable order constant");
    const auto& [exps, coeff] = *c0.terms().begin();
    if (coeff != 1) throw Error(name + ": non-variable order constant");
    int which = -1;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (exps[i] != 1 || which != -1) throw Error(name + ": non-variable order constant");
      which = static_cast<int>(i);
    }
    if (which == -1) throw Error(name + ": non-variable order constant");
    values[which] = 1;
  }
  return Specialization(ring, std::move(values));
}

std::string Presentation::str() const {
  std::ostringstream out;
  out << "name " << name << "\n";
  if (non_unital_constant) out << "flags non_unital_constant\n";
  if (ring->size() > 0) {
    out << "ring";
    for (const auto& v : ring->variables()) out << " " << v;
    bool any_inv = false;
    for (std::size_t i = 0; i < ring->size(); ++i) any_inv |= ring->invertible(i);
    if (any_inv) {
      out << " ; invertible";
      for (std::size_t i = 0; i < ring->size(); ++i)
        if (ring->invertible(i)) out << " " << ring->name(i);
    }
    out << "\n";
  }
  out << "generators";
  for (const auto& g : gens.names()) out << " " << g;
  out << "\n";
  for (const auto& [lhs, rhs] : braid_relations)
    out << "braid " << lhs.str(gens) << " = " << rhs.str(gens) << "\n";
  for (int g = 0; g < num_gens(); ++g) {
    out << "order " << gens.name(g) << " :";
    for (std::size_t i = 0; i < order_rules[g].coeffs.size(); ++i)
      out << (i ? ", " : " ") << order_rules[g].coeffs[i].str();
    out << "\n";
  }
  return out.str();
}

namespace {

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(strip(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(strip(cur));
  return out;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Presentation p;
  std::vector<std::string> ring_vars, ring_inv;
  std::vector<std::tuple<std::string, std::string>> braid_lines;
  std::vector<std::tuple<std::string, std::string>> order_lines;

  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    std::string rest = strip(line.substr(key.size()));
    if (key == "name") {
      p.name = rest;
    } else if (key == "flags") {
      for (const auto& f : split_ws(rest)) {
        if (f == "non_unital_constant") p.non_unital_constant = true;
        else throw Error("unknown presentation flag " + f);
      }
    } else if (key == "ring") {
      auto parts = split_on(rest, ';');
      ring_vars = split_ws(parts[0]);
      if (parts.size() > 1) {
        auto inv = split_ws(parts[1]);
        if (inv.empty() || inv[0] != "invertible")
          throw Error("ring line expects '; invertible ...'");
        ring_inv.assign(inv.begin() + 1, inv.end());
      }
    } else if (key == "generators") {
      p.gens = GeneratorSet(split_ws(rest));
    } else if (key == "braid") {
      auto sides = split_on(rest, '=');
      if (sides.size() != 2) throw Error("braid line expects lhs = rhs");
      braid_lines.emplace_back(sides[0], sides[1]);
    } else if (key == "order") {
      auto parts = split_on(rest, ':');
      if (parts.size() != 2) throw Error("order line expects 'gen : c0, c1, ...'");
      order_lines.emplace_back(parts[0], parts[1]);
    } else {
      throw Error("unknown presentation keyword " + key);
    }
  }

  if (p.name.empty()) throw Error("presentation missing name");
  if (p.gens.size() == 0) throw Error("presentation missing generators");
  p.ring = make_ring(ring_vars, ring_inv);
  for (const auto& [l, r] : braid_lines)
    p.braid_relations.emplace_back(Word::parse(p.gens, l), Word::parse(p.gens, r));
  p.order_rules.resize(p.gens.size());
  for (const auto& [gname, coeffs] : order_lines) {
    int g = p.gens.index(gname);
    OrderRule<LaurentPoly> rule;
    for (const auto& c : split_on(coeffs, ','))
      rule.coeffs.push_back(LaurentPoly::parse(p.ring, c));
    rule.order = static_cast<int>(rule.coeffs.size());
    p.order_rules[g] = std::move(rule);
  }
  p.validate();
  return p;
}

Presentation load_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open presentation file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

namespace {

Presentation make_gd12(int d) {
  if (d < 2) throw Error("Gd12 requires d >= 2");
  std::ostringstream text;
  text << "name Gd12(" << d << ")\n";
  text << "ring";
  for (int i = 0; i < d; ++i) text << " a" << i;
  text << " alpha beta ; invertible a0 beta\n";
  text << "generators t s\n";
  text << "braid s t s t = t s t s\n";
  text << "order t :";
  for (int i = 0; i < d; ++i) text << (i ? ", a" : " a") << i;
  text << "\n";
  text << "order s : beta, alpha\n";
  return parse_presentation(text.str());
}

Presentation make_g4_nil(long m) {
  std::ostringstream text;
  text << "name G4-nil(" << m << ")\n";
  if (m != 1 && m != -1) text << "flags non_unital_constant\n";
  text << "generators s1 s2\n";
  text << "braid s1 s2 s1 = s2 s1 s2\n";
  text << "order s1 : " << m << ", 0, 0\n";
  text << "order s2 : " << m << ", 0, 0\n";
  return parse_presentation(text.str());
}

// "Name(arg)" -> arg, or nullopt
std::optional<long> paren_arg(const std::string& name, const std::string& prefix) {
  if (name.size() <= prefix.size() + 2) return std::nullopt;
  if (name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
  if (name[prefix.size()] != '(' || name.back() != ')') return std::nullopt;
  std::string inner = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
  try {
    return std::stol(inner);
  } catch (const std::exception&) {
    throw Error("bad parameter in catalogue name " + name);
  }
}

}  // namespace

std::string default_data_dir() {
  if (const char* env = std::getenv("GENHECKE_DATA_DIR")) return env;
  return "data";
}

Presentation catalogue(const std::string& name, const std::string& data_dir) {
  if (auto d = paren_arg(name, "Gd12")) return make_gd12(static_cast<int>(*d));
  if (auto m = paren_arg(name, "G4-nil")) return make_g4_nil(*m);
  if (name == "G4-nil") return make_g4_nil(0);

  // everything else is file-backed, so new entries need no recompilation
  std::filesystem::path path =
      std::filesystem::path(data_dir) / "presentations" / (name + ".pres");
  if (!std::filesystem::exists(path)) throw Error("unknown catalogue name " + name);
  Presentation p = load_presentation_file(path.string());
  if (p.name != name)
    throw Error("presentation file " + path.string() + " declares name " + p.name);
  return p;
}

}  // namespace genhecke
