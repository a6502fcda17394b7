#include "genhecke/witness.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "genhecke/rewrite.hpp"

namespace genhecke {

int WitnessModule::family_index(const std::string& f) const {
  for (std::size_t i = 0; i < families.size(); ++i)
    if (families[i] == f) return static_cast<int>(i);
  throw Error(name + ": unknown family " + f);
}

FormalVector WitnessModule::act(int gen, const FormalVector& v) const {
  if (gen < 0 || gen >= static_cast<int>(gens.size()))
    throw Error(name + ": unknown generator id");
  FormalVector out;
  for (const auto& [sym, coeff] : v) {
    const auto& [family, index] = sym;
    for (const ActionTerm& t : action[gen][family]) {
      long target = index + t.offset;
      if (target < 1) throw Error(name + ": action rule leaves the index range");
      auto key = std::make_pair(t.family, target);
      Int& slot = out[key];
      slot += coeff * t.coeff;
      if (slot == 0) out.erase(key);
    }
  }
  return out;
}

FormalVector WitnessModule::act_word(const Word& w, const FormalVector& v) const {
  FormalVector cur = v;
  const auto& letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    if (it->exp < 0) throw Error(name + ": witness actions have no inverses");
    for (int k = 0; k < it->exp; ++k) cur = act(it->gen, cur);
  }
  return cur;
}

namespace {

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

WitnessModule::ActionTerm parse_action_term(const WitnessModule& m, std::string text) {
  WitnessModule::ActionTerm term{0, 0, 1};
  text = strip(text);
  if (!text.empty() && text[0] == '-') {
    term.coeff = -1;
    text = strip(text.substr(1));
  }
  auto star = text.find('*');
  if (star != std::string::npos) {
    term.coeff *= Int(strip(text.substr(0, star)));
    text = strip(text.substr(star + 1));
  }
  auto bracket = text.find('[');
  if (bracket == std::string::npos || text.back() != ']')
    throw Error("action term expects family[r+k]: " + text);
  term.family = m.family_index(strip(text.substr(0, bracket)));
  std::string idx = strip(text.substr(bracket + 1, text.size() - bracket - 2));
  if (idx == "r") term.offset = 0;
  else if (idx.size() > 1 && idx[0] == 'r')
    term.offset = std::stoi(idx.substr(1));
  else
    throw Error("action index expects r, r+k or r-k: " + idx);
  return term;
}

}  // namespace

WitnessModule parse_witness(const std::string& text) {
  WitnessModule m;
  std::vector<std::tuple<std::string, std::string, std::string>> action_lines;
  std::string growth_word_text, growth_start_text;

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
    if (key == "name") m.name = rest;
    else if (key == "presentation") m.presentation_name = rest;
    else if (key == "generators") {
      std::vector<std::string> names;
      std::string n;
      while (ls >> n) names.push_back(n);
      m.gens = GeneratorSet(names);
    } else if (key == "families") {
      std::string f;
      while (ls >> f) m.families.push_back(f);
    } else if (key == "growth") {
      std::string what;
      std::istringstream rs(rest);
      rs >> what;
      std::string body = strip(rest.substr(what.size()));
      if (!body.empty() && body[0] == ':') body = strip(body.substr(1));
      if (what == "word") growth_word_text = body;
      else if (what == "start") growth_start_text = body;
      else throw Error("unknown growth line: " + line);
    } else if (key == "action") {
      std::string gen, family;
      std::istringstream rs(rest);
      rs >> gen >> family;
      std::string body = strip(rest.substr(rest.find(family) + family.size()));
      if (body.empty() || body[0] != '=') throw Error("action line expects '=': " + line);
      action_lines.emplace_back(gen, family, strip(body.substr(1)));
    } else {
      throw Error("unknown witness keyword " + key);
    }
  }

  if (m.families.empty()) throw Error("witness module needs families");
  m.action.assign(m.gens.size(),
                  std::vector<std::vector<WitnessModule::ActionTerm>>(m.families.size()));
  for (const auto& [gen, family, body] : action_lines) {
    auto& slot = m.action[m.gens.index(gen)][m.family_index(family)];
    if (body == "0") continue;
    std::string cur;
    int depth = 0;
    for (char c : body + "+") {
      if (c == '[') ++depth;
      if (c == ']') --depth;
      if (c == '+' && depth == 0) {
        if (!strip(cur).empty()) slot.push_back(parse_action_term(m, cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
  }
  if (!growth_word_text.empty()) m.growth_word = Word::parse(m.gens, growth_word_text);
  if (!growth_start_text.empty()) {
    std::istringstream gs(growth_start_text);
    std::string fam;
    long idx;
    gs >> fam >> idx;
    m.growth_family = m.family_index(fam);
    m.growth_start = idx;
  }
  return m;
}

WitnessModule load_witness_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open witness file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_witness(buf.str());
}

WitnessModule witness_catalogue(const std::string& name, const std::string& data_dir) {
  std::filesystem::path path =
      std::filesystem::path(data_dir) / "witnesses" / (name + ".wit");
  return load_witness_file(path.string());
}

namespace {

std::string symbol_str(const WitnessModule& m, const FormalVector& v) {
  if (v.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [sym, c] : v) {
    if (!first) out << " + ";
    first = false;
    if (c != 1) out << c.get_str() << "*";
    out << m.families[sym.first] << "[" << sym.second << "]";
  }
  return out.str();
}

}  // namespace

RelationCertificate check_relations(const WitnessModule& m, const Presentation& p, long R) {
  RelationCertificate cert;
  cert.bound = R;
  if (R < 4) throw Error("check_relations needs R >= 4");
  if (p.gens.names() != m.gens.names())
    throw Error(m.name + ": generator alphabet differs from presentation " + p.name);

  // order relation coefficients must be integer constants here
  std::vector<std::vector<Int>> order_consts(p.num_gens());
  for (int g = 0; g < p.num_gens(); ++g)
    for (const auto& c : p.order_rules[g].coeffs) {
      if (!c.is_constant())
        throw Error(m.name + ": presentation order coefficients are not constants");
      order_consts[g].push_back(c.constant_term());
    }

  for (int f = 0; f < static_cast<int>(m.families.size()); ++f) {
    for (long r = 1; r <= R; ++r) {
      FormalVector e{{{f, r}, Int(1)}};
      for (const auto& [lhs, rhs] : p.braid_relations) {
        FormalVector a = m.act_word(lhs, e);
        FormalVector b = m.act_word(rhs, e);
        ++cert.checked;
        if (a != b) {
          cert.message = "braid relation " + lhs.str(p.gens) + " = " + rhs.str(p.gens) +
                         " fails on " + m.families[f] + "[" + std::to_string(r) +
                         "]: " + symbol_str(m, a) + " vs " + symbol_str(m, b);
          return cert;
        }
      }
      for (int g = 0; g < p.num_gens(); ++g) {
        int o = p.order_rules[g].order;
        FormalVector lhs = e;
        for (int k = 0; k < o; ++k) lhs = m.act(g, lhs);
        FormalVector rhs;
        FormalVector power = e;
        for (int i = 0; i < o; ++i) {
          if (order_consts[g][i] != 0)
            for (const auto& [sym, c] : power) {
              Int& slot = rhs[sym];
              slot += c * order_consts[g][i];
              if (slot == 0) rhs.erase(sym);
            }
          power = m.act(g, power);
        }
        ++cert.checked;
        if (lhs != rhs) {
          cert.message = "order relation of " + p.gens.name(g) + " fails on " +
                         m.families[f] + "[" + std::to_string(r) + "]";
          return cert;
        }
      }
    }
  }
  cert.ok = true;
  cert.message = "all relations hold up to index " + std::to_string(R);
  return cert;
}

GrowthCertificate growth_witness(const WitnessModule& m, const Word& word,
                                 int family, long start, int iterations) {
  GrowthCertificate cert;
  if (iterations < 1) throw Error("growth_witness needs k >= 1");
  FormalVector v{{{family, start}, Int(1)}};
  cert.orbit.emplace_back(m.families[family], start);
  long prev = start;
  for (int k = 1; k <= iterations; ++k) {
    v = m.act_word(word, v);
    if (v.size() != 1 || v.begin()->second != 1) {
      cert.message = "orbit leaves single-symbol form at iteration " + std::to_string(k) +
                     ": " + symbol_str(m, v);
      return cert;
    }
    const auto& [sym, c] = *v.begin();
    if (sym.second <= prev) {
      cert.message = "orbit index fails to increase at iteration " + std::to_string(k);
      return cert;
    }
    prev = sym.second;
    cert.orbit.emplace_back(m.families[sym.first], sym.second);
  }
  cert.ok = true;
  cert.message = "orbit strictly increasing for " + std::to_string(iterations) + " iterations";
  return cert;
}

TorsionCertificate torsion_witness(const std::string& data_dir) {
  TorsionCertificate cert;

  std::filesystem::path trace_path =
      std::filesystem::path(data_dir) / "traces" / "torsion-g4.trace";
  RewriteTrace trace = load_trace_file(trace_path.string());

  // the trace must certify c (s1^2 s2^2)^6 = c^9, not something else
  Word torsion_word;
  for (int i = 0; i < 6; ++i) {
    torsion_word.push(trace.gens.index("s1"), 2);
    torsion_word.push(trace.gens.index("s2"), 2);
  }
  LaurentPoly c = LaurentPoly::variable(trace.ring, "c");
  LaurentPoly c9 = LaurentPoly::monomial(trace.ring, 1, {9});
  Element<LaurentPoly> want_start(torsion_word, c);
  Element<LaurentPoly> want_end(Word(), c9);
  if (trace.start != want_start || trace.end != want_end) {
    cert.message = "torsion trace endpoints are not c (s1^2 s2^2)^6 = c^9";
    return cert;
  }

  TraceCertificate trace_cert = check_trace(trace);
  cert.trace_ok = trace_cert.ok;
  if (!trace_cert.ok) {
    cert.message = "trace replay failed: " + trace_cert.message;
    return cert;
  }

  WitnessModule module = witness_catalogue("G4-nil", data_dir);
  Word shift;
  shift.push(module.gens.index("s1"), 2);
  shift.push(module.gens.index("s2"), 2);
  GrowthCertificate growth = growth_witness(module, shift, module.family_index("w"), 1, 6);
  cert.module_ok = growth.ok && growth.orbit.back() == std::make_pair(std::string("w"), 13L);
  if (!cert.module_ok) {
    cert.message = "nil module fails to send w[1] to w[13]: " + growth.message;
    return cert;
  }
  cert.witness_index = 13;
  cert.ok = true;
  cert.message =
      "torsion certified: c((s1^2 s2^2)^6 - c^8) = 0 while (S1^2 S2^2)^6 w_1 = w_13 != 0";
  return cert;
}

}  // namespace genhecke
