#include "genhecke/rewrite.hpp"

#include <fstream>
#include <sstream>

namespace genhecke {

const RewriteRule& RewriteTrace::rule(const std::string& id) const {
  for (const auto& r : rules)
    if (r.id == id) return r;
  throw Error("unknown rewrite rule " + id);
}

namespace {

bool match_at(const std::vector<Letter>& units, int pos, const std::vector<Letter>& pat) {
  if (pos < 0 || pos + pat.size() > units.size()) return false;
  for (std::size_t i = 0; i < pat.size(); ++i)
    if (!(units[pos + i] == pat[i])) return false;
  return true;
}

Word splice(const std::vector<Letter>& units, int pos, int cut,
            const std::vector<Letter>& replacement) {
  Word out;
  for (int i = 0; i < pos; ++i) out.push(units[i].gen, units[i].exp);
  for (const Letter& l : replacement) out.push(l.gen, l.exp);
  for (std::size_t i = pos + cut; i < units.size(); ++i) out.push(units[i].gen, units[i].exp);
  return out;
}

}  // namespace

Element<LaurentPoly> apply_step(const Element<LaurentPoly>& x, const RewriteTrace& ctx,
                                const TraceStep& step) {
  const RewriteRule& rule = ctx.rule(step.rule);
  const auto& [word, coeff] = x.term(step.term);
  std::vector<Letter> units = word.expanded();

  auto fail = [&](const std::string& why) -> Error {
    std::ostringstream out;
    out << "step term=" << step.term << " pos=" << step.pos << " rule=" << step.rule
        << " dir=" << (step.forward ? "fwd" : "bwd") << ": " << why << " in "
        << word.str(ctx.gens);
    return Error(out.str());
  };

  Element<LaurentPoly> replacement;  // what the matched pattern becomes
  int cut = 0;
  if (step.forward) {
    std::vector<Letter> pat = rule.lhs.expanded();
    if (!match_at(units, step.pos, pat)) throw fail("lhs does not match");
    cut = static_cast<int>(pat.size());
    replacement = rule.rhs;
  } else {
    if (rule.rhs.size() != 1)
      throw fail("rule is not reversible (rhs is not a single term)");
    const auto& [rword, rcoeff] = *rule.rhs.terms().begin();
    std::vector<Letter> pat = rword.expanded();
    if (!match_at(units, step.pos, pat)) throw fail("rhs does not match");
    cut = static_cast<int>(pat.size());
    replacement.add(rule.lhs, rcoeff.unit_inverse());
  }

  Element<LaurentPoly> out = x;
  out.add(word, -coeff);
  for (const auto& [rw, rc] : replacement.terms())
    out.add(splice(units, step.pos, cut, rw.expanded()), coeff * rc);
  return out;
}

TraceCertificate check_trace(const RewriteTrace& trace) {
  TraceCertificate cert;
  Element<LaurentPoly> cur = trace.start;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    try {
      cur = apply_step(cur, trace, trace.steps[i]);
    } catch (const Error& e) {
      cert.ok = false;
      cert.failed_step = static_cast<int>(i);
      cert.message = e.what();
      cert.final = cur;
      return cert;
    }
  }
  cert.final = cur;
  if (cur == trace.end) {
    cert.ok = true;
    cert.message = "trace certified";
  } else {
    cert.ok = false;
    cert.failed_step = -1;
    cert.message = "endpoint mismatch: reached " + element_str(cur, trace.gens) +
                   ", expected " + element_str(trace.end, trace.gens);
  }
  return cert;
}

namespace {

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

RewriteTrace parse_trace(const std::string& text) {
  RewriteTrace tr;
  std::vector<std::string> ring_vars, ring_inv;
  std::vector<std::pair<std::string, std::string>> rule_lines;
  std::string start_text, end_text;
  bool in_steps = false;

  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;

    if (in_steps) {
      TraceStep step;
      std::istringstream ls(line);
      std::string field;
      int seen = 0;
      while (ls >> field) {
        auto eq = field.find('=');
        if (eq == std::string::npos) throw Error("bad step line: " + line);
        std::string key = field.substr(0, eq), value = field.substr(eq + 1);
        if (key == "term") step.term = std::stoi(value);
        else if (key == "pos") step.pos = std::stoi(value);
        else if (key == "rule") step.rule = value;
        else if (key == "dir") {
          if (value == "fwd") step.forward = true;
          else if (value == "bwd") step.forward = false;
          else throw Error("bad step direction: " + value);
        } else {
          throw Error("bad step field: " + field);
        }
        ++seen;
      }
      if (seen != 4) throw Error("step line needs term= pos= rule= dir=: " + line);
      tr.steps.push_back(step);
      continue;
    }

    std::istringstream ls(line);
    std::string key;
    ls >> key;
    std::string rest = strip(line.substr(key.size()));
    if (key == "version") tr.version = std::stoi(rest);
    else if (key == "name") tr.name = rest;
    else if (key == "ring") {
      std::string vars = rest, inv;
      auto semi = rest.find(';');
      if (semi != std::string::npos) {
        vars = strip(rest.substr(0, semi));
        inv = strip(rest.substr(semi + 1));
        std::istringstream is(inv);
        std::string w;
        is >> w;
        if (w != "invertible") throw Error("ring line expects '; invertible ...'");
        while (is >> w) ring_inv.push_back(w);
      }
      std::istringstream vs(vars);
      std::string v;
      while (vs >> v) ring_vars.push_back(v);
    } else if (key == "generators") {
      std::vector<std::string> names;
      std::string n;
      while (ls >> n) names.push_back(n);
      tr.gens = GeneratorSet(names);
    } else if (key == "rule") {
      auto colon = rest.find(':');
      if (colon == std::string::npos) throw Error("rule line expects 'id : lhs = rhs'");
      rule_lines.emplace_back(strip(rest.substr(0, colon)), strip(rest.substr(colon + 1)));
    } else if (key == "start") {
      start_text = rest[0] == ':' ? strip(rest.substr(1)) : rest;
    } else if (key == "end") {
      end_text = rest[0] == ':' ? strip(rest.substr(1)) : rest;
    } else if (key == "steps:" || key == "steps") {
      in_steps = true;
    } else {
      throw Error("unknown trace keyword " + key);
    }
  }

  tr.ring = make_ring(ring_vars, ring_inv);
  for (const auto& [id, body] : rule_lines) {
    auto eq = body.find('=');
    if (eq == std::string::npos) throw Error("rule body expects 'lhs = rhs'");
    RewriteRule rule;
    rule.id = id;
    rule.lhs = Word::parse(tr.gens, strip(body.substr(0, eq)));
    rule.rhs = element_parse(tr.ring, tr.gens, strip(body.substr(eq + 1)));
    if (rule.rhs.size() == 1) {
      const auto& [w, c] = *rule.rhs.terms().begin();
      rule.is_braid = c.is_one() && w.expanded_size() == rule.lhs.expanded_size();
    }
    tr.rules.push_back(std::move(rule));
  }
  if (start_text.empty() || end_text.empty())
    throw Error("trace needs start and end elements");
  tr.start = element_parse(tr.ring, tr.gens, start_text);
  tr.end = element_parse(tr.ring, tr.gens, end_text);
  return tr;
}

RewriteTrace load_trace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open trace file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  RewriteTrace tr = parse_trace(buf.str());
  if (tr.name.empty()) tr.name = path;
  return tr;
}

}  // namespace genhecke
