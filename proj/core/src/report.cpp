#include "genhecke/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace genhecke {

using nlohmann::json;

std::string result_to_json(const EnumerationResult& r, const GeneratorSet& gens,
                           int indent) {
  json out;
  out["schema"] = "genhecke-result/1";
  out["presentation"] = r.presentation;
  out["dimension"] = r.dimension;
  json basis = json::array();
  for (const Word& w : r.basis) basis.push_back(w.str(gens));
  out["basis"] = std::move(basis);
  json mats = json::object();
  for (std::size_t g = 0; g < r.matrices.size(); ++g) {
    json triplets = json::array();
    for (std::size_t row = 0; row < r.matrices[g].size(); ++row)
      for (const auto& [col, q] : r.matrices[g][row].entries)
        triplets.push_back(json::array({row, col, rational_str(q)}));
    mats[gens.name(static_cast<int>(g))] = std::move(triplets);
  }
  out["matrices"] = std::move(mats);
  out["specialization"] = r.spec.str();
  if (r.seed) out["seed"] = *r.seed;
  else out["seed"] = nullptr;
  out["max_len"] = r.max_len_explored;
  out["total_words"] = r.total_words;
  return indent < 0 ? out.dump() : out.dump(indent);
}

EnumerationResult result_from_json(const std::string& text, const Presentation& p) {
  json in = json::parse(text);
  if (in.at("schema").get<std::string>() != "genhecke-result/1")
    throw Error("unexpected result schema");
  std::map<std::string, Rational> values;
  {
    std::string spec_text = in.at("specialization").get<std::string>();
    std::istringstream ss(spec_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw Error("bad specialization entry " + item);
      values[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
    }
  }
  EnumerationResult r(p.ring->size() == 0
                          ? Specialization(p.ring, {})
                          : Specialization::from_map(p.ring, values));
  r.presentation = in.at("presentation").get<std::string>();
  if (r.presentation != p.name)
    throw Error("result belongs to presentation " + r.presentation + ", not " + p.name);
  r.dimension = in.at("dimension").get<int>();
  for (const auto& w : in.at("basis"))
    r.basis.push_back(Word::parse(p.gens, w.get<std::string>()));
  if (static_cast<int>(r.basis.size()) != r.dimension)
    throw Error("basis size disagrees with dimension");
  r.matrices.assign(p.num_gens(), Mat(r.dimension));
  for (int g = 0; g < p.num_gens(); ++g) {
    const json& triplets = in.at("matrices").at(p.gens.name(g));
    for (const auto& t : triplets) {
      int row = t.at(0).get<int>();
      int col = t.at(1).get<int>();
      Rational q = parse_rational(t.at(2).get<std::string>());
      r.matrices[g][row].entries.emplace_back(col, std::move(q));
    }
    for (auto& row : r.matrices[g])
      std::sort(row.entries.begin(), row.entries.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  if (!in.at("seed").is_null()) r.seed = in.at("seed").get<std::uint64_t>();
  r.max_len_explored = in.at("max_len").get<int>();
  r.total_words = in.at("total_words").get<long>();
  r.order_coeffs.resize(p.num_gens());
  for (int g = 0; g < p.num_gens(); ++g)
    for (const auto& c : p.order_rules[g].coeffs) r.order_coeffs[g].push_back(r.spec(c));
  return r;
}

}  // namespace genhecke
