#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "genhecke/report.hpp"

using namespace genhecke;
using nlohmann::json;

namespace {

std::string data_dir() { return default_data_dir(); }

/// minimal structural validator for the shipped draft-07 subset:
/// type / required / properties / enum / additionalProperties
bool validates(const json& schema, const json& value, std::string& why) {
  if (schema.contains("type")) {
    const std::string& t = schema["type"].get_ref<const std::string&>();
    bool ok = (t == "object" && value.is_object()) || (t == "string" && value.is_string()) ||
              (t == "number" && value.is_number()) || (t == "array" && value.is_array()) ||
              (t == "boolean" && value.is_boolean()) ||
              (t == "integer" && value.is_number_integer());
    if (!ok) {
      why = "expected type " + t;
      return false;
    }
  }
  if (schema.contains("enum")) {
    bool hit = false;
    for (const auto& v : schema["enum"]) hit |= v == value;
    if (!hit) {
      why = "value not in enum";
      return false;
    }
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!value.contains(key.get<std::string>())) {
          why = "missing required key " + key.get<std::string>();
          return false;
        }
    const json* props = schema.contains("properties") ? &schema["properties"] : nullptr;
    for (const auto& [key, sub] : value.items()) {
      if (props && props->contains(key)) {
        if (!validates((*props)[key], sub, why)) return false;
      } else if (schema.value("additionalProperties", json(true)) == json(false)) {
        why = "unexpected key " + key;
        return false;
      }
    }
  }
  return true;
}

json load_schema() {
  std::ifstream in(std::filesystem::path(data_dir()) / "schema" / "report.schema.json");
  REQUIRE(in);
  json schema;
  in >> schema;
  return schema;
}

}  // namespace

TEST_CASE("result JSON round-trips exactly") {
  Presentation g4 = catalogue("G4", data_dir());
  EnumerationResult r = enumerate_random(g4, 8);
  std::string text = result_to_json(r, g4.gens);
  EnumerationResult back = result_from_json(text, g4);
  CHECK(back.dimension == r.dimension);
  CHECK(back.basis == r.basis);
  for (std::size_t g = 0; g < r.matrices.size(); ++g)
    CHECK(mat_equal(back.matrices[g], r.matrices[g]));
  CHECK(back.spec.str() == r.spec.str());
  CHECK(back.seed == r.seed);
  CHECK(verify_result(back, g4).ok);
  // serialization is deterministic
  CHECK(result_to_json(back, g4.gens) == text);
}

TEST_CASE("report schema accepts certificates and rejects malformed ones") {
  json schema = load_schema();
  std::string why;

  json good{{"schema", "genhecke-report/1"},
            {"command", "enumerate"},
            {"inputs", {{"presentation", "G4"}}},
            {"outcome", "certified"},
            {"payload", {{"dimension", 24}}}};
  CHECK(validates(schema, good, why));

  json with_timings = good;
  with_timings["timings"] = {{"wall_ms", 12.5}};
  CHECK(validates(schema, with_timings, why));

  json bad_outcome = good;
  bad_outcome["outcome"] = "maybe";
  CHECK_FALSE(validates(schema, bad_outcome, why));

  json missing = good;
  missing.erase("payload");
  CHECK_FALSE(validates(schema, missing, why));

  json extra = good;
  extra["surprise"] = 1;
  CHECK_FALSE(validates(schema, extra, why));
}

TEST_CASE("result files reject foreign presentations") {
  Presentation g4 = catalogue("G4", data_dir());
  Presentation g12 = catalogue("G12", data_dir());
  EnumerationResult r = enumerate_random(g4, 8);
  std::string text = result_to_json(r, g4.gens);
  CHECK_THROWS_AS(result_from_json(text, g12), Error);
  CHECK_THROWS(result_from_json("not json at all", g4));
  CHECK_THROWS(result_from_json("{\"schema\":\"something-else\"}", g4));
}
