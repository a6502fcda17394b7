// Command-line front end: every subcommand runs one verification and emits
// either a human summary or a machine-readable certificate (--json).
// Exit codes: 0 certified, 1 falsified, 2 usage or budget error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "genhecke/acceptance.hpp"
#include "genhecke/demazure.hpp"
#include "genhecke/enumerate.hpp"
#include "genhecke/presentation.hpp"
#include "genhecke/report.hpp"
#include "genhecke/rewrite.hpp"
#include "genhecke/spanning.hpp"
#include "genhecke/witness.hpp"

using nlohmann::json;
using namespace genhecke;

namespace {

using Clock = std::chrono::steady_clock;

struct GlobalOpts {
  std::string data_dir;
  std::string config_path;
  bool json_out = false;
  bool timings = false;
};

std::map<std::string, std::string> load_config(const std::string& path) {
  std::map<std::string, std::string> named;
  if (path.empty()) return named;
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file " + path);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    auto strip = [](std::string s) {
      auto a = s.find_first_not_of(" \t");
      if (a == std::string::npos) return std::string();
      auto b = s.find_last_not_of(" \t\r\n");
      return s.substr(a, b - a + 1);
    };
    named[strip(line.substr(0, colon))] = strip(line.substr(colon + 1));
  }
  return named;
}

Specialization parse_spec_arg(const Presentation& p, std::string text,
                              const GlobalOpts& gopts) {
  if (!text.empty() && text[0] == '@') {
    auto named = load_config(gopts.config_path);
    auto it = named.find(text.substr(1));
    if (it == named.end()) throw Error("config does not define specialization " + text);
    text = it->second;
  }
  std::map<std::string, Rational> values;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error("bad --spec entry " + item);
    values[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
  }
  return Specialization::from_map(p.ring, values);
}

/// report envelope shared by all subcommands
int emit(const GlobalOpts& gopts, const std::string& command, const json& inputs,
         bool certified, const json& payload, double wall_ms,
         const std::string& human_summary) {
  if (gopts.json_out) {
    json out{{"schema", "genhecke-report/1"},
             {"command", command},
             {"inputs", inputs},
             {"outcome", certified ? "certified" : "falsified"},
             {"payload", payload}};
    if (gopts.timings) out["timings"] = json{{"wall_ms", wall_ms}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (certified ? "[certified] " : "[FALSIFIED] ") << human_summary << "\n";
    if (gopts.timings) std::cout << "wall time: " << wall_ms << " ms\n";
  }
  return certified ? 0 : 1;
}

int cmd_demazure(const GlobalOpts& gopts, int max_degree) {
  auto t0 = Clock::now();
  BraidFailureReport rpt = braid_failure_check();
  auto table = demazure_table();
  json table_json = json::array();
  bool table_ok = true;
  for (const auto& row : table) {
    table_ok &= row.ok;
    table_json.push_back({{"label", row.label}, {"value", row.computed.str()}, {"ok", row.ok}});
  }
  bool nil_ok = true;
  std::string nil_msg;
  try {
    check_nilpotency(max_degree);
  } catch (const Error& e) {
    nil_ok = false;
    nil_msg = e.what();
  }
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  bool ok = rpt.ok && table_ok && nil_ok;
  json payload{{"u3", rpt.u3.str()},
               {"v9", rpt.v9.str()},
               {"det", rpt.det.str()},
               {"independent", rpt.independent},
               {"table", table_json},
               {"nilpotency_degree", max_degree},
               {"nilpotency_ok", nil_ok}};
  std::ostringstream human;
  human << "3 d1d2d1.y^4 = " << rpt.u3.str() << "; 9 d2d1d2.y^4 = " << rpt.v9.str()
        << "; det = " << rpt.det.str() << " (independent: " << (rpt.independent ? "yes" : "no")
        << "); table " << (table_ok ? "8/8" : "FAILED") << "; delta^3 = 0 up to degree "
        << max_degree << (nil_ok ? "" : " FAILED: " + nil_msg);
  return emit(gopts, "demazure", json{{"max_degree", max_degree}}, ok, payload, ms,
              human.str());
}

int cmd_torsion(const GlobalOpts& gopts) {
  auto t0 = Clock::now();
  TorsionCertificate cert = torsion_witness(gopts.data_dir);
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  json payload{{"trace_ok", cert.trace_ok},
               {"module_ok", cert.module_ok},
               {"witness_symbol", "w[" + std::to_string(cert.witness_index) + "]"}};
  return emit(gopts, "torsion", json::object(), cert.ok, payload, ms, cert.message);
}

int cmd_witness(const GlobalOpts& gopts, const std::string& name, long R, int k) {
  auto t0 = Clock::now();
  WitnessModule m = witness_catalogue(name, gopts.data_dir);
  Presentation p = catalogue(m.presentation_name, gopts.data_dir);
  RelationCertificate rel = check_relations(m, p, R);
  GrowthCertificate growth;
  if (rel.ok)
    growth = growth_witness(m, m.growth_word, m.growth_family, m.growth_start, k);
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  json orbit = json::array();
  for (const auto& [fam, idx] : growth.orbit) orbit.push_back(fam + "[" + std::to_string(idx) + "]");
  json payload{{"module", name},
               {"presentation", m.presentation_name},
               {"relations", {{"ok", rel.ok}, {"bound", rel.bound}, {"checked", rel.checked}}},
               {"growth", {{"ok", growth.ok}, {"word", m.growth_word.str(m.gens)}, {"orbit", orbit}}}};
  bool ok = rel.ok && growth.ok;
  std::string human = name + ": " + rel.message + "; " + growth.message;
  return emit(gopts, "witness", json{{"name", name}, {"R", R}, {"k", k}}, ok, payload, ms,
              human);
}

int cmd_trace(const GlobalOpts& gopts, const std::string& file) {
  auto t0 = Clock::now();
  RewriteTrace trace = load_trace_file(file);
  TraceCertificate cert = check_trace(trace);
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  json payload{{"trace", trace.name},
               {"steps", trace.steps.size()},
               {"failed_step", cert.failed_step},
               {"final", element_str(cert.final, trace.gens)}};
  return emit(gopts, "trace", json{{"file", file}}, cert.ok, payload, ms, cert.message);
}

int cmd_enumerate(const GlobalOpts& gopts, const std::string& name, const std::string& spec_arg,
                  bool random, std::uint64_t seed, int max_dim, int max_len,
                  const std::string& out_path, std::string checkpoint, long ckpt_every,
                  bool resume, bool verify, bool quiet) {
  auto t0 = Clock::now();
  Presentation p = catalogue(name, gopts.data_dir);
  if (checkpoint.empty()) {
    // long runs default their checkpoints into the cache directory
    if (const char* cache = std::getenv("GENHECKE_CACHE_DIR")) {
      std::string tag = random ? "seed" + std::to_string(seed) : "spec";
      checkpoint = std::string(cache) + "/" + name + "-" + tag + ".ckpt";
    }
  }
  EnumerationOptions opts;
  opts.max_dim = max_dim;
  opts.max_len = max_len;
  opts.checkpoint_path = checkpoint;
  opts.checkpoint_every = ckpt_every;
  if (!quiet && !gopts.json_out)
    opts.log = [](const std::string& msg) { std::cerr << msg << "\n"; };

  std::optional<EnumerationResult> result;
  if (resume) {
    if (checkpoint.empty()) throw Error("--resume needs --checkpoint");
    result = enumerate_resume(p, checkpoint, opts);
  } else if (random) {
    result = enumerate_random(p, seed, opts);
  } else if (!spec_arg.empty()) {
    result = enumerate(p, parse_spec_arg(p, spec_arg, gopts), opts);
  } else {
    result = enumerate(p, p.group_specialization(), opts);
  }

  bool verified = true;
  if (verify) verified = verify_result(*result, p).ok;

  double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write " + out_path);
    if (gopts.timings) {
      json doc = json::parse(result_to_json(*result, p.gens));
      doc["timings"] = json{{"wall_ms", ms}};
      out << doc.dump(0);
    } else {
      out << result_to_json(*result, p.gens, 0);
    }
  }
  json payload{{"dimension", result->dimension},
               {"specialization", result->spec.str()},
               {"total_words", result->total_words},
               {"max_len_explored", result->max_len_explored},
               {"verified", verify ? json(verified) : json(nullptr)}};
  if (result->seed) payload["seed"] = *result->seed;
  std::ostringstream human;
  human << name << " enumerates to dimension " << result->dimension << " at "
        << result->spec.str();
  if (verify) human << (verified ? " (matrices verified)" : " (MATRIX VERIFICATION FAILED)");
  json inputs{{"presentation", name}, {"random", random}, {"seed", seed}};
  return emit(gopts, "enumerate", inputs, verified, payload, ms, human.str());
}

int cmd_candidate(const GlobalOpts& gopts, const std::string& out_path, std::uint64_t seed) {
  auto t0 = Clock::now();
  Presentation g26 = catalogue("G26", gopts.data_dir);
  Presentation g4 = catalogue("G4", gopts.data_dir);
  CandidateFamily fam = build_candidate_1296(g26, g4, seed);
  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) throw Error("cannot write " + out_path);
    for (const Word& w : fam.words) file << w.str(g26.gens) << "\n";
  } else if (!gopts.json_out) {
    for (const Word& w : fam.words) std::cout << w.str(g26.gens) << "\n";
    return 0;
  }
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  json payload{{"words", fam.words.size()},
               {"fallback_words", fam.fallback.size()},
               {"selection_seed", fam.selection_seed}};
  return emit(gopts, "candidate-1296", json{{"seed", seed}, {"out", out_path}}, true,
              payload, ms, "emitted " + std::to_string(fam.words.size()) + " words");
}

int cmd_certify(const GlobalOpts& gopts, const std::string& name, const std::string& words_path,
                const std::string& result_path) {
  auto t0 = Clock::now();
  Presentation p = catalogue(name, gopts.data_dir);
  std::ifstream rf(result_path);
  if (!rf) throw Error("cannot open result file " + result_path);
  std::ostringstream rbuf;
  rbuf << rf.rdbuf();
  EnumerationResult result = result_from_json(rbuf.str(), p);

  std::vector<Word> words;
  std::ifstream wf(words_path);
  if (!wf) throw Error("cannot open words file " + words_path);
  std::string line;
  while (std::getline(wf, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    words.push_back(Word::parse(p.gens, line));
  }

  SpanningCertificate cert = certify_spanning(words, result);
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  json payload{{"rank", cert.rank},
               {"dimension", cert.dimension},
               {"words", words.size()},
               {"contains_identity", cert.contains_identity},
               {"first_dependent", cert.first_dependent},
               {"independent", cert.independent}};
  json inputs{{"presentation", name}, {"words", words_path}, {"result", result_path}};
  return emit(gopts, "certify-spanning", inputs, cert.ok, payload, ms, cert.message);
}

int cmd_verify_all(const GlobalOpts& gopts, std::uint64_t seed) {
  AcceptanceOptions opts;
  opts.data_dir = gopts.data_dir;
  opts.seed = seed;
  json criteria = json::array();
  bool all = true;
  auto t0 = Clock::now();
  auto results = run_acceptance(opts, [&](const CriterionResult& r) {
    if (!gopts.json_out)
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << ": " << r.detail << " ["
                << static_cast<long>(r.wall_ms) << " ms]" << std::endl;
  });
  for (const auto& r : results) {
    all &= r.pass;
    json entry{{"id", r.id}, {"pass", r.pass}, {"detail", r.detail}};
    if (gopts.timings) entry["wall_ms"] = r.wall_ms;
    criteria.push_back(entry);
  }
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  if (gopts.json_out) {
    json out{{"schema", "genhecke-report/1"},
             {"command", "verify-all"},
             {"inputs", json{{"seed", seed}}},
             {"outcome", all ? "certified" : "falsified"},
             {"payload", json{{"criteria", criteria}}}};
    if (gopts.timings) out["timings"] = json{{"wall_ms", ms}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (all ? "all criteria certified" : "SOME CRITERIA FAILED") << "\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for generic Hecke algebras of complex "
               "reflection groups"};
  app.require_subcommand(1);

  GlobalOpts gopts;
  gopts.data_dir = default_data_dir();
  app.add_option("--data-dir", gopts.data_dir, "directory holding presentations/, witnesses/, traces/");
  app.add_option("--config", gopts.config_path, "config file with named specializations");
  app.add_flag("--json", gopts.json_out, "emit a machine-readable certificate");
  app.add_flag("--timings", gopts.timings, "include wall-clock timings in the output");

  auto* dem = app.add_subcommand("demazure", "divided-difference operators on Q(j)[x,y]");
  int max_degree = 12;
  dem->add_option("--max-degree", max_degree, "nilpotency sweep degree bound");

  auto* tor = app.add_subcommand("torsion", "replay the torsion certificate");

  auto* wit = app.add_subcommand("witness", "check a shipped witness module");
  std::string wit_name;
  long wit_R = 100;
  int wit_k = 50;
  wit->add_option("name", wit_name, "module name, e.g. G12-nil")->required();
  wit->add_option("--R", wit_R, "relation check bound");
  wit->add_option("--k", wit_k, "growth iterations");

  auto* trc = app.add_subcommand("trace", "verify a rewriting trace file");
  std::string trace_file;
  trc->add_option("file", trace_file, "trace file")->required();

  auto* enu = app.add_subcommand("enumerate", "vector enumeration of a catalogue entry");
  std::string enum_name, enum_spec, enum_out, enum_ckpt;
  bool enum_random = false, enum_resume = false, enum_verify = false, enum_quiet = false;
  std::uint64_t enum_seed = 1;
  int enum_max_dim = 100000, enum_max_len = 64;
  long enum_ckpt_every = 4096;
  enu->add_option("name", enum_name, "catalogue entry, e.g. G26 or Gd12(3)")->required();
  enu->add_option("--spec", enum_spec, "explicit specialization a=0,b=0,c=1 or @name");
  enu->add_flag("--random", enum_random, "seeded random specialization");
  enu->add_option("--seed", enum_seed, "seed for --random");
  enu->add_option("--max-dim", enum_max_dim, "abort beyond this live dimension");
  enu->add_option("--max-len", enum_max_len, "abort beyond this word length");
  enu->add_option("--out", enum_out, "write the result JSON here");
  enu->add_option("--checkpoint", enum_ckpt, "checkpoint file path");
  enu->add_option("--checkpoint-every", enum_ckpt_every, "definitions between checkpoints");
  enu->add_flag("--resume", enum_resume, "resume from --checkpoint");
  enu->add_flag("--verify", enum_verify, "re-check all matrix identities afterwards");
  enu->add_flag("--quiet", enum_quiet, "suppress progress lines");

  auto* cand = app.add_subcommand("candidate-1296", "emit the 1296-word spanning candidate");
  std::string cand_out;
  std::uint64_t cand_seed = 24;
  cand->add_option("--out", cand_out, "write the word list here (default stdout)");
  cand->add_option("--seed", cand_seed, "selection seed for the rank-24 probe");

  auto* cert = app.add_subcommand("certify-spanning", "rank-certify a word list against a result");
  std::string cert_name, cert_words, cert_result;
  cert->add_option("name", cert_name, "catalogue entry the result belongs to")->required();
  cert->add_option("--words", cert_words, "word list file, one word per line")->required();
  cert->add_option("--result", cert_result, "enumeration result JSON")->required();

  auto* vall = app.add_subcommand("verify-all", "run the full acceptance battery");
  std::uint64_t vall_seed = 1;
  vall->add_option("--seed", vall_seed, "base seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage error
  }

  try {
    if (dem->parsed()) return cmd_demazure(gopts, max_degree);
    if (tor->parsed()) return cmd_torsion(gopts);
    if (wit->parsed()) return cmd_witness(gopts, wit_name, wit_R, wit_k);
    if (trc->parsed()) return cmd_trace(gopts, trace_file);
    if (enu->parsed())
      return cmd_enumerate(gopts, enum_name, enum_spec, enum_random, enum_seed, enum_max_dim,
                           enum_max_len, enum_out, enum_ckpt, enum_ckpt_every, enum_resume,
                           enum_verify, enum_quiet);
    if (cand->parsed()) return cmd_candidate(gopts, cand_out, cand_seed);
    if (cert->parsed()) return cmd_certify(gopts, cert_name, cert_words, cert_result);
    if (vall->parsed()) return cmd_verify_all(gopts, vall_seed);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget error: " << e.what() << " (live dimension " << e.live_dimension
              << ", frontier " << e.frontier_size << ")\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
