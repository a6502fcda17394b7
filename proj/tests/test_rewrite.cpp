#include <doctest.h>

#include <filesystem>

#include "genhecke/enumerate.hpp"
#include "genhecke/presentation.hpp"
#include "genhecke/rewrite.hpp"

using namespace genhecke;

namespace {

std::string trace_path(const std::string& name) {
  return (std::filesystem::path(default_data_dir()) / "traces" / (name + ".trace")).string();
}

}  // namespace

TEST_CASE("single braid step") {
  RewriteTrace ctx;
  ctx.ring = trivial_ring();
  ctx.gens = GeneratorSet({"s1", "s2", "t"});
  RewriteRule braid;
  braid.id = "ts2ts2";
  braid.lhs = Word::parse(ctx.gens, "t s2 t s2");
  braid.rhs = element_parse(ctx.ring, ctx.gens, "s2 t s2 t");
  braid.is_braid = true;
  ctx.rules.push_back(braid);

  Element<LaurentPoly> x(Word::parse(ctx.gens, "t s2 t s2"),
                         LaurentPoly::constant(ctx.ring, 1));
  Element<LaurentPoly> y = apply_step(x, ctx, {0, 0, "ts2ts2", true});
  CHECK(y == Element<LaurentPoly>(Word::parse(ctx.gens, "s2 t s2 t"),
                                  LaurentPoly::constant(ctx.ring, 1)));
  // commuting rule applies backward too
  RewriteRule comm;
  comm.id = "comm";
  comm.lhs = Word::parse(ctx.gens, "t s1");
  comm.rhs = element_parse(ctx.ring, ctx.gens, "s1 t");
  ctx.rules.push_back(comm);
  Element<LaurentPoly> z(Word::parse(ctx.gens, "s1 t"),
                         LaurentPoly::constant(ctx.ring, 1));
  CHECK(apply_step(z, ctx, {0, 0, "comm", false}) ==
        Element<LaurentPoly>(Word::parse(ctx.gens, "t s1"),
                             LaurentPoly::constant(ctx.ring, 1)));
  // mismatch reports term, position and rule
  CHECK_THROWS_WITH_AS(apply_step(z, ctx, {0, 1, "comm", false}),
                       doctest::Contains("pos=1"), Error);
}

TEST_CASE("scalar insertion inside a word") {
  // s2^3 -> (c): forward removes the cube and multiplies by c, backward
  // inserts it and divides
  RewriteTrace ctx;
  ctx.ring = make_ring({"c"}, {"c"});
  ctx.gens = GeneratorSet({"s1", "s2"});
  RewriteRule cube;
  cube.id = "s2cube";
  cube.lhs = Word::parse(ctx.gens, "s2^3");
  cube.rhs = element_parse(ctx.ring, ctx.gens, "(c)");
  ctx.rules.push_back(cube);

  Element<LaurentPoly> x(Word::parse(ctx.gens, "s1 s2^3 s1"),
                         LaurentPoly::constant(ctx.ring, 1));
  Element<LaurentPoly> fwd = apply_step(x, ctx, {0, 1, "s2cube", true});
  CHECK(fwd == Element<LaurentPoly>(Word::parse(ctx.gens, "s1^2"),
                                    LaurentPoly::variable(ctx.ring, "c")));
  Element<LaurentPoly> back = apply_step(fwd, ctx, {0, 1, "s2cube", false});
  CHECK(back == x);
}

TEST_CASE("shipped traces replay") {
  for (const char* name :
       {"torsion-g4", "c-central-t", "c-central-s2", "c-central-s1", "c-word"}) {
    RewriteTrace tr = load_trace_file(trace_path(name));
    TraceCertificate cert = check_trace(tr);
    INFO(name, ": ", cert.message);
    CHECK(cert.ok);
  }
}

TEST_CASE("empty trace certifies when start equals end") {
  RewriteTrace tr;
  tr.ring = trivial_ring();
  tr.gens = GeneratorSet({"s1"});
  tr.start = Element<LaurentPoly>(Word::parse(tr.gens, "s1"),
                                  LaurentPoly::constant(tr.ring, 1));
  tr.end = tr.start;
  CHECK(check_trace(tr).ok);
  tr.end = Element<LaurentPoly>(Word(), LaurentPoly::constant(tr.ring, 1));
  CHECK_FALSE(check_trace(tr).ok);
}

TEST_CASE("perturbing one position breaks the torsion trace at that step") {
  RewriteTrace tr = load_trace_file(trace_path("torsion-g4"));
  for (std::size_t k : {std::size_t(0), tr.steps.size() / 2, tr.steps.size() - 1}) {
    RewriteTrace bad = tr;
    bad.steps[k].pos += 1;
    TraceCertificate cert = check_trace(bad);
    CHECK_FALSE(cert.ok);
    // rejected no earlier than the perturbed step; a perturbation that
    // accidentally matches elsewhere still breaks the endpoint comparison
    CHECK((cert.failed_step == -1 || cert.failed_step >= static_cast<int>(k)));
  }
  RewriteTrace bad = tr;
  bad.steps[3].pos = 1;
  TraceCertificate cert = check_trace(bad);
  CHECK_FALSE(cert.ok);
  CHECK(cert.failed_step == 3);
}

TEST_CASE("every torsion-trace step preserves the image in the regular representation") {
  RewriteTrace tr = load_trace_file(trace_path("torsion-g4"));
  Presentation g4 = catalogue("G4", default_data_dir());

  // replay, collecting all intermediate elements
  std::vector<Element<LaurentPoly>> stages{tr.start};
  for (const auto& step : tr.steps) stages.push_back(apply_step(stages.back(), tr, step));
  REQUIRE(stages.back() == tr.end);

  for (int k = 0; k < 10; ++k) {
    // a = b = 0, c random: the specialization under which the trace rules hold
    SplitMix64 rng(900 + k);
    Rational c(rng.small_positive(), rng.small_positive());
    c.canonicalize();
    Specialization sg4 = Specialization::from_map(
        g4.ring, {{"a", 0}, {"b", 0}, {"c", c}});
    Specialization strace = Specialization::from_map(tr.ring, {{"c", c}});
    EnumerationResult r = enumerate(g4, sg4);
    REQUIRE(r.dimension == 24);

    auto as_matrix = [&](const Element<LaurentPoly>& x) {
      Mat acc(r.dimension);
      for (const auto& [w, coeff] : x.terms()) {
        // the trace alphabet (s1, s2) embeds into the G4 alphabet by name
        Word mapped;
        for (const Letter& l : w.letters())
          mapped.push(g4.gens.index(tr.gens.name(l.gen)), l.exp);
        acc = mat_add(acc, mat_scale(eval_word(r, mapped), strace(coeff)));
      }
      return acc;
    };

    Mat first = as_matrix(stages.front());
    for (std::size_t i = 1; i < stages.size(); ++i)
      CHECK(mat_equal(first, as_matrix(stages[i])));
  }
}

TEST_CASE("term selectors address the canonical order") {
  RewriteTrace ctx;
  ctx.ring = make_ring({"c"}, {"c"});
  ctx.gens = GeneratorSet({"s1", "s2"});
  RewriteRule cube;
  cube.id = "s1cube";
  cube.lhs = Word::parse(ctx.gens, "s1^3");
  cube.rhs = element_parse(ctx.ring, ctx.gens, "(c)");
  ctx.rules.push_back(cube);

  // two terms; canonical order puts the shorter word first
  Element<LaurentPoly> x;
  x.add(Word::parse(ctx.gens, "s2"), LaurentPoly::constant(ctx.ring, 2));
  x.add(Word::parse(ctx.gens, "s1^3 s2"), LaurentPoly::constant(ctx.ring, 1));
  Element<LaurentPoly> y = apply_step(x, ctx, {1, 0, "s1cube", true});
  // the long term collapses onto the short one: 2 s2 + c s2
  Element<LaurentPoly> want;
  want.add(Word::parse(ctx.gens, "s2"),
           LaurentPoly::constant(ctx.ring, 2) + LaurentPoly::variable(ctx.ring, "c"));
  CHECK(y == want);
  CHECK_THROWS_AS(apply_step(x, ctx, {2, 0, "s1cube", true}), Error);
  CHECK_THROWS_AS(apply_step(x, ctx, {0, 0, "nope", true}), Error);
}

TEST_CASE("trace file round-trip fields") {
  RewriteTrace tr = load_trace_file(trace_path("torsion-g4"));
  CHECK(tr.version == 1);
  CHECK(tr.name == "torsion-g4");
  CHECK(tr.steps.size() == 15);
  CHECK(tr.rules.size() == 3);
  CHECK(tr.rule("braid").is_braid);
  CHECK_FALSE(tr.rule("s1cube").is_braid);
  CHECK_THROWS_AS(tr.rule("nope"), Error);
}
