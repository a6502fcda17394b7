#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "genhecke/enumerate.hpp"
#include "genhecke/presentation.hpp"

using namespace genhecke;

namespace {

std::string data_dir() { return default_data_dir(); }

Presentation z2_presentation() {
  return parse_presentation(
      "name Z2\n"
      "ring d e ; invertible e\n"
      "generators t\n"
      "order t : e, d\n");
}

}  // namespace

TEST_CASE("one generator with t^2 = d t + e") {
  Presentation p = z2_presentation();
  Specialization s = Specialization::from_map(p.ring, {{"d", 0}, {"e", 1}});
  EnumerationResult r = enumerate(p, s);
  CHECK(r.dimension == 2);
  REQUIRE(r.basis.size() == 2);
  CHECK(r.basis[0].empty());
  CHECK(r.basis[1] == Word::parse(p.gens, "t"));
  // right multiplication by t swaps the basis: [[0,1],[1,0]]
  REQUIRE(r.matrices.size() == 1);
  CHECK(r.matrices[0][0] == SparseVec::unit(1));
  CHECK(r.matrices[0][1] == SparseVec::unit(0));
  CHECK(verify_result(r, p).ok);
}

TEST_CASE("g4 dimension is 24 at the group and random specializations") {
  Presentation g4 = catalogue("G4", data_dir());
  EnumerationResult group = enumerate(g4, g4.group_specialization());
  CHECK(group.dimension == 24);
  for (std::uint64_t seed : {11, 12, 13, 14, 15}) {
    EnumerationResult r = enumerate_random(g4, seed);
    CHECK(r.dimension == 24);  // specialization independence
  }
}

TEST_CASE("verify_result accepts honest output and rejects perturbations") {
  Presentation g4 = catalogue("G4", data_dir());
  EnumerationResult r = enumerate_random(g4, 5);
  REQUIRE(r.dimension == 24);
  CHECK(verify_result(r, g4).ok);

  EnumerationResult bad = r;
  bad.matrices[0][3].entries[0].second += 1;
  CHECK_FALSE(verify_result(bad, g4).ok);

  EnumerationResult bad2 = r;
  bad2.matrices[1][0] = SparseVec::unit(0);
  CHECK_FALSE(verify_result(bad2, g4).ok);
}

TEST_CASE("eval_word basics") {
  Presentation g4 = catalogue("G4", data_dir());
  EnumerationResult r = enumerate_random(g4, 6);
  CHECK(mat_is_identity(eval_word(r, Word())));
  // inverses via the annihilating polynomial
  Word w = Word::parse(g4.gens, "s1 s2^-1 s1^-1 s2");
  Mat m = eval_word(r, w);
  Mat minv = eval_word(r, w.inverse());
  CHECK(mat_is_identity(mat_mul(m, minv)));
}

TEST_CASE("word coordinates agree with the full matrix product") {
  // cross-validates the vector-chase inverse (annihilating polynomial)
  // against the matrix inverse path
  Presentation g4 = catalogue("G4", data_dir());
  EnumerationResult r = enumerate_random(g4, 23);
  SplitMix64 rng(23);
  for (int iter = 0; iter < 20; ++iter) {
    Word w;
    int n = 1 + static_cast<int>(rng.next() % 5);
    for (int i = 0; i < n; ++i) {
      int e = static_cast<int>(rng.next() % 5) - 2;
      w.push(static_cast<int>(rng.next() % 2), e);
    }
    CHECK(word_coordinates(r, w) == eval_word(r, w)[0]);
  }
}

TEST_CASE("left/right consistency of the action tables") {
  Presentation g4 = catalogue("G4", data_dir());
  EnumerationResult r = enumerate_random(g4, 7);
  SplitMix64 rng(42);
  for (int iter = 0; iter < 40; ++iter) {
    int b = static_cast<int>(rng.next() % r.dimension);
    int g = static_cast<int>(rng.next() % 2);
    int h = static_cast<int>(rng.next() % 2);
    // coordinates of (basis_b * g) * h, two ways
    SparseVec via_rows = apply_letter(r, apply_letter(r, SparseVec::unit(b), g, 1), h, 1);
    Word direct = r.basis[b] * Word::single(g, 1) * Word::single(h, 1);
    SparseVec via_chase = word_coordinates(r, direct);
    CHECK(via_rows == via_chase);
  }
}

TEST_CASE("dimensions of the other catalogue entries") {
  Presentation g12 = catalogue("G12", data_dir());
  // derived oracle: coset enumeration of the quotient group
  CHECK(enumerate(g12, g12.group_specialization()).dimension == 48);

  Presentation gd3 = catalogue("Gd12(3)", data_dir());
  Presentation gd2 = catalogue("Gd12(2)", data_dir());
  Presentation para = catalogue("G26-parabolic-s2t", data_dir());
  // dimension must not depend on the specialization point
  for (std::uint64_t seed : {3, 4, 5, 6, 7}) {
    CHECK(enumerate_random(g12, seed).dimension == 48);
    CHECK(enumerate_random(gd3, seed).dimension == 18);
    CHECK(enumerate_random(gd2, seed).dimension == 8);
    CHECK(enumerate_random(para, seed).dimension == 18);
  }
  EnumerationResult pr = enumerate_random(para, 3);
  CHECK(verify_result(pr, para).ok);

  // higher-order generator windows: dimension 2 d^2 continues to hold
  EnumerationResult d4 = enumerate_random(catalogue("Gd12(4)", data_dir()), 3);
  CHECK(d4.dimension == 32);
  EnumerationResult d5 = enumerate_random(catalogue("Gd12(5)", data_dir()), 3);
  CHECK(d5.dimension == 50);
}

TEST_CASE("ariki-koike relations hold as matrix identities") {
  // with u = s t s: t u = u t and u s = beta s t + alpha u
  Presentation gd3 = catalogue("Gd12(3)", data_dir());
  EnumerationResult r = enumerate_random(gd3, 9);
  REQUIRE(r.dimension == 18);
  Specialization s = random_specialization(gd3.ring, 9);
  Rational alpha = s.value(gd3.ring->index("alpha"));
  Rational beta = s.value(gd3.ring->index("beta"));
  Mat u = eval_word(r, Word::parse(gd3.gens, "s t s"));
  Mat tm = eval_word(r, Word::parse(gd3.gens, "t"));
  Mat sm = eval_word(r, Word::parse(gd3.gens, "s"));
  CHECK(mat_equal(mat_mul(tm, u), mat_mul(u, tm)));
  Mat lhs = mat_mul(u, sm);
  Mat rhs = mat_add(mat_scale(mat_mul(sm, tm), beta), mat_scale(u, alpha));
  CHECK(mat_equal(lhs, rhs));
}

TEST_CASE("determinism: same seed, bit-identical result") {
  Presentation para = catalogue("G26-parabolic-s2t", data_dir());
  EnumerationResult a = enumerate_random(para, 21);
  EnumerationResult b = enumerate_random(para, 21);
  CHECK(result_to_text(a) == result_to_text(b));
  EnumerationResult c = enumerate_random(para, 22);
  CHECK(result_to_text(a) != result_to_text(c));
}

TEST_CASE("budget aborts carry the live dimension") {
  Presentation g4 = catalogue("G4", data_dir());
  EnumerationOptions opts;
  opts.max_dim = 5;
  CHECK_THROWS_AS(enumerate(g4, g4.group_specialization(), opts), BudgetExceeded);
  try {
    enumerate(g4, g4.group_specialization(), opts);
  } catch (const BudgetExceeded& e) {
    CHECK(e.live_dimension > 5);
  }
  EnumerationOptions tight;
  tight.max_len = 2;
  CHECK_THROWS_AS(enumerate(g4, g4.group_specialization(), tight), BudgetExceeded);
}

TEST_CASE("0-Hecke entries are rejected by the enumerator") {
  Presentation nil = catalogue("G12-nil", data_dir());
  Specialization empty(nil.ring, {});
  CHECK_THROWS_AS(enumerate(nil, empty), Error);
}

TEST_CASE("checkpoint and resume reproduce the run bit-exactly") {
  Presentation para = catalogue("G26-parabolic-s2t", data_dir());
  Specialization s = random_specialization(para.ring, 33);
  EnumerationResult direct = enumerate(para, s);

  std::string path =
      (std::filesystem::temp_directory_path() / "genhecke_ckpt_test").string();
  std::remove(path.c_str());
  EnumerationOptions opts;
  opts.checkpoint_path = path;
  opts.checkpoint_every = 16;  // several snapshots during the run
  EnumerationResult with_ckpt = enumerate(para, s, opts);
  CHECK(result_to_text(with_ckpt) == result_to_text(direct));

  // the file on disk is a mid-run snapshot; resuming must land on the same
  // final result
  REQUIRE(std::filesystem::exists(path));
  EnumerationResult resumed = enumerate_resume(para, path);
  CHECK(result_to_text(resumed) == result_to_text(direct));
  std::remove(path.c_str());
}

TEST_CASE("resume rejects foreign checkpoints") {
  Presentation para = catalogue("G26-parabolic-s2t", data_dir());
  Specialization s = random_specialization(para.ring, 34);
  std::string path =
      (std::filesystem::temp_directory_path() / "genhecke_ckpt_foreign").string();
  EnumerationOptions opts;
  opts.checkpoint_path = path;
  opts.checkpoint_every = 16;
  enumerate(para, s, opts);
  REQUIRE(std::filesystem::exists(path));
  Presentation g4 = catalogue("G4", data_dir());
  CHECK_THROWS_AS(enumerate_resume(g4, path), Error);
  CHECK_THROWS_AS(enumerate_resume(para, path + ".missing"), Error);
  std::remove(path.c_str());
}

TEST_CASE("rank certificates") {
  // rows over dimension 3
  std::vector<SparseVec> rows;
  rows.push_back(SparseVec{{{0, 1}, {1, 2}}});
  rows.push_back(SparseVec{{{0, 1}, {1, 2}}});  // duplicate
  rows.push_back(SparseVec{{{1, 1}}});
  rows.push_back(SparseVec{{{2, 5}}});
  RankCertificate cert = row_rank(rows, 3);
  CHECK(cert.full);
  CHECK(cert.rank == 3);
  CHECK(cert.first_dependent == 1);
  CHECK(cert.independent == std::vector<int>{0, 2, 3});

  rows.pop_back();
  RankCertificate deficient = row_rank(rows, 3);
  CHECK_FALSE(deficient.full);
  CHECK(deficient.rank == 2);
  CHECK(deficient.method == "exact");
}
