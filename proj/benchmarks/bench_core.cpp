#include <benchmark/benchmark.h>

#include "genhecke/enumerate.hpp"
#include "genhecke/presentation.hpp"

using namespace genhecke;

static void bm_laurent_mul(benchmark::State& state) {
  auto ring = make_ring({"a", "b", "c", "d", "e"}, {"c", "e"});
  LaurentPoly p = LaurentPoly::parse(ring, "2*a*c^-1 + b - 3*d*e + c^2");
  LaurentPoly q = LaurentPoly::parse(ring, "a^2 - b*c + e^-1 + 5");
  for (auto _ : state) {
    LaurentPoly r = p * q;
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(bm_laurent_mul);

static void bm_window_reduce_t9(benchmark::State& state) {
  Presentation p = catalogue("G26", default_data_dir());
  auto policy = p.window_policy();
  Word w;
  w.push(p.gens.index("s1"), 5);
  w.push(p.gens.index("t"), 9);
  w.push(p.gens.index("s2"), -7);
  LaurentPoly one = LaurentPoly::constant(p.ring, 1);
  for (auto _ : state) {
    auto r = window_reduce(w, one, policy);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(bm_window_reduce_t9);

static void bm_enumerate_g4_group(benchmark::State& state) {
  Presentation p = catalogue("G4", default_data_dir());
  Specialization s = p.group_specialization();
  for (auto _ : state) {
    auto r = enumerate(p, s);
    benchmark::DoNotOptimize(r.dimension);
  }
}
BENCHMARK(bm_enumerate_g4_group);

static void bm_enumerate_parabolic_random(benchmark::State& state) {
  Presentation p = catalogue("G26-parabolic-s2t", default_data_dir());
  for (auto _ : state) {
    auto r = enumerate_random(p, 5);
    benchmark::DoNotOptimize(r.dimension);
  }
}
BENCHMARK(bm_enumerate_parabolic_random);

static void bm_enumerate_g26_group(benchmark::State& state) {
  Presentation p = catalogue("G26", default_data_dir());
  Specialization s = p.group_specialization();
  for (auto _ : state) {
    auto r = enumerate(p, s);
    benchmark::DoNotOptimize(r.dimension);
  }
}
BENCHMARK(bm_enumerate_g26_group)->Unit(benchmark::kMillisecond);

static void bm_word_coordinates_g4(benchmark::State& state) {
  Presentation p = catalogue("G4", default_data_dir());
  EnumerationResult r = enumerate_random(p, 5);
  Word w = Word::parse(p.gens, "s1 s2 s1^-1 s2 s1 s2^-1");
  for (auto _ : state) {
    auto v = word_coordinates(r, w);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(bm_word_coordinates_g4);

BENCHMARK_MAIN();
