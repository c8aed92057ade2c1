#include <benchmark/benchmark.h>

#include "gentle/fixtures.hpp"
#include "gentle/jordan.hpp"
#include "gentle/quiver_io.hpp"
#include "gentle/recoverability.hpp"

using namespace gentle;

static void BM_ParseValidate(benchmark::State& state) {
  const std::string& text = fixture_text("gentle8");
  for (auto _ : state) {
    QuiverSpec spec = parse_quiver_spec(text);
    benchmark::DoNotOptimize(GentleQuiver::validate_gentle(spec));
  }
}
BENCHMARK(BM_ParseValidate);

static void BM_AlgebraBasis(benchmark::State& state) {
  GentleQuiver q = fixture_quiver("gentle8");
  for (auto _ : state) benchmark::DoNotOptimize(algebra_basis(q));
}
BENCHMARK(BM_AlgebraBasis);

static void BM_StringsThrough(benchmark::State& state) {
  GentleQuiver q = fixture_quiver("stringex10");
  for (auto _ : state) benchmark::DoNotOptimize(strings_through(q, 3));
}
BENCHMARK(BM_StringsThrough);

static void BM_HomSpace(benchmark::State& state) {
  GentleQuiver q = fixture_quiver("morphex");
  Fq f(3);
  Representation x = parse_module_expr(q, f, "M(e_1) + M(a) + M(c)^2");
  Representation y = parse_module_expr(q, f, "M(a) + M(b)");
  for (auto _ : state) benchmark::DoNotOptimize(hom_space(x, y));
}
BENCHMARK(BM_HomSpace);

static void BM_OracleSmall(benchmark::State& state) {
  GentleQuiver q = fixture_quiver("firstgentle");
  Fq f(2);
  Representation x = parse_module_expr(q, f, "M(a) + M(e_2) + M(b)");
  OracleOptions opts;
  opts.threads = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(genjf_oracle(x, opts));
}
BENCHMARK(BM_OracleSmall)->Arg(1)->Arg(4);

static void BM_Decide(benchmark::State& state) {
  GentleQuiver q = fixture_quiver("jrex1");
  for (auto _ : state)
    for (int m = 0; m < q.vertex_count(); ++m) benchmark::DoNotOptimize(decide(q, m));
}
BENCHMARK(BM_Decide);

BENCHMARK_MAIN();
