#include <benchmark/benchmark.h>

#include <random>

#include "sqmv/models/catalog.hpp"
#include "sqmv/models/classify.hpp"
#include "sqmv/models/standard.hpp"
#include "sqmv/proofkit/checker.hpp"
#include "sqmv/proofkit/registry.hpp"
#include "sqmv/proofkit/script.hpp"
#include "sqmv/semantics/check.hpp"
#include "sqmv/semantics/evaluate.hpp"
#include "sqmv/syntax/parse.hpp"

using namespace sqmv;
using syntax::Signature;

namespace {
const std::string kFixtures = SQMV_FIXTURE_DIR;

const char* kJoin = "(x \\/ y) \\/ z";
}  // namespace

static void Evaluate(benchmark::State& st) {
  auto m = models::build_model(st.range(0) ? "disk@w" : "square@w");
  auto t = syntax::parse(kJoin, Signature::W);
  std::mt19937_64 rng(1);
  semantics::Valuation v;
  for (const char* x : {"x", "y", "z"}) v[x] = semantics::random_element(m, rng, 60);
  for (auto _ : st) benchmark::DoNotOptimize(semantics::evaluate(t, m, v));
}
BENCHMARK(Evaluate)->Arg(0)->Arg(1);

static void CheckEquationRandom(benchmark::State& st) {
  auto m = models::square();
  auto l = syntax::parse("x \\/ y", Signature::MV), r = syntax::parse("y \\/ x", Signature::MV);
  for (auto _ : st)
    benchmark::DoNotOptimize(semantics::check_equation(l, r, m, semantics::Strategy::random(st.range(0), 7)));
}
BENCHMARK(CheckEquationRandom)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void CheckEquationExhaustive(benchmark::State& st) {
  auto m = models::build_model("product:(product:chain:1,flatten:chain:1:0),(product:chain:1,flatten:chain:1:0)");
  // Valid, so all 81^3 valuations run (clamped (+) is not associative).
  auto l = syntax::parse("(x (+) y) (+) z", Signature::MV), r = syntax::parse("(y (+) x) (+) z", Signature::MV);
  for (auto _ : st) benchmark::DoNotOptimize(semantics::check_equation(l, r, m, semantics::Strategy::exhaustive()));
}
BENCHMARK(CheckEquationExhaustive)->Unit(benchmark::kMillisecond);

static void Classify(benchmark::State& st) {
  auto m = models::build_model(st.range(0) ? "ex32-grid" : "chain:4");
  for (auto _ : st) benchmark::DoNotOptimize(models::classify(m));
}
BENCHMARK(Classify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void CheckProofLongest(benchmark::State& st) {
  auto reg = proofkit::load_registry(kFixtures);
  auto s = proofkit::load_script(kFixtures + "/prop4_3_11.sqlp");
  for (auto _ : st) benchmark::DoNotOptimize(proofkit::check_proof(s, reg));
}
BENCHMARK(CheckProofLongest)->Unit(benchmark::kMicrosecond);

static void LoadRegistry(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(proofkit::load_registry(kFixtures));
}
BENCHMARK(LoadRegistry)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
