#include <benchmark/benchmark.h>

#include "entatlas/atlas.hpp"
#include "entatlas/classifier.hpp"
#include "entatlas/evaluator.hpp"
#include "entatlas/invariants.hpp"
#include "entatlas/orbits.hpp"

using namespace entatlas;

namespace {

// Two covariants of a dense state, both multihomogeneous.
struct Operands {
  Polynomial lhs, rhs;
  Operands() {
    Evaluator ev(random_state(1));
    lhs = ev.eval(CovariantId::parse("B_2200"));
    rhs = ev.eval(CovariantId::parse("C_3111"));
  }
};

void BM_TransvectLiteral(benchmark::State& st) {
  Operands op;
  for (auto _ : st) benchmark::DoNotOptimize(transvect(op.lhs, op.rhs, MultiIndex{1, 1, 0, 0}));
}
BENCHMARK(BM_TransvectLiteral);

void BM_TransvectFast(benchmark::State& st) {
  Operands op;
  for (auto _ : st) benchmark::DoNotOptimize(transvect_fast(op.lhs, op.rhs, MultiIndex{1, 1, 0, 0}));
}
BENCHMARK(BM_TransvectFast);

void BM_FullCatalog(benchmark::State& st) {
  State s = random_state(2);
  auto ids = Catalog::builtin().ids();
  for (auto _ : st) {
    Evaluator ev(s);
    benchmark::DoNotOptimize(ev.signature(ids));
  }
}
BENCHMARK(BM_FullCatalog)->Unit(benchmark::kMillisecond);

void BM_FullCatalogFloat(benchmark::State& st) {
  State s = random_state(2);
  auto ids = Catalog::builtin().ids();
  for (auto _ : st) {
    FloatEvaluator ev(s);
    benchmark::DoNotOptimize(ev.signature(ids));
  }
}
BENCHMARK(BM_FullCatalogFloat)->Unit(benchmark::kMillisecond);

void BM_Generators(benchmark::State& st) {
  State s = random_state(3);
  for (auto _ : st) benchmark::DoNotOptimize(generators<Scalar>(s));
}
BENCHMARK(BM_Generators);

void BM_Hyperdeterminant(benchmark::State& st) {
  State s = random_state(3);
  for (auto _ : st) benchmark::DoNotOptimize(hyperdet_Delta(s));
}
BENCHMARK(BM_Hyperdeterminant);

void BM_ClassifyNullcone(benchmark::State& st) {
  State s = apply_local(random_sl2_tuple(9), find_orbit(65511)->normal_form);
  for (auto _ : st) benchmark::DoNotOptimize(classify_secant3_extended(s));
}
BENCHMARK(BM_ClassifyNullcone)->Unit(benchmark::kMicrosecond);

void BM_ClassifySecant(benchmark::State& st) {
  State s = apply_local(random_sl2_tuple(9), find_orbit(65513)->normal_form);
  for (auto _ : st) benchmark::DoNotOptimize(classify_secant3_extended(s));
}
BENCHMARK(BM_ClassifySecant)->Unit(benchmark::kMicrosecond);

void BM_EnumerateNullcone(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_forms(nullcone_filter));
}
BENCHMARK(BM_EnumerateNullcone)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace
BENCHMARK_MAIN();
