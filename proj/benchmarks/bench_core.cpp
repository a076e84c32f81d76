#include <benchmark/benchmark.h>

#include "ternac/coboundary.hpp"
#include "ternac/identity.hpp"
#include "ternac/nogo.hpp"
#include "ternac/registry.hpp"
#include "ternac/rewrite.hpp"

using namespace ternac;

static void BM_MatrixizeWeak(benchmark::State& state) {
  const Algebra a = totally_assoc_2d();
  const auto p = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(matrixize(a, Theory::TernaryWeak, p));
}
BENCHMARK(BM_MatrixizeWeak)->DenseRange(1, 3);

static void BM_RankWeak(benchmark::State& state) {
  const ExactMatrix m = matrixize(totally_assoc_2d(), Theory::TernaryWeak, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankWeak)->DenseRange(1, 3);

static void BM_VerifyComplexWeak(benchmark::State& state) {
  const Algebra a = totally_assoc_2d();
  for (auto _ : state) benchmark::DoNotOptimize(verify_complex(a, Theory::TernaryWeak, 3));
}
BENCHMARK(BM_VerifyComplexWeak)->Unit(benchmark::kMillisecond);

static void BM_CheckPartial(benchmark::State& state) {
  const Algebra a = zero_algebra(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(check_identity(a, IdentityKind::PartiallyAssociative));
}
BENCHMARK(BM_CheckPartial)->DenseRange(2, 4);

static void BM_NormalizeWeakComposition(benchmark::State& state) {
  const auto composed = compose(delta_template(Theory::TernaryWeak, 3), delta_template(Theory::TernaryWeak, 2));
  for (auto _ : state) benchmark::DoNotOptimize(normalize(composed.form, RuleSet::WeakTernary));
}
BENCHMARK(BM_NormalizeWeakComposition);

static void BM_DeriveConstraints(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(derive_constraints(NogoCase::TernaryPartial));
}
BENCHMARK(BM_DeriveConstraints);

BENCHMARK_MAIN();
