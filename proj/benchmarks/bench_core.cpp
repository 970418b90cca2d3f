// Copyright 2026 The lsa Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "lsa/suites.hpp"

namespace {

using namespace lsa;

void BM_FieldScalarMul(benchmark::State& state) {
  Rng rng(3);
  FieldScalar a = rng.nonzero_scalar(), b = rng.nonzero_scalar();
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_FieldScalarMul);

void BM_FieldScalarInv(benchmark::State& state) {
  FieldScalar a = FieldScalar(3) + FieldScalar::sqrt2() + FieldScalar::i();
  for (auto _ : state) benchmark::DoNotOptimize(a.inv());
}
BENCHMARK(BM_FieldScalarInv);

void BM_GrassmannMul(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  GElem f(n), g(n);
  for (Mono m = 0; m < (Mono(1) << n); ++m) {
    if (m % 3 == 0) f.add_term(m, FieldScalar(static_cast<long>(m % 5) + 1));
    if (m % 5 == 1) g.add_term(m, FieldScalar(static_cast<long>(m % 7) - 3));
  }
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_GrassmannMul)->Arg(4)->Arg(6)->Arg(8);

void BM_PoissonBracket(benchmark::State& state) {
  GElem f = GElem::product(6, {1, 2, 4}) + GElem::product(6, {3, 5, 6});
  GElem g = GElem::product(6, {1, 4}) + GElem::product(6, {2, 6});
  for (auto _ : state) benchmark::DoNotOptimize(poisson(f, g));
}
BENCHMARK(BM_PoissonBracket);

void BM_Build(benchmark::State& state, FamilySpec spec) {
  for (auto _ : state) benchmark::DoNotOptimize(build(spec));
}
BENCHMARK_CAPTURE(BM_Build, sl_2_3, FamilySpec{FamilyTag::SL, {2, 3}})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Build, W_3, FamilySpec{FamilyTag::W, {3}})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Build, H_6, FamilySpec{FamilyTag::H, {6}})->Unit(benchmark::kMillisecond);

void BM_StructureCheck(benchmark::State& state, FamilySpec spec) {
  Family f = build(spec);
  for (auto _ : state) benchmark::DoNotOptimize(structure_check(f.g));
}
BENCHMARK_CAPTURE(BM_StructureCheck, sl_2_3, FamilySpec{FamilyTag::SL, {2, 3}})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_StructureCheck, W_3, FamilySpec{FamilyTag::W, {3}})->Unit(benchmark::kMillisecond);

void BM_RootDecomposition(benchmark::State& state, FamilySpec spec) {
  Family f = build(spec);
  for (auto _ : state) benchmark::DoNotOptimize(root_decomposition(f.g));
}
BENCHMARK_CAPTURE(BM_RootDecomposition, sl_2_3, FamilySpec{FamilyTag::SL, {2, 3}})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RootDecomposition, H_5, FamilySpec{FamilyTag::H, {5}})->Unit(benchmark::kMillisecond);

void BM_ExpAd(benchmark::State& state) {
  Family f = build(FamilyTag::SL, {2, 3});
  Vec x = f.mat->coords(elementary(5, 0, 1));
  for (auto _ : state) benchmark::DoNotOptimize(exp_ad(f.g, x));
}
BENCHMARK(BM_ExpAd)->Unit(benchmark::kMillisecond);

void BM_IsAutomorphism(benchmark::State& state) {
  Family f = build(FamilyTag::W, {3});
  AlgebraMap d = delta_lambda(f.g, FieldScalar(2));
  for (auto _ : state) benchmark::DoNotOptimize(is_automorphism(f.g, d));
}
BENCHMARK(BM_IsAutomorphism)->Unit(benchmark::kMillisecond);

void BM_LoopDeterminant(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  LoopMap m = loop_identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      m(i, j) = i == j ? LaurentScalar::t(static_cast<long>(i % 3) - 1) : LaurentScalar(static_cast<long>(i + j));
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = LaurentScalar(1);
  for (auto _ : state) benchmark::DoNotOptimize(loop_determinant(m));
}
BENCHMARK(BM_LoopDeterminant)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_TwistedFactorization(benchmark::State& state) {
  Family f = build(FamilyTag::H, {6});
  for (auto _ : state) benchmark::DoNotOptimize(remark_factorization_check(f, LaurentScalar::t(1)));
}
BENCHMARK(BM_TwistedFactorization)->Unit(benchmark::kMillisecond)->Iterations(2);

}  // namespace

BENCHMARK_MAIN();
