// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "hgzeta/chargauss.hpp"
#include "hgzeta/count.hpp"
#include "hgzeta/hgff.hpp"
#include "hgzeta/padic.hpp"
#include "hgzeta/zetafac.hpp"

using namespace hgzeta;

namespace {

fam::FamilySpec dwork(int n, std::uint32_t p) {
  intlin::IntMatrix a(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) a(i, i) = n + 1;
  return fam::make_family(p, 1, a, std::vector<ff::Elem>(static_cast<std::size_t>(n) + 1, 1));
}

}  // namespace

static void BM_GaussTable(benchmark::State& state) {
  const auto r = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    cg::Tower tower(7, 1);
    benchmark::DoNotOptimize(tower.level(r)->gauss(1));
  }
  state.SetLabel("q=7^" + std::to_string(r));
}
BENCHMARK(BM_GaussTable)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_BruteCount(benchmark::State& state) {
  auto spec = dwork(2, 7);
  const auto r = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count::brute_count(spec, 1, r).total);
}
BENCHMARK(BM_BruteCount)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_Tghf(benchmark::State& state) {
  cg::Tower tower(13, 1);
  auto L = tower.level(static_cast<unsigned>(state.range(0)));
  hg::ParamList params = hg::lift(hg::ParamList{{3, 6, 9}, {0, 0, 0}, 1}, *L);
  for (auto _ : state) benchmark::DoNotOptimize(hg::tghf(*L, params, 2));
}
BENCHMARK(BM_Tghf)->DenseRange(1, 2)->Unit(benchmark::kMicrosecond);

static void BM_PredictedCount(benchmark::State& state) {
  auto spec = dwork(3, 13);
  cg::Tower tower(13, 1);
  auto an = zeta::analyze(spec, 2, *tower.level(1));
  tower.level(2);
  for (auto _ : state) benchmark::DoNotOptimize(zeta::predicted_count(an, tower, 2, tenth_power(10)).count);
}
BENCHMARK(BM_PredictedCount)->Unit(benchmark::kMillisecond);

static void BM_UnitRoot(benchmark::State& state) {
  auto spec = dwork(2, 7);
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(padic::unit_root(spec, 1, m).value);
}
BENCHMARK(BM_UnitRoot)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
