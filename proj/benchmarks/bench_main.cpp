// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <cstddef>

#include "vardecomp/autocorrelation.hpp"
#include "vardecomp/contourlet.hpp"
#include "vardecomp/phantom.hpp"
#include "vardecomp/shrinkage.hpp"
#include "vardecomp/tv.hpp"
#include "vardecomp/wavelet.hpp"

namespace {

using vardecomp::Image;

const Image& phantom() {
  static const Image f = vardecomp::synth_phantom(vardecomp::standard_phantom_spec()).f0;
  return f;
}

Image crop_to(std::int64_t side) {
  const auto n = static_cast<std::size_t>(side);
  return vardecomp::crop(phantom(), 0, 0, n, n);
}

void BM_ProjectG(benchmark::State& state) {
  const Image g = crop_to(state.range(0));
  vardecomp::ProjectorConfig cfg;
  cfg.n_iter = static_cast<int>(state.range(1));
  cfg.tol.reset();
  for (auto _ : state) benchmark::DoNotOptimize(vardecomp::project_G(g, 10.0, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(1) * static_cast<std::int64_t>(g.size()));
}
BENCHMARK(BM_ProjectG)->Args({64, 20})->Args({256, 20})->Args({256, 200})->Unit(benchmark::kMillisecond);

void BM_Dwt2RoundTrip(benchmark::State& state) {
  const Image f = crop_to(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(vardecomp::dwt2_inverse(vardecomp::dwt2_forward(f, 4)));
}
BENCHMARK(BM_Dwt2RoundTrip)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_ContourletRoundTrip(benchmark::State& state) {
  const Image f = crop_to(state.range(0));
  const vardecomp::ContourletTransform t(f.width(), f.height());
  for (auto _ : state) benchmark::DoNotOptimize(t.inverse(t.forward(f)));
}
BENCHMARK(BM_ContourletRoundTrip)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_ContourletShrink(benchmark::State& state) {
  const Image& f = phantom();
  const vardecomp::ContourletTransform t(f.width(), f.height());
  for (auto _ : state) benchmark::DoNotOptimize(vardecomp::cst(f, 47.0, t));
}
BENCHMARK(BM_ContourletShrink)->Unit(benchmark::kMillisecond);

void BM_Autocorrelation(benchmark::State& state) {
  const Image f = crop_to(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(vardecomp::autocorrelation(f));
}
BENCHMARK(BM_Autocorrelation)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
