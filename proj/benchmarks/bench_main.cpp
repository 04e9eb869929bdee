// Copyright 2026 The metaframe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "metaframe/frames.hpp"
#include "metaframe/spaces.hpp"
#include "metaframe/tfr.hpp"

namespace {

using namespace metaframe;

TFGrid tf_of(std::size_t n) {
  const Grid1D g(n, 16.0);
  return {g, g.dual()};
}

void BM_WignerMetaplectic(benchmark::State &state) {
  const TFGrid tf = tf_of(static_cast<std::size_t>(state.range(0)));
  const WignerFactorization fac = tau_factorization(1.0 / 3.0);
  const Window f = Window::hermite(2);
  const Window g = Window::gaussian();
  for (auto _ : state) {
    benchmark::DoNotOptimize(wigner_metaplectic(f, g, fac, tf));
  }
}
BENCHMARK(BM_WignerMetaplectic)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_StftDirect(benchmark::State &state) {
  const TFGrid tf = tf_of(static_cast<std::size_t>(state.range(0)));
  const Window f = Window::hermite(2);
  const Window g = Window::gaussian();
  for (auto _ : state) {
    benchmark::DoNotOptimize(stft_direct(f, g, tf));
  }
}
BENCHMARK(BM_StftDirect)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_FrameBounds(benchmark::State &state) {
  const Grid1D grid(256, 16.0);
  const GaborSystem sys =
      build_system(Window::gaussian(), Lattice(1.0, 0.5, static_cast<double>(state.range(0))),
                   AtomKind::metaplectic(tau_factorization(0.5)), grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(frame_bounds(sys));
  }
  state.counters["atoms"] = static_cast<double>(sys.atom_count());
}
BENCHMARK(BM_FrameBounds)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_BuildSystem(benchmark::State &state) {
  const Grid1D grid(256, 16.0);
  const Lattice lattice(1.0, 0.5, 8.0);
  const AtomKind kind = AtomKind::metaplectic(tau_factorization(1.0 / 3.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_system(Window::gaussian(), lattice, kind, grid));
  }
}
BENCHMARK(BM_BuildSystem)->Unit(benchmark::kMillisecond);

void BM_ModulationNorm(benchmark::State &state) {
  const NormSpec spec{1.0, 2.0, Weight::polynomial(1.0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(modulation_norm(Window::hermite(1), Window::gaussian(), spec));
  }
}
BENCHMARK(BM_ModulationNorm)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
