// Copyright 2026 The FACE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <vector>

#include "face/rng.h"
#include "face/stats.h"

namespace {

void BM_AdfTest(benchmark::State& state) {
  face::Rng rng(3);
  std::vector<double> x(static_cast<std::size_t>(state.range(0)));
  for (double& v : x) v = rng.normal();
  for (auto _ : state) benchmark::DoNotOptimize(face::adf_test(x));
}
BENCHMARK(BM_AdfTest)->Arg(256)->Arg(1024)->Arg(4096);

void BM_BootstrapCi(benchmark::State& state) {
  face::Rng rng(4);
  std::vector<double> x(static_cast<std::size_t>(state.range(0)));
  for (double& v : x) v = rng.uniform01();
  for (auto _ : state) benchmark::DoNotOptimize(face::bootstrap_ci(x, 1000, 0.95, 5));
}
BENCHMARK(BM_BootstrapCi)->Arg(100)->Arg(1000);

}  // namespace
