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

#include "face/metrics.h"
#include "face/synth.h"

namespace {

void BM_FaceScorePair(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  face::SynthSpec spec{.length = n, .tones = {{0.12, 1.0, 0.0}}};
  const auto a = face::dft_real(face::generate_one(spec, 0).ce);
  const auto b = face::dft_real(face::generate_one(spec, 1).ce);
  for (auto _ : state) benchmark::DoNotOptimize(face::face_score_pair(a, b));
}
BENCHMARK(BM_FaceScorePair)->Arg(256)->Arg(1024)->Arg(4096);

void BM_FaceScoreCorpus(benchmark::State& state) {
  face::SynthSpec h{.length = 512, .seed = 1, .source = face::Source::kHuman, .id_prefix = "h"};
  face::SynthSpec m{.length = 512, .seed = 2, .id_prefix = "m"};
  const auto hc = face::generate(h, static_cast<std::size_t>(state.range(0)));
  const auto mc = face::generate(m, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(face::face_score_corpus(hc, mc));
}
BENCHMARK(BM_FaceScoreCorpus)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace
