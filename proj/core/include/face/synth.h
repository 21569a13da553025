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

#ifndef FACE_SYNTH_H_
#define FACE_SYNTH_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "face/entropy_io.h"

namespace face {

struct Tone {
  double frequency = 0.125;  // cycles per token, in (0, 0.5]
  double amplitude = 1.0;
  double phase = 0.0;        // radians
};

// Seeded generator of cross-entropy-like series:
//   x_t = mean_level + sum_k amp_k cos(2 pi f_k t + phase_k) + e_t,
//   e_t = ar_coeff * e_{t-1} + noise_std * z_t,
// clamped at 0 from below.
struct SynthSpec {
  std::size_t length = 256;
  double mean_level = 3.0;
  std::vector<Tone> tones;
  double noise_std = 1.0;
  double ar_coeff = 0.0;
  std::uint64_t seed = 32;
  Source source = Source::kModel;
  std::string id_prefix = "synth";
  std::string model_name;  // empty: no model field
};

// Throws InvalidArgument for an invalid spec.
void validate(const SynthSpec& spec);

// Record `index` depends only on (spec, index).
EntropySequence generate_one(const SynthSpec& spec, std::size_t index);

Corpus generate(const SynthSpec& spec, std::size_t count);

}  // namespace face

#endif  // FACE_SYNTH_H_
