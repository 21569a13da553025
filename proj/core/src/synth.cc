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

#include "face/synth.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "face/error.h"
#include "face/rng.h"

namespace face {

void validate(const SynthSpec& spec) {
  if (spec.length < 8) throw InvalidArgument("synth length must be at least 8");
  if (!(spec.mean_level > 0.0)) throw InvalidArgument("mean_level must be positive");
  if (!(spec.noise_std >= 0.0)) throw InvalidArgument("noise_std must be non-negative");
  if (!(spec.ar_coeff >= 0.0 && spec.ar_coeff < 1.0)) {
    throw InvalidArgument("ar_coeff must lie in [0, 1)");
  }
  for (const auto& t : spec.tones) {
    if (!(t.frequency > 0.0 && t.frequency <= 0.5)) {
      throw InvalidArgument("tone frequency must lie in (0, 0.5]");
    }
    if (!(t.amplitude >= 0.0)) throw InvalidArgument("tone amplitude must be non-negative");
    if (!std::isfinite(t.phase)) throw InvalidArgument("tone phase must be finite");
  }
}

EntropySequence generate_one(const SynthSpec& spec, std::size_t index) {
  validate(spec);
  Rng rng(derive_seed(spec.seed, index));

  EntropySequence rec;
  rec.id = spec.id_prefix + "-" + std::to_string(index);
  rec.source = spec.source;
  if (!spec.model_name.empty()) rec.model_name = spec.model_name;
  rec.prompt_id = "p" + std::to_string(index);
  rec.ce.resize(spec.length);

  // Start the AR(1) noise in its stationary distribution.
  double e = 0.0;
  if (spec.noise_std > 0.0) {
    e = spec.noise_std * rng.normal() /
        std::sqrt(1.0 - spec.ar_coeff * spec.ar_coeff);
  }
  for (std::size_t t = 0; t < spec.length; ++t) {
    if (t > 0 && spec.noise_std > 0.0) {
      e = spec.ar_coeff * e + spec.noise_std * rng.normal();
    }
    double v = spec.mean_level;
    for (const auto& tone : spec.tones) {
      v += tone.amplitude *
           std::cos(2.0 * std::numbers::pi * tone.frequency * static_cast<double>(t) +
                    tone.phase);
    }
    v += e;
    rec.ce[t] = v < kMinPositiveCrossEntropy ? 0.0 : std::min(v, kMaxCrossEntropy);
  }
  return rec;
}

Corpus generate(const SynthSpec& spec, std::size_t count) {
  validate(spec);
  if (count < 1) throw InvalidArgument("synth count must be at least 1");
  Corpus corpus;
  corpus.label = spec.id_prefix;
  corpus.records.reserve(count);
  for (std::size_t i = 0; i < count; ++i) corpus.records.push_back(generate_one(spec, i));
  return corpus;
}

}  // namespace face
