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

#ifndef FACE_AGGREGATE_H_
#define FACE_AGGREGATE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "face/spectrum.h"

namespace face {

// Many spectra averaged on one grid over [0, 0.5].
struct AggregateSpectrum {
  std::vector<double> grid;
  std::vector<double> mean_mags;
  std::optional<std::vector<double>> smoothed;
  std::size_t n = 0;
  // Per-bin bootstrap interval of the mean, when requested.
  std::optional<std::vector<std::pair<double, double>>> band;
};

struct MeanSpectrumOptions {
  std::size_t n_c = kAutoLength;  // auto: longest input spectrum
  bool absolute = false;          // average |X| instead of X
  // Per-bin bootstrap band; 0 disables it.
  std::size_t band_bootstrap = 0;
  double band_level = 0.95;
  std::uint64_t seed = 32;
};

// Inputs are summed in source_id order so the result does not depend on the
// order of `spectra`. Throws InvalidArgument on an empty list.
AggregateSpectrum mean_spectrum(std::span<const Spectrum> spectra,
                                const MeanSpectrumOptions& options = {});

// Local linear regression with tricube weights over the nearest
// ceil(bandwidth * N_C) grid points (at least 4). Fills `smoothed`.
// Throws InvalidArgument for bandwidth outside (0, 1] or N_C < 5.
AggregateSpectrum smooth(AggregateSpectrum a, double bandwidth);

// The smoother on its own, for arbitrary (x, y) samples with ascending x.
std::vector<double> local_linear_smooth(std::span<const double> x,
                                        std::span<const double> y,
                                        double bandwidth);

struct Extremum {
  double frequency = 0.0;
  double magnitude = 0.0;
  double prominence = 0.0;
};

struct ExtremaReport {
  std::vector<Extremum> peaks;
  std::vector<Extremum> troughs;
  std::vector<double> periods;  // tokens, one per peak
};

// Strict interior local maxima and minima of the smoothed curve with
// topographic prominence >= min_prominence, ascending by frequency.
// An empty min_prominence selects 1% of the curve's range.
// Throws InvalidArgument when `smoothed` is absent.
ExtremaReport find_extrema(const AggregateSpectrum& a,
                           std::optional<double> min_prominence = std::nullopt);

// Same search on a bare curve.
ExtremaReport find_extrema(std::span<const double> grid,
                           std::span<const double> curve,
                           std::optional<double> min_prominence = std::nullopt);

// Token period of a frequency in cycles per token: 1 / freq.
double period_of(double freq);

// sum(w_i v_i) / sum(w_i) with non-negative weights.
double weighted_mean(std::span<const double> values, std::span<const double> weights);

}  // namespace face

#endif  // FACE_AGGREGATE_H_
