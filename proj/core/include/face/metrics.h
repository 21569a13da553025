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

#ifndef FACE_METRICS_H_
#define FACE_METRICS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>

#include "face/entropy_io.h"
#include "face/spectrum.h"

namespace face {

// Spectral overlap: trapezoidal area under min(|a|, |b|) over the area under
// max(|a|, |b|). In [0, 1]. Throws UndefinedMetricError when both are zero.
double spectral_overlap(const AlignedSpectra& x);

// Spectrum angle mapper: arccos of the cosine similarity, in [0, pi].
// Throws UndefinedMetricError when either vector has zero norm.
double spectrum_angle(const AlignedSpectra& x);

// Sample Pearson correlation. Throws UndefinedMetricError on zero variance.
double pearson(const AlignedSpectra& x);
double pearson(std::span<const double> a, std::span<const double> b);

// Pearson correlation of average ranks. Throws UndefinedMetricError when
// either vector is entirely tied.
double spearman(const AlignedSpectra& x);
double spearman(std::span<const double> a, std::span<const double> b);

enum class Metric { kSo = 0, kCorr = 1, kSam = 2, kSpear = 3 };
inline constexpr std::array<Metric, 4> kAllMetrics = {
    Metric::kSo, Metric::kCorr, Metric::kSam, Metric::kSpear};
std::string_view to_string(Metric m);

// The four similarity values for one comparison. A metric that is undefined
// for the input is left empty.
struct FaceScores {
  std::optional<double> so;
  std::optional<double> corr;
  std::optional<double> sam;
  std::optional<double> spear;

  std::optional<double>& operator[](Metric m);
  const std::optional<double>& operator[](Metric m) const;
  bool operator==(const FaceScores&) const = default;
};

struct ScoreOptions {
  // Grid length; kAutoLength means the larger of the two spectra.
  std::size_t n_c = kAutoLength;
  bool drop_dc = false;
};

FaceScores face_score_aligned(const AlignedSpectra& x);
FaceScores face_score_pair(const Spectrum& s1, const Spectrum& s2,
                           const ScoreOptions& options = {});

enum class Pairing { kByPrompt, kByIndex, kRandomSeeded };
std::string_view to_string(Pairing p);
// Accepts "by_prompt", "by_index", "random" and "random_seeded".
Pairing parse_pairing(std::string_view text);

struct CorpusScoreOptions {
  Pairing pairing = Pairing::kByIndex;
  // kAutoLength means the longest spectrum across both corpora.
  std::size_t n_c = kAutoLength;
  bool drop_dc = false;
  std::uint64_t seed = 32;
  // Number of bootstrap resamples; 0 disables the intervals.
  std::size_t bootstrap_b = 1000;
  double ci_level = 0.95;
};

struct MetricSummary {
  std::optional<double> mean;
  std::size_t defined_count = 0;
  std::optional<std::pair<double, double>> ci;

  bool operator==(const MetricSummary&) const = default;
};

struct CorpusScore {
  std::array<MetricSummary, 4> metrics;  // indexed by Metric
  std::size_t n_pairs = 0;
  std::size_t n_c = 0;
  Pairing pairing = Pairing::kByIndex;
  std::vector<FaceScores> pair_scores;
  // (human index, model index) for every scored pair, in scoring order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  const MetricSummary& operator[](Metric m) const {
    return metrics[static_cast<std::size_t>(m)];
  }
  bool operator==(const CorpusScore&) const = default;
};

// Index pairs (human, model) under the given pairing mode. Throws
// InvalidArgument when the corpora cannot be paired.
std::vector<std::pair<std::size_t, std::size_t>> make_pairs(
    const Corpus& human, const Corpus& model, Pairing pairing,
    std::uint64_t seed);

// Scores every pair, averages each metric over the pairs where it is defined
// and attaches seeded percentile-bootstrap intervals.
CorpusScore face_score_corpus(const Corpus& human, const Corpus& model,
                              const CorpusScoreOptions& options = {});

}  // namespace face

#endif  // FACE_METRICS_H_
