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

#ifndef FACE_STATS_H_
#define FACE_STATS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "face/entropy_io.h"
#include "face/rng.h"

namespace face {

// ---------------------------------------------------------------------------
// Augmented Dickey-Fuller test, constant and no trend.

struct AdfResult {
  double statistic = 0.0;
  double p_value = 1.0;
  std::size_t lag_order = 0;
  std::size_t n_obs = 0;  // observations in the final regression
  bool stationary_at_05 = false;
};

struct AdfOptions {
  // Largest lag considered; empty selects floor(12 * (n / 100)^(1/4)).
  std::optional<std::size_t> max_lag;
  // Pick the lag in [0, max_lag] minimizing AIC. When false the test uses
  // max_lag directly.
  bool autolag = true;
};

inline constexpr std::size_t kAdfMinLength = 10;

// Throws InvalidArgument for inputs shorter than 10 or with zero variance.
AdfResult adf_test(std::span<const double> values, const AdfOptions& options = {});

// MacKinnon (1994/2010) approximate p-value of an ADF statistic for the
// constant-only regression with one integrated variable.
double mackinnon_p_value(double statistic);

struct StationarityReport {
  double fraction = 0.0;     // of tested records with p < 0.05
  std::size_t n_tested = 0;
  std::size_t n_stationary = 0;
  std::size_t n_excluded = 0;  // too short or constant
  std::vector<std::optional<AdfResult>> per_record;
};

// Throws InvalidArgument when no record could be tested.
StationarityReport stationary_fraction(const Corpus& corpus,
                                       const AdfOptions& options = {});

// ---------------------------------------------------------------------------
// Two-sample tests and intervals.

struct TTestResult {
  double t = 0.0;
  double p = 1.0;
  double df = 0.0;
};

// Welch's unequal-variance t-test, two-sided.
TTestResult welch_t_test(std::span<const double> group_a,
                         std::span<const double> group_b);

// Percentile interval of the resampled mean.
std::pair<double, double> bootstrap_ci(std::span<const double> samples,
                                       std::size_t b, double level,
                                       std::uint64_t seed);
std::pair<double, double> bootstrap_ci(std::span<const double> samples,
                                       std::size_t b, double level, Rng& rng);

// Linear-interpolation quantile of sorted data, q in [0, 1].
double quantile_sorted(std::span<const double> sorted, double q);

// 1-based ranks, ties receive the mean of the ranks they span.
std::vector<double> average_ranks(std::span<const double> values);

// Spearman coefficient for metric-vs-judgment vectors. Equal lengths >= 3.
double rank_correlation(std::span<const double> xs, std::span<const double> ys);

double mean(std::span<const double> values);

}  // namespace face

#endif  // FACE_STATS_H_
