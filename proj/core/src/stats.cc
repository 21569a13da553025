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

#include "face/stats.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/distributions/students_t.hpp>

#include "face/error.h"
#include "face/metrics.h"

namespace face {
namespace {

// Sample variance about a known mean.
double sample_variance(std::span<const double> v, double m) {
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return ss / static_cast<double>(v.size() - 1);
}

}  // namespace

double mean(std::span<const double> values) {
  if (values.empty()) throw InvalidArgument("mean of an empty sample");
  // Shifted accumulation: exact for constant samples.
  const double shift = values.front();
  double acc = 0.0;
  for (double v : values) acc += v - shift;
  return shift + acc / static_cast<double>(values.size());
}

TTestResult welch_t_test(std::span<const double> group_a,
                         std::span<const double> group_b) {
  if (group_a.size() < 2 || group_b.size() < 2) {
    throw InvalidArgument("t-test needs at least 2 samples per group");
  }
  const double na = static_cast<double>(group_a.size());
  const double nb = static_cast<double>(group_b.size());
  const double ma = mean(group_a);
  const double mb = mean(group_b);
  const double qa = sample_variance(group_a, ma) / na;
  const double qb = sample_variance(group_b, mb) / nb;
  const double se2 = qa + qb;
  if (!(se2 > 0.0)) {
    throw InvalidArgument("t-test undefined: both groups have zero variance");
  }

  TTestResult r;
  r.t = (ma - mb) / std::sqrt(se2);
  r.df = se2 * se2 / (qa * qa / (na - 1.0) + qb * qb / (nb - 1.0));
  boost::math::students_t dist(r.df);
  r.p = 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(r.t)));
  r.p = std::min(r.p, 1.0);
  return r;
}

double quantile_sorted(std::span<const double> sorted, double q) {
  if (sorted.empty()) throw InvalidArgument("quantile of an empty sample");
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  if (frac == 0.0 || sorted[lo] == sorted[hi]) return sorted[lo];
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

std::pair<double, double> bootstrap_ci(std::span<const double> samples,
                                       std::size_t b, double level, Rng& rng) {
  if (samples.empty()) throw InvalidArgument("bootstrap of an empty sample");
  if (!(level > 0.0 && level < 1.0)) {
    throw InvalidArgument("confidence level must lie in (0, 1)");
  }
  if (b < 100) throw InvalidArgument("bootstrap needs at least 100 resamples");

  const std::size_t n = samples.size();
  std::vector<double> means(b);
  std::vector<double> draw(n);
  for (std::size_t rep = 0; rep < b; ++rep) {
    for (std::size_t i = 0; i < n; ++i) draw[i] = samples[rng.uniform_index(n)];
    means[rep] = mean(draw);
  }
  std::sort(means.begin(), means.end());
  const double alpha = 1.0 - level;
  return {quantile_sorted(means, alpha / 2.0),
          quantile_sorted(means, 1.0 - alpha / 2.0)};
}

std::pair<double, double> bootstrap_ci(std::span<const double> samples,
                                       std::size_t b, double level,
                                       std::uint64_t seed) {
  Rng rng(seed);
  return bootstrap_ci(samples, b, level, rng);
}

std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return values[i] < values[j];
  });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    // Positions i..j-1 share the mean of ranks i+1..j.
    const double r = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = r;
    i = j;
  }
  return ranks;
}

double rank_correlation(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw InvalidArgument("rank correlation needs equal-length vectors");
  }
  if (xs.size() < 3) {
    throw InvalidArgument("rank correlation needs at least 3 observations");
  }
  return spearman(xs, ys);
}

}  // namespace face
