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

#include "face/aggregate.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "face/error.h"
#include "face/rng.h"
#include "face/stats.h"

namespace face {
namespace {

constexpr std::size_t kMinSmoothingPoints = 4;

double tricube(double u) {
  if (u >= 1.0) return 0.0;
  const double t = 1.0 - u * u * u;
  return t * t * t;
}

// Prominence of a strict local maximum at i (scipy.signal convention).
double peak_prominence(std::span<const double> y, std::size_t i) {
  double left_min = y[i];
  for (std::size_t j = i; j-- > 0;) {
    if (y[j] > y[i]) break;
    left_min = std::min(left_min, y[j]);
  }
  double right_min = y[i];
  for (std::size_t j = i + 1; j < y.size(); ++j) {
    if (y[j] > y[i]) break;
    right_min = std::min(right_min, y[j]);
  }
  return y[i] - std::max(left_min, right_min);
}

}  // namespace

AggregateSpectrum mean_spectrum(std::span<const Spectrum> spectra,
                                const MeanSpectrumOptions& options) {
  if (spectra.empty()) throw InvalidArgument("mean of an empty spectrum list");

  std::vector<std::size_t> order(spectra.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return spectra[i].source_id < spectra[j].source_id;
  });

  std::size_t n_c = options.n_c;
  if (n_c == kAutoLength) {
    for (const auto& s : spectra) n_c = std::max(n_c, s.size());
  }

  std::vector<std::vector<double>> rows;
  rows.reserve(spectra.size());
  for (std::size_t idx : order) {
    std::vector<double> row = interpolate(spectra[idx], n_c);
    if (options.absolute) {
      for (double& v : row) v = std::fabs(v);
    }
    rows.push_back(std::move(row));
  }

  AggregateSpectrum out;
  out.grid = uniform_grid(n_c);
  out.n = rows.size();
  out.mean_mags.resize(n_c);
  std::vector<double> column(rows.size());
  for (std::size_t k = 0; k < n_c; ++k) {
    for (std::size_t r = 0; r < rows.size(); ++r) column[r] = rows[r][k];
    out.mean_mags[k] = mean(column);
  }

  if (options.band_bootstrap > 0) {
    if (options.band_bootstrap < 100) {
      throw InvalidArgument("bootstrap band needs at least 100 resamples");
    }
    if (!(options.band_level > 0.0 && options.band_level < 1.0)) {
      throw InvalidArgument("band level must lie in (0, 1)");
    }
    const std::size_t b = options.band_bootstrap;
    const std::size_t n = rows.size();
    // Resample whole spectra so bins keep their joint structure.
    std::vector<std::vector<double>> boot(n_c, std::vector<double>(b));
    Rng rng(options.seed);
    std::vector<std::size_t> pick(n);
    for (std::size_t rep = 0; rep < b; ++rep) {
      for (auto& p : pick) p = rng.uniform_index(n);
      for (std::size_t k = 0; k < n_c; ++k) {
        for (std::size_t r = 0; r < n; ++r) column[r] = rows[pick[r]][k];
        boot[k][rep] = mean(column);
      }
    }
    const double alpha = 1.0 - options.band_level;
    std::vector<std::pair<double, double>> band(n_c);
    for (std::size_t k = 0; k < n_c; ++k) {
      std::sort(boot[k].begin(), boot[k].end());
      band[k] = {std::min(quantile_sorted(boot[k], alpha / 2.0), out.mean_mags[k]),
                 std::max(quantile_sorted(boot[k], 1.0 - alpha / 2.0), out.mean_mags[k])};
    }
    out.band = std::move(band);
  }
  return out;
}

std::vector<double> local_linear_smooth(std::span<const double> x,
                                        std::span<const double> y,
                                        double bandwidth) {
  if (!(bandwidth > 0.0 && bandwidth <= 1.0)) {
    throw InvalidArgument("bandwidth must lie in (0, 1]");
  }
  const std::size_t n = x.size();
  if (y.size() != n) throw InvalidArgument("x and y must have equal length");
  if (n < 5) throw InvalidArgument("smoothing needs at least 5 points");

  const std::size_t q = std::min(
      n, std::max(kMinSmoothingPoints,
                  static_cast<std::size_t>(std::ceil(bandwidth * static_cast<double>(n)))));
  std::vector<double> out(n), dist(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) dist[j] = std::fabs(x[j] - x[i]);
    std::vector<double> sorted = dist;
    std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(q - 1),
                     sorted.end());
    double h = sorted[q - 1];
    // When every neighbour sits inside the window (q == n), widen it so the
    // farthest point still gets weight.
    if (q == n) h *= 1.0 + 1e-6;

    double s0 = 0, s1 = 0, s2 = 0, t0 = 0, t1 = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const double w = tricube(dist[j] / h);
      if (w == 0.0) continue;
      const double dx = x[j] - x[i];
      s0 += w;
      s1 += w * dx;
      s2 += w * dx * dx;
      t0 += w * y[j];
      t1 += w * dx * y[j];
    }
    const double det = s0 * s2 - s1 * s1;
    out[i] = det > 0.0 ? (s2 * t0 - s1 * t1) / det : t0 / s0;
  }
  return out;
}

AggregateSpectrum smooth(AggregateSpectrum a, double bandwidth) {
  if (a.mean_mags.size() < 5) throw InvalidArgument("smoothing needs N_C >= 5");
  a.smoothed = local_linear_smooth(a.grid, a.mean_mags, bandwidth);
  return a;
}

ExtremaReport find_extrema(std::span<const double> grid,
                           std::span<const double> curve,
                           std::optional<double> min_prominence) {
  if (grid.size() != curve.size()) {
    throw InvalidArgument("grid and curve must have equal length");
  }
  ExtremaReport report;
  const std::size_t n = curve.size();
  if (n < 3) return report;

  const auto [lo, hi] = std::minmax_element(curve.begin(), curve.end());
  const double threshold = min_prominence.value_or(0.01 * (*hi - *lo));

  std::vector<double> negated(n);
  for (std::size_t i = 0; i < n; ++i) negated[i] = -curve[i];

  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (curve[i] > curve[i - 1] && curve[i] > curve[i + 1]) {
      const double p = peak_prominence(curve, i);
      if (p >= threshold) report.peaks.push_back({grid[i], curve[i], p});
    } else if (curve[i] < curve[i - 1] && curve[i] < curve[i + 1]) {
      const double p = peak_prominence(negated, i);
      if (p >= threshold) report.troughs.push_back({grid[i], curve[i], p});
    }
  }
  for (const auto& pk : report.peaks) report.periods.push_back(period_of(pk.frequency));
  return report;
}

ExtremaReport find_extrema(const AggregateSpectrum& a,
                           std::optional<double> min_prominence) {
  if (!a.smoothed) throw InvalidArgument("find_extrema needs a smoothed curve");
  return find_extrema(a.grid, *a.smoothed, min_prominence);
}

double period_of(double freq) {
  if (!(freq > 0.0) || !std::isfinite(freq)) {
    throw InvalidArgument("period needs a positive frequency");
  }
  return 1.0 / freq;
}

double weighted_mean(std::span<const double> values, std::span<const double> weights) {
  if (values.size() != weights.size() || values.empty()) {
    throw InvalidArgument("values and weights must have equal, non-zero length");
  }
  double total = 0.0, acc = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (weights[i] < 0.0 || !std::isfinite(weights[i])) {
      throw InvalidArgument("weights must be finite and non-negative");
    }
    total += weights[i];
    acc += weights[i] * values[i];
  }
  if (!(total > 0.0)) throw InvalidArgument("weights sum to zero");
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return std::clamp(acc / total, *lo, *hi);
}

}  // namespace face
