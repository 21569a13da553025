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

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "face/error.h"
#include "face/stats.h"

namespace face {
namespace {

// Design for the ADF regression of diff[t] on [1, x[t], diff[t-1..t-lags]]
// over rows t = first..n-2, where diff[t] = x[t+1] - x[t].
struct Design {
  Eigen::MatrixXd X;
  Eigen::VectorXd y;
};

Design build_design(std::span<const double> x, std::size_t lags,
                    std::size_t first) {
  const std::size_t n = x.size();
  const auto rows = static_cast<Eigen::Index>(n - 1 - first);
  const auto cols = static_cast<Eigen::Index>(2 + lags);
  Design d{Eigen::MatrixXd(rows, cols), Eigen::VectorXd(rows)};
  for (Eigen::Index r = 0; r < rows; ++r) {
    const std::size_t t = first + static_cast<std::size_t>(r);
    d.y(r) = x[t + 1] - x[t];
    d.X(r, 0) = 1.0;
    d.X(r, 1) = x[t];
    for (std::size_t l = 1; l <= lags; ++l) {
      d.X(r, static_cast<Eigen::Index>(1 + l)) = x[t - l + 1] - x[t - l];
    }
  }
  return d;
}

double gaussian_aic(double ssr, double nobs, double k) {
  const double llf =
      -0.5 * nobs * (std::log(2.0 * std::numbers::pi) + std::log(ssr / nobs) + 1.0);
  return -2.0 * llf + 2.0 * k;
}

bool full_rank(const Eigen::MatrixXd& r_factor) {
  const Eigen::VectorXd diag = r_factor.diagonal().cwiseAbs();
  const double largest = diag.maxCoeff();
  return diag.minCoeff() > largest * 1e-12;
}

// Lag in [0, max_lag] with the smallest AIC, all fitted on the rows that the
// largest lag leaves available. Prefix regressions share one QR.
std::size_t select_lag(std::span<const double> x, std::size_t max_lag) {
  Design d = build_design(x, max_lag, max_lag);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(d.X);
  const Eigen::VectorXd qty = qr.householderQ().transpose() * d.y;
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  const double nobs = static_cast<double>(d.y.size());

  // Residual sum of squares for the first j columns is the tail norm of Q'y.
  const Eigen::Index m = qty.size();
  std::vector<double> tail(static_cast<std::size_t>(m) + 1, 0.0);
  for (Eigen::Index i = m - 1; i >= 0; --i) {
    tail[static_cast<std::size_t>(i)] =
        tail[static_cast<std::size_t>(i) + 1] + qty(i) * qty(i);
  }

  std::size_t best = 0;
  double best_aic = std::numeric_limits<double>::infinity();
  for (std::size_t lag = 0; lag <= max_lag; ++lag) {
    const std::size_t k = 2 + lag;
    if (std::fabs(r(static_cast<Eigen::Index>(k - 1), static_cast<Eigen::Index>(k - 1))) <=
        std::fabs(r(0, 0)) * 1e-12) {
      break;  // rank-deficient from here on
    }
    const double aic = gaussian_aic(tail[k], nobs, static_cast<double>(k));
    if (aic < best_aic) {
      best_aic = aic;
      best = lag;
    }
  }
  return best;
}

}  // namespace

double mackinnon_p_value(double statistic) {
  // Response-surface coefficients, constant-only regression, N = 1.
  constexpr double kTauMax = 2.74;
  constexpr double kTauMin = -18.83;
  constexpr double kTauStar = -1.61;
  constexpr double kSmallP[] = {2.1659, 1.4412, 0.038269};
  constexpr double kLargeP[] = {1.7339, 0.93202, -0.12745, -0.010368};

  if (statistic > kTauMax) return 1.0;
  if (statistic < kTauMin) return 0.0;
  double z = 0.0;
  if (statistic <= kTauStar) {
    for (int i = 2; i >= 0; --i) z = z * statistic + kSmallP[i];
  } else {
    for (int i = 3; i >= 0; --i) z = z * statistic + kLargeP[i];
  }
  return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

AdfResult adf_test(std::span<const double> values, const AdfOptions& options) {
  const std::size_t n = values.size();
  if (n < kAdfMinLength) {
    throw InvalidArgument("ADF test needs at least 10 observations, got " +
                          std::to_string(n));
  }
  const double m = mean(values);
  double ss = 0.0;
  for (double v : values) ss += (v - m) * (v - m);
  if (!(ss > 0.0)) throw InvalidArgument("ADF test on a zero-variance series");

  const std::size_t lag_cap = n / 2 - 2;
  std::size_t max_lag;
  if (options.max_lag) {
    max_lag = *options.max_lag;
    if (max_lag > lag_cap) {
      throw InvalidArgument("max_lag must not exceed n/2 - 2 = " +
                            std::to_string(lag_cap));
    }
  } else {
    max_lag = static_cast<std::size_t>(
        std::floor(12.0 * std::pow(static_cast<double>(n) / 100.0, 0.25)));
    max_lag = std::min(max_lag, lag_cap);
  }

  const std::size_t lag = options.autolag ? select_lag(values, max_lag) : max_lag;

  Design d = build_design(values, lag, lag);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(d.X);
  const Eigen::MatrixXd r = qr.matrixQR()
                                .topRows(d.X.cols())
                                .triangularView<Eigen::Upper>();
  if (!full_rank(r)) {
    throw InvalidArgument("ADF regression is rank-deficient");
  }
  const Eigen::VectorXd beta = qr.solve(d.y);
  const Eigen::VectorXd resid = d.y - d.X * beta;
  const double nobs = static_cast<double>(d.y.size());
  const double k = static_cast<double>(d.X.cols());
  const double sigma2 = resid.squaredNorm() / (nobs - k);

  // Var(beta_1) = sigma2 * [(R'R)^-1]_11 = sigma2 * ||row 1 of R^-1||^2.
  const Eigen::MatrixXd r_inv =
      r.triangularView<Eigen::Upper>().solve(
          Eigen::MatrixXd::Identity(d.X.cols(), d.X.cols()));
  const double se = std::sqrt(sigma2 * r_inv.row(1).squaredNorm());

  AdfResult out;
  out.statistic = beta(1) / se;
  out.p_value = mackinnon_p_value(out.statistic);
  out.lag_order = lag;
  out.n_obs = static_cast<std::size_t>(d.y.size());
  out.stationary_at_05 = out.p_value < 0.05;
  return out;
}

StationarityReport stationary_fraction(const Corpus& corpus,
                                       const AdfOptions& options) {
  StationarityReport report;
  report.per_record.reserve(corpus.records.size());
  for (const auto& rec : corpus.records) {
    try {
      AdfResult r = adf_test(rec.ce, options);
      ++report.n_tested;
      if (r.stationary_at_05) ++report.n_stationary;
      report.per_record.emplace_back(r);
    } catch (const InvalidArgument&) {
      ++report.n_excluded;
      report.per_record.emplace_back(std::nullopt);
    }
  }
  if (report.n_tested == 0) {
    throw InvalidArgument("no record in the corpus could be tested (" +
                          std::to_string(report.n_excluded) + " excluded)");
  }
  report.fraction = static_cast<double>(report.n_stationary) /
                    static_cast<double>(report.n_tested);
  return report;
}

}  // namespace face
