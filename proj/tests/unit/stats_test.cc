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

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <random>

#include "face/error.h"
#include "face/rng.h"
#include "unit/test_util.h"

namespace face {
namespace {

TEST(WelchTTest, IdenticalGroups) {
  std::vector<double> a{1.0, 2.0, 3.0, 4.0};
  TTestResult r = welch_t_test(a, a);
  EXPECT_DOUBLE_EQ(r.t, 0.0);
  EXPECT_DOUBLE_EQ(r.p, 1.0);
}

TEST(WelchTTest, SeparatedGroups) {
  Rng rng(3);
  std::vector<double> a(50), b(50);
  for (double& x : a) x = 1.0 + 0.01 * rng.normal();
  for (double& x : b) x = 2.0 + 0.01 * rng.normal();
  EXPECT_LT(welch_t_test(a, b).p, 1e-6);
}

TEST(WelchTTest, MatchesReference) {
  std::ifstream in(testing::data_path("welch_reference.json"));
  auto ref = nlohmann::json::parse(in);
  for (const auto& c : ref) {
    auto a = c["a"].get<std::vector<double>>();
    auto b = c["b"].get<std::vector<double>>();
    TTestResult r = welch_t_test(a, b);
    EXPECT_NEAR(r.t, c["t"].get<double>(), 1e-9);
    EXPECT_NEAR(r.p, c["p"].get<double>(), 1e-6);
    EXPECT_NEAR(r.df, c["df"].get<double>(), 1e-9);
    TTestResult s = welch_t_test(b, a);
    EXPECT_DOUBLE_EQ(s.t, -r.t);
    EXPECT_DOUBLE_EQ(s.p, r.p);
  }
}

TEST(WelchTTest, NeedsTwoPerGroup) {
  EXPECT_THROW(welch_t_test(std::vector<double>{1.0}, std::vector<double>{1.0, 2.0}),
               InvalidArgument);
}

TEST(BootstrapCi, ConstantData) {
  std::vector<double> v(40, 0.37);
  auto [lo, hi] = bootstrap_ci(v, 500, 0.95, 1);
  EXPECT_EQ(lo, 0.37);
  EXPECT_EQ(hi, 0.37);
}

TEST(BootstrapCi, StaysInsideSampleRange) {
  Rng rng(4);
  std::vector<double> v(60);
  for (double& x : v) x = rng.uniform01();
  auto [lo, hi] = bootstrap_ci(v, 1000, 0.95, 2);
  EXPECT_GE(lo, 0.0);
  EXPECT_LE(hi, 1.0);
  EXPECT_LE(lo, mean(v));
  EXPECT_GE(hi, mean(v));
}

TEST(BootstrapCi, WidthShrinksLikeInverseRoot) {
  Rng rng(5);
  std::vector<double> widths;
  for (std::size_t n : {100u, 400u, 1600u}) {
    std::vector<double> v(n);
    for (double& x : v) x = rng.normal();
    auto [lo, hi] = bootstrap_ci(v, 2000, 0.95, 6);
    widths.push_back(hi - lo);
  }
  EXPECT_NEAR(widths[0] / widths[1], 2.0, 0.4);
  EXPECT_NEAR(widths[1] / widths[2], 2.0, 0.4);
}

TEST(BootstrapCi, RejectsBadArguments) {
  std::vector<double> v{1, 2, 3};
  EXPECT_THROW(bootstrap_ci(v, 10, 0.95, 1), InvalidArgument);
  EXPECT_THROW(bootstrap_ci(v, 1000, 1.5, 1), InvalidArgument);
  EXPECT_THROW(bootstrap_ci(std::vector<double>{}, 1000, 0.95, 1), InvalidArgument);
}

TEST(QuantileSorted, LinearInterpolation) {
  std::vector<double> v{1, 2, 3, 4};
  EXPECT_DOUBLE_EQ(quantile_sorted(v, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(quantile_sorted(v, 1.0), 4.0);
  EXPECT_DOUBLE_EQ(quantile_sorted(v, 0.5), 2.5);
}

TEST(AverageRanks, Ties) {
  EXPECT_EQ(average_ranks(std::vector<double>{10, 20, 20, 5}),
            (std::vector<double>{2, 3.5, 3.5, 1}));
}

TEST(RankCorrelation, Monotone) {
  std::vector<double> x{1, 2, 3, 4, 5}, y{2, 4, 8, 16, 32}, z{5, 4, 3, 2, 1};
  EXPECT_NEAR(rank_correlation(x, y), 1.0, 1e-12);
  EXPECT_NEAR(rank_correlation(x, z), -1.0, 1e-12);
  EXPECT_THROW(rank_correlation(std::vector<double>{1, 2}, std::vector<double>{1, 2}),
               InvalidArgument);
}

TEST(Mean, ExactForConstants) {
  std::vector<double> v(1000, 0.1);
  EXPECT_EQ(mean(v), 0.1);
}

}  // namespace
}  // namespace face
