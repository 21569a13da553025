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
#include <string>

#include "face/error.h"
#include "face/rng.h"
#include "unit/test_util.h"

namespace face {
namespace {

TEST(AdfTest, MatchesReference) {
  std::ifstream in(testing::data_path("adf_reference.jsonl"));
  std::string line;
  int cases = 0;
  while (std::getline(in, line)) {
    auto c = nlohmann::json::parse(line);
    auto v = c["values"].get<std::vector<double>>();
    const auto max_lag = c["max_lag"].get<std::size_t>();
    SCOPED_TRACE(c["id"].get<std::string>());

    AdfResult r = adf_test(v, {.max_lag = max_lag});
    EXPECT_EQ(r.lag_order, c["lag"].get<std::size_t>());
    EXPECT_EQ(r.n_obs, c["nobs"].get<std::size_t>());
    EXPECT_NEAR(r.statistic, c["statistic"].get<double>(), 1e-8);
    EXPECT_NEAR(r.p_value, c["p_value"].get<double>(), 1e-8);

    AdfResult f = adf_test(v, {.max_lag = max_lag, .autolag = false});
    EXPECT_EQ(f.lag_order, max_lag);
    EXPECT_NEAR(f.statistic, c["fixed_statistic"].get<double>(), 1e-8);
    EXPECT_NEAR(f.p_value, c["fixed_p_value"].get<double>(), 1e-8);
    ++cases;
  }
  EXPECT_GE(cases, 10);
}

TEST(AdfTest, RejectsConstantAndShortInput) {
  EXPECT_THROW(adf_test(std::vector<double>(50, 1.5)), InvalidArgument);
  EXPECT_THROW(adf_test(std::vector<double>{1, 2, 3, 1, 2}), InvalidArgument);
}

TEST(AdfTest, InvariantToLevelShift) {
  Rng rng(1);
  std::vector<double> v(300), w(300);
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = rng.normal();
    w[i] = v[i] + 7.0;
  }
  AdfResult a = adf_test(v), b = adf_test(w);
  EXPECT_EQ(a.lag_order, b.lag_order);
  EXPECT_NEAR(a.statistic, b.statistic, 1e-8);
}

TEST(MackinnonPValue, MonotoneAndBounded) {
  double prev = 0.0;
  for (double t = -25.0; t <= 5.0; t += 0.25) {
    const double p = mackinnon_p_value(t);
    EXPECT_GE(p, prev);
    EXPECT_LE(p, 1.0);
    prev = p;
  }
  EXPECT_EQ(mackinnon_p_value(-30.0), 0.0);
  EXPECT_EQ(mackinnon_p_value(3.0), 1.0);
}

Corpus series(bool walk, std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  Corpus c;
  for (std::size_t i = 0; i < count; ++i) {
    EntropySequence r{"s" + std::to_string(i), Source::kModel, {}, {}, {}, {}};
    double level = 0.0;
    for (int t = 0; t < 512; ++t) {
      level = walk ? level + rng.normal() : rng.normal();
      r.ce.push_back(level);
    }
    c.records.push_back(std::move(r));
  }
  return c;
}

TEST(StationaryFraction, WhiteNoiseVersusRandomWalk) {
  EXPECT_GE(stationary_fraction(series(false, 20, 11)).fraction, 0.95);
  EXPECT_LE(stationary_fraction(series(true, 20, 12)).fraction, 0.10);
}

TEST(StationaryFraction, ExcludesUntestableRecords) {
  Corpus c = series(false, 3, 13);
  c.records.push_back({"flat", Source::kHuman, {}, {}, {}, std::vector<double>(40, 2.0)});
  c.records.push_back({"short", Source::kHuman, {}, {}, {}, {1.0, 2.0, 3.0}});
  StationarityReport r = stationary_fraction(c);
  EXPECT_EQ(r.n_tested, 3u);
  EXPECT_EQ(r.n_excluded, 2u);
  ASSERT_EQ(r.per_record.size(), 5u);
  EXPECT_FALSE(r.per_record[3]);
  EXPECT_FALSE(r.per_record[4]);
}

TEST(StationaryFraction, NothingTestableThrows) {
  Corpus c;
  c.records.push_back({"flat", Source::kHuman, {}, {}, {}, std::vector<double>(40, 2.0)});
  EXPECT_THROW(stationary_fraction(c), InvalidArgument);
  EXPECT_THROW(stationary_fraction(Corpus{}), InvalidArgument);
}

}  // namespace
}  // namespace face
