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

#include "face/bradley_terry.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "face/error.h"

namespace face {
namespace {

std::vector<Judgment> record(const std::string& a, const std::string& b, int a_wins,
                             int b_wins, int ties = 0) {
  std::vector<Judgment> out;
  for (int i = 0; i < a_wins; ++i) out.push_back({a, b, Winner::kA});
  for (int i = 0; i < b_wins; ++i) out.push_back({a, b, Winner::kB});
  for (int i = 0; i < ties; ++i) out.push_back({a, b, Winner::kTie});
  return out;
}

void append(std::vector<Judgment>& to, const std::vector<Judgment>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

TEST(WinProbability, Logistic) {
  EXPECT_NEAR(win_probability(100.0), 0.7311, 1e-4);
  EXPECT_DOUBLE_EQ(win_probability(0.0), 0.5);
  EXPECT_NEAR(win_probability(37.0) + win_probability(-37.0), 1.0, 1e-15);
}

TEST(BtFit, EvenRecordGivesEqualRatings) {
  BtRatings r = bt_fit(record("x", "y", 5, 5));
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.betas.at("x"), 0.0, 1e-9);
  EXPECT_NEAR(r.betas.at("y"), 0.0, 1e-9);
  EXPECT_NEAR(predict_win(r, "x", "y"), 0.5, 1e-12);
}

TEST(BtFit, TwoItemClosedForm) {
  // With pseudocount c the MLE odds are (w + c) / (l + c).
  BtRatings r = bt_fit(record("x", "y", 6, 2));
  const double diff = r.betas.at("x") - r.betas.at("y");
  EXPECT_NEAR(diff, 100.0 * std::log(6.5 / 2.5), 1e-6);
  EXPECT_NEAR(r.betas.at("x") + r.betas.at("y"), 0.0, 1e-12);
}

TEST(BtFit, MatchesGridSearch) {
  std::vector<Judgment> js = record("a", "b", 6, 2);
  append(js, record("b", "c", 4, 3, 1));
  append(js, record("a", "c", 5, 1));
  BtRatings r = bt_fit(js);
  ASSERT_TRUE(r.converged);

  const std::vector<std::string> items{"a", "b", "c"};
  double best = -std::numeric_limits<double>::infinity();
  double best_a = 0, best_b = 0;
  // Coarse-to-fine scan over the centered plane.
  auto scan = [&](double ca, double cb, double half, double step) {
    for (double ba = ca - half; ba <= ca + half; ba += step) {
      for (double bb = cb - half; bb <= cb + half; bb += step) {
        const double ll = bt_penalized_log_likelihood(js, items, {ba, bb, -ba - bb});
        if (ll > best) {
          best = ll;
          best_a = ba;
          best_b = bb;
        }
      }
    }
  };
  scan(0, 0, 300, 1.0);
  scan(best_a, best_b, 1.0, 0.01);
  scan(best_a, best_b, 0.01, 0.0001);
  EXPECT_NEAR(r.betas.at("a"), best_a, 1e-3);
  EXPECT_NEAR(r.betas.at("b"), best_b, 1e-3);
  const double fitted = bt_penalized_log_likelihood(
      js, items, {r.betas.at("a"), r.betas.at("b"), r.betas.at("c")});
  EXPECT_GE(fitted, best - 1e-9);
}

TEST(BtFit, InvariantToRelabelAndSideSwap) {
  std::vector<Judgment> js = record("a", "b", 6, 2);
  append(js, record("b", "c", 4, 3, 1));
  std::vector<Judgment> swapped;
  for (const auto& j : js) {
    Winner w = j.winner == Winner::kA ? Winner::kB
             : j.winner == Winner::kB ? Winner::kA
                                      : Winner::kTie;
    swapped.push_back({j.b == "a" ? "z" : j.b, j.a == "a" ? "z" : j.a, w});
  }
  BtRatings r1 = bt_fit(js), r2 = bt_fit(swapped);
  EXPECT_NEAR(r1.betas.at("a"), r2.betas.at("z"), 1e-6);
  EXPECT_NEAR(r1.betas.at("b"), r2.betas.at("b"), 1e-6);
  EXPECT_NEAR(r1.betas.at("c"), r2.betas.at("c"), 1e-6);
}

TEST(PredictWin, Symmetric) {
  BtRatings r = bt_fit(record("x", "y", 7, 3));
  EXPECT_NEAR(predict_win(r, "x", "y") + predict_win(r, "y", "x"), 1.0, 1e-15);
  EXPECT_GT(predict_win(r, "x", "y"), 0.5);
  EXPECT_THROW(predict_win(r, "x", "q"), InvalidArgument);
}

TEST(BtFit, Errors) {
  EXPECT_THROW(bt_fit({}), InvalidArgument);
  EXPECT_THROW(bt_fit({{"a", "a", Winner::kA}}), InvalidArgument);
  std::vector<Judgment> split = record("a", "b", 1, 1);
  append(split, record("c", "d", 1, 1));
  EXPECT_THROW(bt_fit(split, {.prior_pseudocount = 0.0}), InvalidArgument);
  EXPECT_NO_THROW(bt_fit(split));
  EXPECT_THROW(bt_fit(record("a", "b", 3, 0), {.prior_pseudocount = 0.0}), InvalidArgument);
  EXPECT_NO_THROW(bt_fit(record("a", "b", 3, 0)));
}

TEST(ParseJudgments, ReadsJsonl) {
  std::istringstream in(
      "{\"a\":\"x\",\"b\":\"y\",\"winner\":\"a\"}\n"
      "\n"
      "{\"a\":\"x\",\"b\":\"y\",\"winner\":\"tie\"}\n");
  auto js = parse_judgments(in);
  ASSERT_EQ(js.size(), 2u);
  EXPECT_EQ(js[0].winner, Winner::kA);
  EXPECT_EQ(js[1].winner, Winner::kTie);

  std::istringstream bad("{\"a\":\"x\",\"b\":\"y\",\"winner\":\"c\"}\n");
  EXPECT_THROW(parse_judgments(bad), ParseError);
}

}  // namespace
}  // namespace face
