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

#ifndef FACE_BRADLEY_TERRY_H_
#define FACE_BRADLEY_TERRY_H_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace face {

enum class Winner { kA, kB, kTie };

// One pairwise human judgment between items a and b.
struct Judgment {
  std::string a;
  std::string b;
  Winner winner = Winner::kTie;
};

struct BtOptions {
  // Virtual wins added in both directions for every pair of items.
  double prior_pseudocount = 0.5;
  // P(i beats j) = 1 / (1 + exp(-(beta_i - beta_j) / scale)).
  double scale = 100.0;
  double gradient_tolerance = 1e-8;
  std::size_t max_iterations = 10000;
};

struct BtRatings {
  std::map<std::string, double> betas;  // mean-centered
  // Log-likelihood of the observed judgments (ties as half wins), without
  // the prior pseudocounts.
  double log_likelihood = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  double scale = 100.0;
};

// Maximum-likelihood strengths by minorization-maximization. Throws
// InvalidArgument for fewer than two items, self-comparisons, or a
// disconnected comparison graph when the prior is zero.
BtRatings bt_fit(const std::vector<Judgment>& judgments,
                 const BtOptions& options = {});

// Win probability of i over j. Throws InvalidArgument for unknown ids.
double predict_win(const BtRatings& ratings, const std::string& i,
                   const std::string& j);

// Logistic win probability from a strength difference.
double win_probability(double beta_diff, double scale = 100.0);

// Penalized log-likelihood the fit maximizes, for arbitrary strengths in the
// order of `items`.
double bt_penalized_log_likelihood(const std::vector<Judgment>& judgments,
                                   const std::vector<std::string>& items,
                                   const std::vector<double>& betas,
                                   const BtOptions& options = {});

// JSON Lines {"a": .., "b": .., "winner": "a"|"b"|"tie"}. Throws ParseError.
std::vector<Judgment> parse_judgments(std::istream& in);

}  // namespace face

#endif  // FACE_BRADLEY_TERRY_H_
