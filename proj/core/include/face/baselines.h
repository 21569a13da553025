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

#ifndef FACE_BASELINES_H_
#define FACE_BASELINES_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "face/entropy_io.h"

namespace face {

// exp(mean(ce)). Throws InvalidArgument on empty or negative/non-finite input.
double perplexity(std::span<const double> ce);

// 1 - |unique n-grams| / |n-grams|.
double repetition(std::span<const std::string> tokens, std::size_t n);

// Product over n = 2, 3, 4 of (1 - repetition(tokens, n)).
double diversity(std::span<const std::string> tokens);

// Negated OLS slope of log frequency against log rank. Ranks run by
// descending count, ties broken by token order. Needs >= 2 distinct tokens.
double zipf_coefficient(std::span<const std::string> tokens);
// Same fit from raw frequencies (any order, all positive).
double zipf_coefficient_from_counts(std::span<const double> counts);

struct BaselineReport {
  double perplexity = 1.0;
  std::array<double, 3> repetition{};  // n = 2, 3, 4
  double diversity = 1.0;
  // Empty when the tokens hold fewer than two distinct types.
  std::optional<double> zipf;
};

// Per-record report. Throws TokensRequiredError when the record has no
// tokens and InvalidArgument when it has fewer than 4.
BaselineReport baseline_report(const EntropySequence& record);

// Corpus summary: perplexity from the token-weighted mean of every ce value,
// repetition as the mean per-record rate, diversity from those mean rates and
// Zipf over the pooled token multiset.
BaselineReport corpus_baselines(const Corpus& corpus);

}  // namespace face

#endif  // FACE_BASELINES_H_
