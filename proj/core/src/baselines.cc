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

#include "face/baselines.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string_view>
#include <unordered_map>

#include "face/error.h"
#include "face/stats.h"

namespace face {
namespace {

using NGram = std::vector<std::string_view>;

struct NGramHash {
  std::size_t operator()(const NGram& g) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto s : g) {
      h ^= std::hash<std::string_view>{}(s) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace

double perplexity(std::span<const double> ce) {
  if (ce.empty()) throw InvalidArgument("perplexity of an empty sequence");
  for (double v : ce) {
    if (!std::isfinite(v) || v < 0.0) {
      throw InvalidArgument("perplexity needs finite, non-negative cross-entropy");
    }
  }
  return std::exp(mean(ce));
}

double repetition(std::span<const std::string> tokens, std::size_t n) {
  if (n == 0) throw InvalidArgument("n-gram order must be positive");
  if (tokens.size() < n) {
    throw InvalidArgument("need at least " + std::to_string(n) + " tokens, got " +
                          std::to_string(tokens.size()));
  }
  const std::size_t total = tokens.size() - n + 1;
  std::unordered_map<NGram, std::size_t, NGramHash> seen;
  seen.reserve(total);
  for (std::size_t i = 0; i < total; ++i) {
    NGram g(tokens.begin() + static_cast<std::ptrdiff_t>(i),
            tokens.begin() + static_cast<std::ptrdiff_t>(i + n));
    ++seen[std::move(g)];
  }
  return 1.0 - static_cast<double>(seen.size()) / static_cast<double>(total);
}

double diversity(std::span<const std::string> tokens) {
  if (tokens.size() < 4) throw InvalidArgument("diversity needs at least 4 tokens");
  double d = 1.0;
  for (std::size_t n = 2; n <= 4; ++n) d *= 1.0 - repetition(tokens, n);
  return d;
}

double zipf_coefficient_from_counts(std::span<const double> counts) {
  if (counts.size() < 2) {
    throw InvalidArgument("Zipf fit needs at least 2 distinct tokens");
  }
  std::vector<double> sorted(counts.begin(), counts.end());
  for (double c : sorted) {
    if (!(c > 0.0) || !std::isfinite(c)) throw InvalidArgument("counts must be positive");
  }
  std::stable_sort(sorted.begin(), sorted.end(), std::greater<>());

  const std::size_t v = sorted.size();
  std::vector<double> x(v), y(v);
  for (std::size_t r = 0; r < v; ++r) {
    x[r] = std::log(static_cast<double>(r + 1));
    y[r] = std::log(sorted[r]);
  }
  const double mx = mean(x), my = mean(y);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t r = 0; r < v; ++r) {
    sxy += (x[r] - mx) * (y[r] - my);
    sxx += (x[r] - mx) * (x[r] - mx);
  }
  return 0.0 - sxy / sxx;
}

double zipf_coefficient(std::span<const std::string> tokens) {
  // std::map keeps token order, which fixes the rank of equal counts.
  std::map<std::string_view, double> counts;
  for (const auto& t : tokens) counts[t] += 1.0;
  std::vector<double> c;
  c.reserve(counts.size());
  for (const auto& [tok, n] : counts) c.push_back(n);
  return zipf_coefficient_from_counts(c);
}

BaselineReport baseline_report(const EntropySequence& record) {
  if (!record.tokens) throw TokensRequiredError(record.id);
  const auto& tokens = *record.tokens;
  if (tokens.size() < 4) {
    throw InvalidArgument("record '" + record.id + "' has fewer than 4 tokens");
  }
  BaselineReport r;
  r.perplexity = perplexity(record.ce);
  r.diversity = 1.0;
  for (std::size_t n = 2; n <= 4; ++n) {
    r.repetition[n - 2] = repetition(tokens, n);
    r.diversity *= 1.0 - r.repetition[n - 2];
  }
  const std::set<std::string_view> distinct(tokens.begin(), tokens.end());
  if (distinct.size() >= 2) r.zipf = zipf_coefficient(tokens);
  return r;
}

BaselineReport corpus_baselines(const Corpus& corpus) {
  if (corpus.records.empty()) throw InvalidArgument("baselines of an empty corpus");
  std::vector<double> all_ce;
  std::array<std::vector<double>, 3> reps;
  std::vector<std::string> pooled;
  for (const auto& rec : corpus.records) {
    BaselineReport r = baseline_report(rec);
    for (std::size_t k = 0; k < 3; ++k) reps[k].push_back(r.repetition[k]);
    all_ce.insert(all_ce.end(), rec.ce.begin(), rec.ce.end());
    pooled.insert(pooled.end(), rec.tokens->begin(), rec.tokens->end());
  }
  BaselineReport out;
  out.perplexity = perplexity(all_ce);
  out.diversity = 1.0;
  for (std::size_t k = 0; k < 3; ++k) {
    out.repetition[k] = mean(reps[k]);
    out.diversity *= 1.0 - out.repetition[k];
  }
  const std::set<std::string_view> distinct(pooled.begin(), pooled.end());
  if (distinct.size() >= 2) out.zipf = zipf_coefficient(pooled);
  return out;
}

}  // namespace face
