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

#include "face/metrics.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

#include "face/error.h"
#include "face/rng.h"
#include "face/stats.h"

namespace face {
namespace {

void check_aligned(const AlignedSpectra& x) {
  if (x.a.size() != x.grid.size() || x.b.size() != x.grid.size() ||
      x.grid.size() < 2) {
    throw InvalidArgument("aligned spectra must share a grid of length >= 2");
  }
}

void check_same_length(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.size() < 2) {
    throw InvalidArgument("vectors must have equal length >= 2");
  }
}

double trapezoid(std::span<const double> grid, std::span<const double> y) {
  double area = 0.0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    area += 0.5 * (grid[i] - grid[i - 1]) * (y[i] + y[i - 1]);
  }
  return area;
}

template <typename Fn>
std::optional<double> defined_or_empty(Fn&& fn) {
  try {
    return fn();
  } catch (const UndefinedMetricError&) {
    return std::nullopt;
  }
}

}  // namespace

double spectral_overlap(const AlignedSpectra& x) {
  check_aligned(x);
  const std::size_t n = x.size();
  std::vector<double> lower(n), upper(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = std::fabs(x.a[i]);
    const double b = std::fabs(x.b[i]);
    lower[i] = std::min(a, b);
    upper[i] = std::max(a, b);
  }
  const double union_area = trapezoid(x.grid, upper);
  if (!(union_area > 0.0)) {
    throw UndefinedMetricError("spectral overlap undefined: both spectra are zero");
  }
  return std::clamp(trapezoid(x.grid, lower) / union_area, 0.0, 1.0);
}

double spectrum_angle(const AlignedSpectra& x) {
  check_aligned(x);
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    dot += x.a[i] * x.b[i];
    na += x.a[i] * x.a[i];
    nb += x.b[i] * x.b[i];
  }
  if (!(na > 0.0) || !(nb > 0.0)) {
    throw UndefinedMetricError("spectrum angle undefined: zero-norm spectrum");
  }
  const double cosine = dot / (std::sqrt(na) * std::sqrt(nb));
  return std::acos(std::clamp(cosine, -1.0, 1.0));
}

double pearson(std::span<const double> a, std::span<const double> b) {
  check_same_length(a, b);
  const double ma = mean(a);
  const double mb = mean(b);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - ma;
    const double db = b[i] - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (!(saa > 0.0) || !(sbb > 0.0)) {
    throw UndefinedMetricError("correlation undefined: zero variance");
  }
  return std::clamp(sab / (std::sqrt(saa) * std::sqrt(sbb)), -1.0, 1.0);
}

double pearson(const AlignedSpectra& x) {
  check_aligned(x);
  return pearson(x.a, x.b);
}

double spearman(std::span<const double> a, std::span<const double> b) {
  check_same_length(a, b);
  const std::vector<double> ra = average_ranks(a);
  const std::vector<double> rb = average_ranks(b);
  try {
    return pearson(ra, rb);
  } catch (const UndefinedMetricError&) {
    throw UndefinedMetricError("rank correlation undefined: all values tied");
  }
}

double spearman(const AlignedSpectra& x) {
  check_aligned(x);
  return spearman(x.a, x.b);
}

std::string_view to_string(Metric m) {
  switch (m) {
    case Metric::kSo: return "so";
    case Metric::kCorr: return "corr";
    case Metric::kSam: return "sam";
    case Metric::kSpear: return "spear";
  }
  return "?";
}

std::optional<double>& FaceScores::operator[](Metric m) {
  switch (m) {
    case Metric::kSo: return so;
    case Metric::kCorr: return corr;
    case Metric::kSam: return sam;
    case Metric::kSpear: return spear;
  }
  return so;
}

const std::optional<double>& FaceScores::operator[](Metric m) const {
  return const_cast<FaceScores&>(*this)[m];
}

FaceScores face_score_aligned(const AlignedSpectra& x) {
  check_aligned(x);
  FaceScores s;
  s.so = defined_or_empty([&] { return spectral_overlap(x); });
  s.corr = defined_or_empty([&] { return pearson(x); });
  s.sam = defined_or_empty([&] { return spectrum_angle(x); });
  s.spear = defined_or_empty([&] { return spearman(x); });
  return s;
}

FaceScores face_score_pair(const Spectrum& s1, const Spectrum& s2,
                           const ScoreOptions& options) {
  if (options.drop_dc) {
    return face_score_aligned(align(drop_dc(s1), drop_dc(s2), options.n_c));
  }
  return face_score_aligned(align(s1, s2, options.n_c));
}

std::string_view to_string(Pairing p) {
  switch (p) {
    case Pairing::kByPrompt: return "by_prompt";
    case Pairing::kByIndex: return "by_index";
    case Pairing::kRandomSeeded: return "random_seeded";
  }
  return "?";
}

Pairing parse_pairing(std::string_view text) {
  if (text == "by_prompt") return Pairing::kByPrompt;
  if (text == "by_index") return Pairing::kByIndex;
  if (text == "random" || text == "random_seeded") return Pairing::kRandomSeeded;
  throw InvalidArgument("unknown pairing mode \"" + std::string(text) + "\"");
}

std::vector<std::pair<std::size_t, std::size_t>> make_pairs(
    const Corpus& human, const Corpus& model, Pairing pairing,
    std::uint64_t seed) {
  const std::size_t nh = human.records.size();
  const std::size_t nm = model.records.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  switch (pairing) {
    case Pairing::kByIndex: {
      if (nh != nm) {
        throw InvalidArgument("by_index pairing needs equal corpus sizes (" +
                              std::to_string(nh) + " vs " + std::to_string(nm) + ")");
      }
      for (std::size_t i = 0; i < nh; ++i) pairs.emplace_back(i, i);
      break;
    }
    case Pairing::kByPrompt: {
      std::map<std::string, std::size_t> model_by_prompt;
      for (std::size_t j = 0; j < nm; ++j) {
        const auto& p = model.records[j].prompt_id;
        if (!p) {
          throw InvalidArgument("by_prompt pairing: model record '" +
                                model.records[j].id + "' has no prompt_id");
        }
        if (!model_by_prompt.emplace(*p, j).second) {
          throw InvalidArgument("by_prompt pairing: prompt_id '" + *p +
                                "' repeats in the model corpus");
        }
      }
      std::map<std::string, std::size_t> seen;
      for (std::size_t i = 0; i < nh; ++i) {
        const auto& p = human.records[i].prompt_id;
        if (!p) {
          throw InvalidArgument("by_prompt pairing: human record '" +
                                human.records[i].id + "' has no prompt_id");
        }
        if (!seen.emplace(*p, i).second) {
          throw InvalidArgument("by_prompt pairing: prompt_id '" + *p +
                                "' repeats in the human corpus");
        }
        auto it = model_by_prompt.find(*p);
        if (it == model_by_prompt.end()) {
          throw InvalidArgument("by_prompt pairing: prompt_id '" + *p +
                                "' has no model record");
        }
        pairs.emplace_back(i, it->second);
      }
      if (seen.size() != model_by_prompt.size()) {
        throw InvalidArgument("by_prompt pairing: prompt_id sets differ");
      }
      break;
    }
    case Pairing::kRandomSeeded: {
      // Fisher-Yates over model indices, then pair in human order.
      std::vector<std::size_t> order(nm);
      std::iota(order.begin(), order.end(), 0);
      Rng rng(seed);
      for (std::size_t i = nm; i > 1; --i) {
        std::swap(order[i - 1], order[rng.uniform_index(i)]);
      }
      const std::size_t n = std::min(nh, nm);
      for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(i, order[i]);
      break;
    }
  }
  if (pairs.empty()) throw InvalidArgument("pairing produced no pairs");
  return pairs;
}

CorpusScore face_score_corpus(const Corpus& human, const Corpus& model,
                              const CorpusScoreOptions& options) {
  CorpusScore out;
  out.pairing = options.pairing;
  out.pairs = make_pairs(human, model, options.pairing, options.seed);
  out.n_pairs = out.pairs.size();

  // Spectra of every record that takes part, human side first.
  std::vector<Spectrum> hs(human.records.size()), ms(model.records.size());
  std::vector<bool> hdone(hs.size(), false), mdone(ms.size(), false);
  std::size_t longest = 0;
  for (const auto& [i, j] : out.pairs) {
    if (!hdone[i]) {
      hs[i] = dft_real(human.records[i].ce, human.records[i].id);
      if (options.drop_dc) hs[i] = drop_dc(hs[i]);
      hdone[i] = true;
    }
    if (!mdone[j]) {
      ms[j] = dft_real(model.records[j].ce, model.records[j].id);
      if (options.drop_dc) ms[j] = drop_dc(ms[j]);
      mdone[j] = true;
    }
    longest = std::max({longest, hs[i].size(), ms[j].size()});
  }
  out.n_c = options.n_c == kAutoLength ? longest : options.n_c;

  out.pair_scores.reserve(out.n_pairs);
  for (const auto& [i, j] : out.pairs) {
    out.pair_scores.push_back(face_score_aligned(align(hs[i], ms[j], out.n_c)));
  }

  Rng rng(options.seed);
  for (Metric m : kAllMetrics) {
    std::vector<double> values;
    for (const auto& s : out.pair_scores) {
      if (s[m]) values.push_back(*s[m]);
    }
    MetricSummary& summary = out.metrics[static_cast<std::size_t>(m)];
    summary.defined_count = values.size();
    if (values.empty()) continue;
    summary.mean = mean(values);
    if (options.bootstrap_b > 0) {
      auto [lo, hi] = bootstrap_ci(values, options.bootstrap_b, options.ci_level, rng);
      // Percentile bounds can miss a skewed mean by rounding; keep the bracket.
      summary.ci = std::pair{std::min(lo, *summary.mean), std::max(hi, *summary.mean)};
    }
  }
  return out;
}

}  // namespace face
