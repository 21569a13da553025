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

#include "report.h"

#include <cmath>
#include <sstream>

namespace face::cli {
namespace {

Json number_or_null(const std::optional<double>& v) {
  return v && std::isfinite(*v) ? Json(*v) : Json(nullptr);
}

Json extrema_json(const std::vector<Extremum>& list) {
  Json arr = Json::array();
  for (const auto& e : list) {
    arr.push_back({{"frequency", e.frequency},
                   {"magnitude", e.magnitude},
                   {"prominence", e.prominence}});
  }
  return arr;
}

void flatten(const Json& node, const std::string& path, std::ostringstream& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      flatten(value, path.empty() ? key : path + "." + key, out);
    }
  } else if (node.is_array() && !node.empty() && !node.front().is_primitive()) {
    for (std::size_t i = 0; i < node.size(); ++i) {
      flatten(node[i], path + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out << path << '\t' << (node.is_string() ? node.get<std::string>() : node.dump())
        << '\n';
  }
}

}  // namespace

Json score_report(const CorpusScore& score, const Corpus& human, const Corpus& model,
                  const ScoreRunInfo& info) {
  Json doc = Json::object();
  for (Metric m : kAllMetrics) {
    doc[std::string(to_string(m))] = number_or_null(score[m].mean);
  }
  doc["n_pairs"] = score.n_pairs;
  Json counts = Json::object();
  for (Metric m : kAllMetrics) counts[std::string(to_string(m))] = score[m].defined_count;
  doc["defined_counts"] = counts;
  Json ci = Json::object();
  for (Metric m : kAllMetrics) {
    const auto& c = score[m].ci;
    ci[std::string(to_string(m))] = c ? Json::array({c->first, c->second}) : Json(nullptr);
  }
  doc["ci"] = ci;
  doc["pairing"] = std::string(to_string(score.pairing));
  doc["n_c"] = score.n_c;
  doc["seed"] = info.seed;
  doc["bootstrap"] = info.bootstrap_b;
  doc["level"] = info.level;
  doc["drop_dc"] = info.drop_dc;
  doc["human"] = info.human_label;
  doc["model"] = info.model_label;
  if (info.per_pair) {
    Json pairs = Json::array();
    for (std::size_t k = 0; k < score.pairs.size(); ++k) {
      const auto& [i, j] = score.pairs[k];
      Json p = Json::object();
      p["human_id"] = human.records[i].id;
      p["model_id"] = model.records[j].id;
      for (Metric m : kAllMetrics) {
        p[std::string(to_string(m))] = number_or_null(score.pair_scores[k][m]);
      }
      pairs.push_back(std::move(p));
    }
    doc["pairs"] = std::move(pairs);
  }
  return doc;
}

Json spectrum_line(const Spectrum& s) {
  Json doc = Json::object();
  doc["id"] = s.source_id;
  doc["freqs"] = s.freqs;
  doc["mags"] = s.mags;
  return doc;
}

Json adf_report(const StationarityReport& report, const Corpus& corpus) {
  Json doc = Json::object();
  doc["fraction"] = report.fraction;
  doc["n_tested"] = report.n_tested;
  doc["n_stationary"] = report.n_stationary;
  doc["n_excluded"] = report.n_excluded;
  Json records = Json::array();
  for (std::size_t i = 0; i < corpus.records.size(); ++i) {
    Json r = Json::object();
    r["id"] = corpus.records[i].id;
    if (const auto& res = report.per_record[i]) {
      r["statistic"] = res->statistic;
      r["p_value"] = res->p_value;
      r["lag_order"] = res->lag_order;
      r["stationary"] = res->stationary_at_05;
    } else {
      r["excluded"] = true;
    }
    records.push_back(std::move(r));
  }
  doc["records"] = std::move(records);
  return doc;
}

Json bt_report(const BtRatings& ratings) {
  Json doc = Json::object();
  Json betas = Json::object();
  for (const auto& [id, beta] : ratings.betas) betas[id] = beta;
  doc["betas"] = std::move(betas);
  doc["log_likelihood"] = ratings.log_likelihood;
  doc["converged"] = ratings.converged;
  doc["iterations"] = ratings.iterations;
  doc["scale"] = ratings.scale;
  return doc;
}

Json baseline_json(const BaselineReport& report) {
  Json doc = Json::object();
  doc["perplexity"] = report.perplexity;
  doc["repetition"] = {{"2", report.repetition[0]},
                       {"3", report.repetition[1]},
                       {"4", report.repetition[2]}};
  doc["diversity"] = report.diversity;
  doc["zipf"] = number_or_null(report.zipf);
  return doc;
}

Json aggregate_report(const AggregateSpectrum& agg, const ExtremaReport& extrema) {
  Json doc = Json::object();
  doc["n"] = agg.n;
  doc["grid"] = agg.grid;
  doc["mean"] = agg.mean_mags;
  doc["smoothed"] = agg.smoothed ? Json(*agg.smoothed) : Json(nullptr);
  if (agg.band) {
    Json band = Json::array();
    for (const auto& [lo, hi] : *agg.band) band.push_back(Json::array({lo, hi}));
    doc["band"] = std::move(band);
  }
  doc["peaks"] = extrema_json(extrema.peaks);
  doc["troughs"] = extrema_json(extrema.troughs);
  doc["periods"] = extrema.periods;
  return doc;
}

std::string to_table(const Json& doc) {
  std::ostringstream out;
  flatten(doc, "", out);
  return out.str();
}

}  // namespace face::cli
