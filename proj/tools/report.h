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

#ifndef FACE_TOOLS_REPORT_H_
#define FACE_TOOLS_REPORT_H_

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "face/aggregate.h"
#include "face/baselines.h"
#include "face/bradley_terry.h"
#include "face/entropy_io.h"
#include "face/metrics.h"
#include "face/spectrum.h"
#include "face/stats.h"

namespace face::cli {

using Json = nlohmann::ordered_json;

struct ScoreRunInfo {
  std::uint64_t seed = 32;
  std::size_t bootstrap_b = 1000;
  double level = 0.95;
  bool drop_dc = false;
  std::string human_label;
  std::string model_label;
  bool per_pair = false;
};

Json score_report(const CorpusScore& score, const Corpus& human, const Corpus& model,
                  const ScoreRunInfo& info);
Json spectrum_line(const Spectrum& s);
Json adf_report(const StationarityReport& report, const Corpus& corpus);
Json bt_report(const BtRatings& ratings);
Json baseline_json(const BaselineReport& report);
Json aggregate_report(const AggregateSpectrum& agg, const ExtremaReport& extrema);

// Flattens a JSON document into "path<TAB>value" lines.
std::string to_table(const Json& doc);

}  // namespace face::cli

#endif  // FACE_TOOLS_REPORT_H_
