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

#include "cli.h"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "face/aggregate.h"
#include "face/baselines.h"
#include "face/bradley_terry.h"
#include "face/entropy_io.h"
#include "face/error.h"
#include "face/metrics.h"
#include "face/spectrum.h"
#include "face/stats.h"
#include "face/synth.h"
#include "report.h"

namespace face::cli {
namespace {

// Bad flag values detected after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string out_path;
  std::string format = "json";
  std::uint64_t seed = 32;
};

void add_common(CLI::App* cmd, Common& common, bool with_seed) {
  cmd->add_option("--out", common.out_path, "Write the report to PATH instead of stdout");
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));
  if (with_seed) {
    cmd->add_option("--seed", common.seed, "Random seed (default 32)")
        ->envname("FACE_SEED");
  }
}

std::size_t parse_nc(const std::string& text) {
  if (text == "auto") return kAutoLength;
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    throw UsageError("--nc must be 'auto' or an integer >= 2, got '" + text + "'");
  }
  if (pos != text.size() || v < 2) {
    throw UsageError("--nc must be 'auto' or an integer >= 2, got '" + text + "'");
  }
  return static_cast<std::size_t>(v);
}

Tone parse_tone(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t pos = 0;
      parts.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--tone expects FREQ:AMP[:PHASE], got '" + text + "'");
    }
  }
  if (parts.size() < 2 || parts.size() > 3) {
    throw UsageError("--tone expects FREQ:AMP[:PHASE], got '" + text + "'");
  }
  return Tone{parts[0], parts[1], parts.size() == 3 ? parts[2] : 0.0};
}

// Holds stdin so that at most one input per invocation reads from it.
class InputSource {
 public:
  explicit InputSource(std::istream& in) : in_(in) {}

  template <typename Fn>
  auto with_stream(const std::string& path, Fn&& fn) {
    if (path == "-") {
      if (stdin_used_) throw UsageError("only one input may be read from stdin");
      stdin_used_ = true;
      return fn(in_);
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open '" + path + "'");
    return fn(file);
  }

  Corpus corpus(const std::string& path) {
    return with_stream(path, [&](std::istream& s) {
      return parse_entropy_records(s, path == "-" ? "stdin" : path);
    });
  }

  Json json(const std::string& path) {
    return with_stream(path, [&](std::istream& s) {
      try {
        return Json::parse(s);
      } catch (const Json::parse_error& e) {
        throw Error("'" + path + "': malformed JSON: " + e.what());
      }
    });
  }

 private:
  std::istream& in_;
  bool stdin_used_ = false;
};

std::string render(const Json& doc, const std::string& format) {
  if (format == "table") return to_table(doc);
  return doc.dump(2) + "\n";
}

std::string render_lines(const std::vector<Json>& docs, const std::string& format) {
  std::string out;
  for (const auto& d : docs) out += format == "table" ? to_table(d) + "\n" : d.dump() + "\n";
  return out;
}

std::vector<double> values_in_order(const std::map<std::string, double>& m,
                                             const std::vector<std::string>& keys) {
  std::vector<double> out;
  for (const auto& k : keys) out.push_back(m.at(k));
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Fourier analysis of cross-entropy: spectral similarity of "
               "human and model text",
               "face"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "face 0.1.0");

  Common common;

  // score
  std::string human_path, model_path, pairing = "by_index", nc_text = "auto";
  bool drop_dc_flag = false, per_pair = false;
  std::size_t bootstrap_b = 1000;
  double level = 0.95;
  auto* score = app.add_subcommand("score", "FACE scores between a human and a model corpus");
  score->add_option("--human", human_path, "Human entropy JSON Lines")->required();
  score->add_option("--model", model_path, "Model entropy JSON Lines")->required();
  score->add_option("--pairing", pairing, "How records are paired")
      ->check(CLI::IsMember({"by_prompt", "by_index", "random", "random_seeded"}));
  score->add_option("--nc", nc_text, "Common spectrum length: auto or INT");
  score->add_flag("--drop-dc", drop_dc_flag, "Exclude the zero-frequency bin");
  score->add_option("--bootstrap", bootstrap_b, "Bootstrap resamples (0 disables CIs)");
  score->add_option("--level", level, "Confidence level")->check(CLI::Range(0.0, 1.0));
  score->add_flag("--per-pair", per_pair, "Include every pair's scores");
  add_common(score, common, true);

  // spectrum
  std::string input_path = "-";
  auto* spectrum = app.add_subcommand("spectrum", "Dump one-sided real-part spectra");
  spectrum->add_option("input", input_path, "Entropy JSON Lines ('-' for stdin)");
  spectrum->add_flag("--drop-dc", drop_dc_flag, "Exclude the zero-frequency bin");
  add_common(spectrum, common, false);

  // adf
  std::optional<std::size_t> max_lag;
  bool fixed_lag = false;
  auto* adf = app.add_subcommand("adf", "Augmented Dickey-Fuller stationarity screen");
  adf->add_option("input", input_path, "Entropy JSON Lines ('-' for stdin)");
  adf->add_option("--max-lag", max_lag, "Largest lag (default: Schwert rule)");
  adf->add_flag("--fixed-lag", fixed_lag, "Use --max-lag as is instead of AIC selection");
  add_common(adf, common, false);

  // bt
  BtOptions bt_options;
  auto* bt = app.add_subcommand("bt", "Fit Bradley-Terry strengths to pairwise judgments");
  bt->add_option("input", input_path, "Judgment JSON Lines ('-' for stdin)");
  bt->add_option("--prior", bt_options.prior_pseudocount, "Symmetric pseudo-wins per pair")
      ->check(CLI::NonNegativeNumber);
  bt->add_option("--scale", bt_options.scale, "Logistic scale")->check(CLI::PositiveNumber);
  bt->add_option("--max-iter", bt_options.max_iterations, "Iteration cap");
  add_common(bt, common, false);

  // baselines
  auto* baselines = app.add_subcommand("baselines",
                                       "Perplexity, repetition, diversity and Zipf per record");
  baselines->add_option("input", input_path, "Entropy JSON Lines with tokens ('-' for stdin)");
  add_common(baselines, common, false);

  // aggregate
  bool absolute = false;
  double bandwidth = 0.1;
  std::optional<double> min_prominence;
  std::size_t band_b = 0;
  std::string csv_path;
  auto* aggregate = app.add_subcommand("aggregate",
                                       "Mean spectrum, smoothing, peaks and troughs");
  aggregate->add_option("input", input_path, "Entropy JSON Lines ('-' for stdin)");
  aggregate->add_option("--nc", nc_text, "Common spectrum length: auto or INT");
  aggregate->add_flag("--absolute", absolute, "Average absolute magnitudes");
  aggregate->add_option("--bandwidth", bandwidth, "Smoother span fraction in (0, 1]");
  aggregate->add_option("--min-prominence", min_prominence,
                        "Extrema prominence threshold (default 1% of range)");
  aggregate->add_option("--band", band_b, "Bootstrap resamples for a per-bin band");
  aggregate->add_option("--csv", csv_path, "Also write grid,mean,smoothed as CSV");
  add_common(aggregate, common, true);

  // synth
  SynthSpec synth_spec;
  std::size_t count = 10;
  std::vector<std::string> tone_texts;
  std::string source_text = "model";
  auto* synth = app.add_subcommand("synth", "Generate a synthetic entropy corpus");
  synth->add_option("--length", synth_spec.length, "Sequence length");
  synth->add_option("--count", count, "Number of records");
  synth->add_option("--mean-level", synth_spec.mean_level, "Mean cross-entropy (nats)");
  synth->add_option("--tone", tone_texts, "FREQ:AMP[:PHASE], repeatable");
  synth->add_option("--noise", synth_spec.noise_std, "AR(1) innovation std");
  synth->add_option("--ar", synth_spec.ar_coeff, "AR(1) coefficient in [0, 1)");
  synth->add_option("--source", source_text, "human or model")
      ->check(CLI::IsMember({"human", "model"}));
  synth->add_option("--id-prefix", synth_spec.id_prefix, "Record id prefix");
  synth->add_option("--model-name", synth_spec.model_name, "Value for the model field");
  add_common(synth, common, true);

  // corr
  std::string scores_path, bt_path, judgments_path, metric = "so";
  auto* corr = app.add_subcommand(
      "corr", "Spearman correlation of a metric column against Bradley-Terry strengths");
  corr->add_option("--scores", scores_path,
                   "JSON Lines {\"system\": ID, METRIC: number, ...}")
      ->required();
  corr->add_option("--metric", metric, "Column of --scores to correlate");
  auto* bt_opt = corr->add_option("--bt", bt_path, "Output of `face bt`");
  auto* judg_opt = corr->add_option("--judgments", judgments_path,
                                    "Judgment JSON Lines, fitted with default options");
  bt_opt->excludes(judg_opt);
  add_common(corr, common, false);

  try {
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << "face 0.1.0\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "face: " << e.what() << "\n";
    return kExitUsage;
  }

  InputSource inputs(in);
  std::string report;
  try {
    if (score->parsed()) {
      CorpusScoreOptions opt;
      opt.pairing = parse_pairing(pairing);
      opt.n_c = parse_nc(nc_text);
      opt.drop_dc = drop_dc_flag;
      opt.seed = common.seed;
      opt.bootstrap_b = bootstrap_b;
      opt.ci_level = level;
      if (bootstrap_b != 0 && bootstrap_b < 100) {
        throw UsageError("--bootstrap must be 0 or at least 100");
      }
      const Corpus human = inputs.corpus(human_path);
      const Corpus model = inputs.corpus(model_path);
      const CorpusScore result = face_score_corpus(human, model, opt);
      ScoreRunInfo info{common.seed, bootstrap_b, level, drop_dc_flag,
                        human.label, model.label, per_pair};
      report = render(score_report(result, human, model, info), common.format);
    } else if (spectrum->parsed()) {
      const Corpus corpus = inputs.corpus(input_path);
      std::vector<Json> lines;
      for (const auto& rec : corpus.records) {
        Spectrum s = dft_real(rec.ce, rec.id);
        if (drop_dc_flag) s = drop_dc(s);
        lines.push_back(spectrum_line(s));
      }
      report = render_lines(lines, common.format);
    } else if (adf->parsed()) {
      if (fixed_lag && !max_lag) throw UsageError("--fixed-lag needs --max-lag");
      AdfOptions opt;
      opt.max_lag = max_lag;
      opt.autolag = !fixed_lag;
      const Corpus corpus = inputs.corpus(input_path);
      report = render(adf_report(stationary_fraction(corpus, opt), corpus), common.format);
    } else if (bt->parsed()) {
      auto judgments = inputs.with_stream(
          input_path, [](std::istream& s) { return parse_judgments(s); });
      report = render(bt_report(bt_fit(judgments, bt_options)), common.format);
    } else if (baselines->parsed()) {
      const Corpus corpus = inputs.corpus(input_path);
      std::vector<Json> lines;
      for (const auto& rec : corpus.records) {
        Json line = Json::object();
        line["id"] = rec.id;
        for (auto& [k, v] : baseline_json(baseline_report(rec)).items()) line[k] = v;
        lines.push_back(std::move(line));
      }
      lines.push_back(Json{{"summary", baseline_json(corpus_baselines(corpus))}});
      report = render_lines(lines, common.format);
    } else if (aggregate->parsed()) {
      if (!(bandwidth > 0.0 && bandwidth <= 1.0)) {
        throw UsageError("--bandwidth must lie in (0, 1]");
      }
      MeanSpectrumOptions opt;
      opt.n_c = parse_nc(nc_text);
      opt.absolute = absolute;
      opt.band_bootstrap = band_b;
      opt.seed = common.seed;
      const Corpus corpus = inputs.corpus(input_path);
      std::vector<Spectrum> spectra;
      spectra.reserve(corpus.records.size());
      for (const auto& rec : corpus.records) spectra.push_back(dft_real(rec.ce, rec.id));
      AggregateSpectrum agg = smooth(mean_spectrum(spectra, opt), bandwidth);
      ExtremaReport extrema = find_extrema(agg, min_prominence);
      report = render(aggregate_report(agg, extrema), common.format);
      if (!csv_path.empty()) {
        std::ofstream csv(csv_path, std::ios::binary);
        if (!csv) throw Error("cannot write '" + csv_path + "'");
        csv << "frequency,mean,smoothed\n";
        for (std::size_t k = 0; k < agg.grid.size(); ++k) {
          csv << Json(agg.grid[k]).dump() << ',' << Json(agg.mean_mags[k]).dump() << ','
              << Json((*agg.smoothed)[k]).dump() << '\n';
        }
      }
    } else if (synth->parsed()) {
      for (const auto& t : tone_texts) synth_spec.tones.push_back(parse_tone(t));
      synth_spec.source = parse_source(source_text);
      synth_spec.seed = common.seed;
      try {
        validate(synth_spec);
      } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
      }
      if (count < 1) throw UsageError("--count must be at least 1");
      report = write_entropy_records(generate(synth_spec, count));
    } else if (corr->parsed()) {
      if (bt_path.empty() == judgments_path.empty()) {
        throw UsageError("corr needs exactly one of --bt or --judgments");
      }
      std::map<std::string, double> strengths;
      if (!bt_path.empty()) {
        const Json doc = inputs.json(bt_path);
        if (!doc.contains("betas") || !doc["betas"].is_object()) {
          throw Error("'" + bt_path + "' has no \"betas\" object");
        }
        for (const auto& [k, v] : doc["betas"].items()) {
          if (!v.is_number()) throw Error("beta for '" + k + "' is not a number");
          strengths[k] = v.get<double>();
        }
      } else {
        auto judgments = inputs.with_stream(
            judgments_path, [](std::istream& s) { return parse_judgments(s); });
        strengths = bt_fit(judgments).betas;
      }
      std::map<std::string, double> metric_values;
      inputs.with_stream(scores_path, [&](std::istream& s) {
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(s, line)) {
          ++line_no;
          if (!line.empty() && line.back() == '\r') line.pop_back();
          if (line.find_first_not_of(" \t") == std::string::npos) continue;
          Json obj;
          try {
            obj = Json::parse(line);
          } catch (const Json::parse_error& e) {
            throw ParseError(line_no, std::string("malformed JSON: ") + e.what());
          }
          if (!obj.is_object() || !obj.contains("system") || !obj["system"].is_string()) {
            throw ParseError(line_no, "missing string field 'system'");
          }
          if (!obj.contains(metric) || !obj[metric].is_number()) {
            throw ParseError(line_no, "missing numeric field '" + metric + "'");
          }
          const auto system = obj["system"].get<std::string>();
          if (!metric_values.emplace(system, obj[metric].get<double>()).second) {
            throw ParseError(line_no, "system '" + system + "' repeats");
          }
        }
        return 0;
      });
      std::vector<std::string> systems;
      for (const auto& [system, v] : metric_values) {
        if (!strengths.count(system)) {
          throw Error("system '" + system + "' has no Bradley-Terry strength");
        }
        systems.push_back(system);
      }
      const auto xs = values_in_order(metric_values, systems);
      const auto ys = values_in_order(strengths, systems);
      Json doc = Json::object();
      doc["metric"] = metric;
      doc["spearman"] = rank_correlation(xs, ys);
      doc["n"] = systems.size();
      doc["systems"] = systems;
      report = render(doc, common.format);
    }
  } catch (const UsageError& e) {
    err << "face: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "face: " << e.what() << "\n";
    return kExitDataError;
  }

  if (!common.out_path.empty()) {
    std::ofstream file(common.out_path, std::ios::binary);
    if (!file || !(file << report)) {
      err << "face: cannot write '" << common.out_path << "'\n";
      return kExitDataError;
    }
  } else {
    out << report;
  }
  return kExitOk;
}

}  // namespace face::cli
