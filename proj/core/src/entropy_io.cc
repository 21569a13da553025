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

#include "face/entropy_io.h"

#include <cmath>
#include <istream>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "face/error.h"

namespace face {
namespace {

using Json = nlohmann::ordered_json;

std::optional<std::string> optional_string(const Json& obj, const char* key,
                                           std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    throw ParseError(line, std::string("'") + key + "' must be a string or null");
  }
  return it->get<std::string>();
}

EntropySequence decode(const Json& obj, std::size_t line) {
  if (!obj.is_object()) throw ParseError(line, "expected a JSON object");

  EntropySequence rec;
  auto id = obj.find("id");
  if (id == obj.end() || !id->is_string()) {
    throw ParseError(line, "missing string field 'id'");
  }
  rec.id = id->get<std::string>();

  auto source = obj.find("source");
  if (source == obj.end() || !source->is_string()) {
    throw ParseError(line, "missing string field 'source'");
  }
  try {
    rec.source = parse_source(source->get<std::string>());
  } catch (const InvalidArgument& e) {
    throw ParseError(line, e.what());
  }

  rec.model_name = optional_string(obj, "model", line);
  rec.prompt_id = optional_string(obj, "prompt_id", line);

  if (auto tokens = obj.find("tokens"); tokens != obj.end() && !tokens->is_null()) {
    if (!tokens->is_array()) throw ParseError(line, "'tokens' must be an array");
    std::vector<std::string> out;
    out.reserve(tokens->size());
    for (const auto& t : *tokens) {
      if (!t.is_string()) throw ParseError(line, "'tokens' entries must be strings");
      out.push_back(t.get<std::string>());
    }
    rec.tokens = std::move(out);
  }

  auto ce = obj.find("ce");
  if (ce == obj.end() || !ce->is_array()) {
    throw ParseError(line, "missing array field 'ce'");
  }
  rec.ce.reserve(ce->size());
  for (const auto& v : *ce) {
    if (!v.is_number()) throw ParseError(line, "'ce' entries must be numbers");
    rec.ce.push_back(v.get<double>());
  }
  return rec;
}

Json encode(const EntropySequence& rec) {
  Json obj = Json::object();
  obj["id"] = rec.id;
  obj["source"] = std::string(to_string(rec.source));
  obj["model"] = rec.model_name ? Json(*rec.model_name) : Json(nullptr);
  obj["prompt_id"] = rec.prompt_id ? Json(*rec.prompt_id) : Json(nullptr);
  obj["tokens"] = rec.tokens ? Json(*rec.tokens) : Json(nullptr);
  obj["ce"] = rec.ce;
  return obj;
}

bool is_blank(std::string_view s) {
  return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

std::string_view to_string(Source source) {
  return source == Source::kHuman ? "human" : "model";
}

Source parse_source(std::string_view text) {
  if (text == "human") return Source::kHuman;
  if (text == "model") return Source::kModel;
  throw InvalidArgument("source must be \"human\" or \"model\", got \"" +
                        std::string(text) + "\"");
}

void validate(const EntropySequence& record) {
  if (record.id.empty()) throw ValidationError(record.id, "id", "empty id");
  if (record.ce.size() < kMinSequenceLength) {
    throw ValidationError(record.id, "ce",
                          "length " + std::to_string(record.ce.size()) +
                              " is below the minimum of 2");
  }
  for (std::size_t i = 0; i < record.ce.size(); ++i) {
    const double v = record.ce[i];
    const std::string field = "ce[" + std::to_string(i) + "]";
    if (!std::isfinite(v)) throw ValidationError(record.id, field, "not finite");
    if (v < 0.0) throw ValidationError(record.id, field, "negative");
    if (v != 0.0 && (v < kMinPositiveCrossEntropy || v > kMaxCrossEntropy)) {
      throw ValidationError(record.id, field, "outside the supported magnitude range");
    }
  }
  if (record.tokens && record.tokens->size() != record.ce.size() + 1) {
    throw ValidationError(
        record.id, "tokens",
        "length " + std::to_string(record.tokens->size()) +
            " must be ce length + 1 = " + std::to_string(record.ce.size() + 1));
  }
}

void validate(const Corpus& corpus) {
  std::unordered_set<std::string_view> seen;
  for (const auto& rec : corpus.records) {
    validate(rec);
    if (!seen.insert(rec.id).second) {
      throw ValidationError(rec.id, "id", "duplicate id");
    }
  }
}

Corpus parse_entropy_records(std::istream& in, std::string label) {
  Corpus corpus;
  corpus.label = std::move(label);
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line)) continue;
    Json obj;
    try {
      obj = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw ParseError(line_no, std::string("malformed JSON: ") + e.what());
    }
    EntropySequence rec = decode(obj, line_no);
    validate(rec);
    if (!seen.insert(rec.id).second) {
      throw ValidationError(rec.id, "id", "duplicate id");
    }
    corpus.records.push_back(std::move(rec));
  }
  return corpus;
}

Corpus parse_entropy_records(std::string_view text, std::string label) {
  std::istringstream in{std::string(text)};
  return parse_entropy_records(in, std::move(label));
}

void write_entropy_records(const Corpus& corpus, std::ostream& out) {
  for (const auto& rec : corpus.records) {
    out << encode(rec).dump() << '\n';
  }
}

std::string write_entropy_records(const Corpus& corpus) {
  std::ostringstream out;
  write_entropy_records(corpus, out);
  return out.str();
}

}  // namespace face
