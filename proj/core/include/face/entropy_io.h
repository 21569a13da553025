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

#ifndef FACE_ENTROPY_IO_H_
#define FACE_ENTROPY_IO_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace face {

enum class Source { kHuman, kModel };

std::string_view to_string(Source source);
// Throws InvalidArgument for anything but "human" / "model".
Source parse_source(std::string_view text);

// Per-token cross-entropy (nats) of one text. ce[i] scores token i + 1 given
// tokens 0..i, so a tokenized record has one more token than ce values.
struct EntropySequence {
  std::string id;
  Source source = Source::kHuman;
  std::optional<std::string> model_name;
  std::optional<std::string> prompt_id;
  std::optional<std::vector<std::string>> tokens;
  std::vector<double> ce;

  bool operator==(const EntropySequence&) const = default;
};

struct Corpus {
  std::vector<EntropySequence> records;
  std::string label;

  bool operator==(const Corpus&) const = default;
};

// Nonzero ce values must lie in [kMinPositiveCrossEntropy, kMaxCrossEntropy].
// The upper bound is far above -ln of the smallest positive double (~744.4);
// the lower bound keeps squared magnitudes in the spectrum out of underflow.
inline constexpr double kMinPositiveCrossEntropy = 1e-100;
inline constexpr double kMaxCrossEntropy = 1e4;
inline constexpr std::size_t kMinSequenceLength = 2;

// Throws ValidationError naming the record id and offending field.
void validate(const EntropySequence& record);

// Checks every record and id uniqueness.
void validate(const Corpus& corpus);

// Reads JSON Lines (LF or CRLF), one record per non-blank line. Unknown keys
// are ignored. Throws ParseError for undecodable lines and ValidationError for
// invariant violations or duplicate ids; never returns a partial corpus.
Corpus parse_entropy_records(std::istream& in, std::string label = "");
Corpus parse_entropy_records(std::string_view text, std::string label = "");

// One line per record, LF-terminated, shortest round-trip number formatting.
void write_entropy_records(const Corpus& corpus, std::ostream& out);
std::string write_entropy_records(const Corpus& corpus);

}  // namespace face

#endif  // FACE_ENTROPY_IO_H_
