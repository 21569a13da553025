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

#ifndef FACE_ERROR_H_
#define FACE_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace face {

// Base class for every error the library raises on bad data or arguments.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A line of JSON Lines input that could not be decoded.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A decoded record that breaks a field invariant.
class ValidationError : public Error {
 public:
  ValidationError(std::string record_id, std::string field,
                  const std::string& what)
      : Error("record '" + record_id + "', " + field + ": " + what),
        record_id_(std::move(record_id)),
        field_(std::move(field)) {}

  const std::string& record_id() const { return record_id_; }
  const std::string& field() const { return field_; }

 private:
  std::string record_id_;
  std::string field_;
};

// A token-based computation was asked of a record that carries no tokens.
class TokensRequiredError : public ValidationError {
 public:
  explicit TokensRequiredError(std::string record_id)
      : ValidationError(std::move(record_id), "tokens",
                        "required for token-based baselines") {}
};

// A similarity metric has no value for its input (zero norm, zero variance,
// all-zero union area).
class UndefinedMetricError : public Error {
 public:
  using Error::Error;
};

// A precondition on an argument failed.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace face

#endif  // FACE_ERROR_H_
