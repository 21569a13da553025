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

#ifndef FACE_TOOLS_CLI_H_
#define FACE_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace face::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

// Runs one `face` invocation. args[0] is the program name. The report goes
// to `out` (or --out) only when the whole command succeeds; diagnostics go to
// `err`. Paths given as "-" read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace face::cli

#endif  // FACE_TOOLS_CLI_H_
