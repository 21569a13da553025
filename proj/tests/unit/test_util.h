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

#ifndef FACE_TESTS_UNIT_TEST_UTIL_H_
#define FACE_TESTS_UNIT_TEST_UTIL_H_

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace face::testing {

inline std::string data_path(const std::string& name) {
  return std::string(FACE_TEST_DATA_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline std::vector<double> uniform_vector(std::mt19937_64& gen, std::size_t n,
                                          double lo = 0.0, double hi = 5.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(n);
  for (double& x : v) x = dist(gen);
  return v;
}

}  // namespace face::testing

#endif  // FACE_TESTS_UNIT_TEST_UTIL_H_
