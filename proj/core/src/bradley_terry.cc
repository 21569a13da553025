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

// Bradley-Terry strengths by the minorization-maximization update of
// Hunter (2004), on the scaled logistic P(i beats j) = 1/(1+exp(-(bi-bj)/s)).

#include "face/bradley_terry.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>

#include <nlohmann/json.hpp>

#include "face/error.h"

namespace face {
namespace {

struct Tally {
  std::vector<std::string> items;            // sorted
  std::vector<std::vector<double>> wins;     // wins[i][j]: i over j, ties halved
};

Tally tally(const std::vector<Judgment>& judgments) {
  std::map<std::string, std::size_t> index;
  for (const auto& j : judgments) {
    if (j.a == j.b) throw InvalidArgument("judgment compares '" + j.a + "' with itself");
    index.emplace(j.a, 0);
    index.emplace(j.b, 0);
  }
  Tally t;
  for (auto& [name, idx] : index) {
    idx = t.items.size();
    t.items.push_back(name);
  }
  const std::size_t n = t.items.size();
  t.wins.assign(n, std::vector<double>(n, 0.0));
  for (const auto& j : judgments) {
    const std::size_t a = index.at(j.a), b = index.at(j.b);
    switch (j.winner) {
      case Winner::kA: t.wins[a][b] += 1.0; break;
      case Winner::kB: t.wins[b][a] += 1.0; break;
      case Winner::kTie:
        t.wins[a][b] += 0.5;
        t.wins[b][a] += 0.5;
        break;
    }
  }
  return t;
}

bool connected(const std::vector<std::vector<double>>& w) {
  const std::size_t n = w.size();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      if (!seen[j] && w[i][j] + w[j][i] > 0.0) {
        seen[j] = true;
        stack.push_back(j);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// log P(i beats j) for strength difference d (already divided by scale).
double log_sigmoid(double d) {
  return d >= 0.0 ? -std::log1p(std::exp(-d)) : d - std::log1p(std::exp(d));
}

double log_likelihood(const std::vector<std::vector<double>>& w,
                      const std::vector<double>& betas, double scale) {
  double ll = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (i != j && w[i][j] > 0.0) {
        ll += w[i][j] * log_sigmoid((betas[i] - betas[j]) / scale);
      }
    }
  }
  return ll;
}

std::vector<std::vector<double>> with_prior(std::vector<std::vector<double>> w,
                                            double prior) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (i != j) w[i][j] += prior;
    }
  }
  return w;
}

}  // namespace

double win_probability(double beta_diff, double scale) {
  return 1.0 / (1.0 + std::exp(-beta_diff / scale));
}

BtRatings bt_fit(const std::vector<Judgment>& judgments, const BtOptions& options) {
  if (!(options.scale > 0.0)) throw InvalidArgument("BT scale must be positive");
  if (options.prior_pseudocount < 0.0) {
    throw InvalidArgument("BT prior pseudocount must be non-negative");
  }
  Tally t = tally(judgments);
  const std::size_t n = t.items.size();
  if (n < 2) throw InvalidArgument("BT fit needs at least 2 items");

  const auto w = with_prior(t.wins, options.prior_pseudocount);
  if (!connected(w)) {
    throw InvalidArgument("comparison graph is disconnected; use a positive prior");
  }

  std::vector<double> total_wins(n, 0.0);
  std::vector<std::vector<double>> games(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      total_wins[i] += w[i][j];
      games[i][j] = w[i][j] + w[j][i];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(total_wins[i] > 0.0)) {
      throw InvalidArgument("item '" + t.items[i] +
                            "' never wins; its strength diverges without a prior");
    }
  }

  // gamma_i = exp(beta_i / scale), kept normalized to geometric mean 1.
  std::vector<double> gamma(n, 1.0), next(n);
  BtRatings out;
  out.scale = options.scale;
  auto gradient_norm = [&](const std::vector<double>& g) {
    double norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double grad = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        grad += w[i][j] - games[i][j] * g[i] / (g[i] + g[j]);
      }
      grad /= options.scale;
      norm2 += grad * grad;
    }
    return std::sqrt(norm2);
  };

  std::size_t iter = 0;
  while (iter < options.max_iterations) {
    if (gradient_norm(gamma) < options.gradient_tolerance) {
      out.converged = true;
      break;
    }
    for (std::size_t i = 0; i < n; ++i) {
      double denom = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && games[i][j] > 0.0) denom += games[i][j] / (gamma[i] + gamma[j]);
      }
      next[i] = total_wins[i] / denom;
    }
    double log_sum = 0.0;
    for (double g : next) log_sum += std::log(g);
    const double center = std::exp(log_sum / static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i) gamma[i] = next[i] / center;
    ++iter;
  }
  if (!out.converged && gradient_norm(gamma) < options.gradient_tolerance) {
    out.converged = true;
  }
  out.iterations = std::max<std::size_t>(iter, 1);

  std::vector<double> betas(n);
  for (std::size_t i = 0; i < n; ++i) betas[i] = options.scale * std::log(gamma[i]);
  const double shift =
      std::accumulate(betas.begin(), betas.end(), 0.0) / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    betas[i] -= shift;
    out.betas[t.items[i]] = betas[i];
  }
  out.log_likelihood = log_likelihood(t.wins, betas, options.scale);
  return out;
}

double predict_win(const BtRatings& ratings, const std::string& i,
                   const std::string& j) {
  auto bi = ratings.betas.find(i);
  auto bj = ratings.betas.find(j);
  if (bi == ratings.betas.end()) throw InvalidArgument("unrated item '" + i + "'");
  if (bj == ratings.betas.end()) throw InvalidArgument("unrated item '" + j + "'");
  return win_probability(bi->second - bj->second, ratings.scale);
}

double bt_penalized_log_likelihood(const std::vector<Judgment>& judgments,
                                   const std::vector<std::string>& items,
                                   const std::vector<double>& betas,
                                   const BtOptions& options) {
  if (items.size() != betas.size()) {
    throw InvalidArgument("items and betas must have equal length");
  }
  Tally t = tally(judgments);
  std::map<std::string, double> by_name;
  for (std::size_t i = 0; i < items.size(); ++i) by_name[items[i]] = betas[i];
  std::vector<double> ordered(t.items.size());
  for (std::size_t i = 0; i < t.items.size(); ++i) {
    auto it = by_name.find(t.items[i]);
    if (it == by_name.end()) throw InvalidArgument("missing beta for '" + t.items[i] + "'");
    ordered[i] = it->second;
  }
  return log_likelihood(with_prior(t.wins, options.prior_pseudocount), ordered,
                        options.scale);
}

std::vector<Judgment> parse_judgments(std::istream& in) {
  std::vector<Judgment> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(line_no, std::string("malformed JSON: ") + e.what());
    }
    if (!obj.is_object()) throw ParseError(line_no, "expected a JSON object");
    auto field = [&](const char* key) {
      auto it = obj.find(key);
      if (it == obj.end() || !it->is_string()) {
        throw ParseError(line_no, std::string("missing string field '") + key + "'");
      }
      return it->get<std::string>();
    };
    Judgment j;
    j.a = field("a");
    j.b = field("b");
    const std::string winner = field("winner");
    if (winner == "a") {
      j.winner = Winner::kA;
    } else if (winner == "b") {
      j.winner = Winner::kB;
    } else if (winner == "tie") {
      j.winner = Winner::kTie;
    } else {
      throw ParseError(line_no, "winner must be \"a\", \"b\" or \"tie\"");
    }
    if (j.a == j.b) throw ParseError(line_no, "a and b must differ");
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace face
