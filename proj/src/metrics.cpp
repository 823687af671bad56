// Copyright 2026 The mosfit Authors. All Rights Reserved.
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

#include "mosfit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "mosfit/errors.hpp"

namespace mosfit {

namespace {

// Align truth scores to the order of pred by sample id.
std::pair<std::vector<double>, std::vector<double>> align(
    const std::vector<ScoredSample>& pred,
    const std::vector<ScoredSample>& truth) {
  if (pred.size() != truth.size() || pred.size() < 2) {
    throw InputError("correlation: need >= 2 samples with matching id sets");
  }
  std::unordered_map<std::string, double> truth_by_id;
  truth_by_id.reserve(truth.size());
  for (const auto& s : truth) {
    if (!truth_by_id.emplace(s.sample_id, s.score).second) {
      throw InputError("correlation: duplicate truth id '" + s.sample_id + "'");
    }
  }
  std::vector<double> x, y;
  x.reserve(pred.size());
  y.reserve(pred.size());
  for (const auto& s : pred) {
    auto it = truth_by_id.find(s.sample_id);
    if (it == truth_by_id.end()) {
      throw InputError("correlation: id '" + s.sample_id +
                       "' missing from truth");
    }
    x.push_back(s.score);
    y.push_back(it->second);
  }
  return {std::move(x), std::move(y)};
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double dx = x[i] - mx;
    double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw UndefinedMetricError("correlation undefined: zero variance");
  }
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace

Vote parse_vote(const std::string& token) {
  if (token == "A_sure") return Vote::kASure;
  if (token == "A_unsure") return Vote::kAUnsure;
  if (token == "B_unsure") return Vote::kBUnsure;
  if (token == "B_sure") return Vote::kBSure;
  throw InputError("unknown vote token '" + token + "'");
}

std::string vote_name(Vote v) {
  switch (v) {
    case Vote::kASure: return "A_sure";
    case Vote::kAUnsure: return "A_unsure";
    case Vote::kBUnsure: return "B_unsure";
    case Vote::kBSure: return "B_sure";
  }
  return "?";
}

double lcc(const std::vector<ScoredSample>& pred,
           const std::vector<ScoredSample>& truth) {
  auto [x, y] = align(pred, truth);
  return pearson(x, y);
}

std::vector<double> average_ranks(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

double srcc(const std::vector<ScoredSample>& pred,
            const std::vector<ScoredSample>& truth) {
  auto [x, y] = align(pred, truth);
  return pearson(average_ranks(x), average_ranks(y));
}

std::vector<PreferencePair> screen_preferences(
    const std::vector<PreferenceAnnotation>& annotations, int min_agree) {
  std::vector<PreferencePair> pairs;
  for (const auto& ann : annotations) {
    if (ann.votes.empty()) {
      throw InputError("pair '" + ann.pair_id + "': empty vote list");
    }
    if (ann.id_a == ann.id_b) {
      throw InputError("pair '" + ann.pair_id + "': identical sample ids");
    }
    int a_votes = 0, b_votes = 0, a_sure = 0, b_sure = 0;
    for (Vote v : ann.votes) {
      switch (v) {
        case Vote::kASure: ++a_votes; ++a_sure; break;
        case Vote::kAUnsure: ++a_votes; break;
        case Vote::kBUnsure: ++b_votes; break;
        case Vote::kBSure: ++b_votes; ++b_sure; break;
      }
    }
    bool a_wins = a_votes >= min_agree && b_sure == 0;
    bool b_wins = b_votes >= min_agree && a_sure == 0;
    // Both rules can hold with many all-unsure voters; treat as no consensus.
    if (a_wins && !b_wins) {
      pairs.push_back({ann.id_a, ann.id_b, PrefLabel::kAPreferred});
    } else if (b_wins && !a_wins) {
      pairs.push_back({ann.id_a, ann.id_b, PrefLabel::kBPreferred});
    }
  }
  return pairs;
}

double ppref(const std::vector<ScoredSample>& pred,
             const std::vector<PreferencePair>& pairs) {
  if (pairs.empty()) {
    throw UndefinedMetricError("ppref undefined: no preference pairs");
  }
  std::unordered_map<std::string, double> score_by_id;
  score_by_id.reserve(pred.size());
  for (const auto& s : pred) score_by_id[s.sample_id] = s.score;

  std::size_t correct = 0;
  for (const auto& p : pairs) {
    auto ia = score_by_id.find(p.id_a);
    auto ib = score_by_id.find(p.id_b);
    if (ia == score_by_id.end() || ib == score_by_id.end()) {
      throw InputError("ppref: pair references unknown id '" +
                       (ia == score_by_id.end() ? p.id_a : p.id_b) + "'");
    }
    double diff = ia->second - ib->second;
    // diff == 0 cannot match either label.
    if ((p.label == PrefLabel::kAPreferred && diff > 0.0) ||
        (p.label == PrefLabel::kBPreferred && diff < 0.0)) {
      ++correct;
    }
  }
  return static_cast<double>(correct) / static_cast<double>(pairs.size());
}

}  // namespace mosfit
