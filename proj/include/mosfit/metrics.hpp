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

#ifndef MOSFIT_METRICS_HPP_
#define MOSFIT_METRICS_HPP_

#include <string>
#include <vector>

namespace mosfit {

struct ScoredSample {
  std::string sample_id;
  double score = 0.0;
};

// One annotator's choice when comparing two samples played in sequence.
enum class Vote { kASure, kAUnsure, kBUnsure, kBSure };

// Throws InputError for unknown tokens. Accepted spellings:
// A_sure, A_unsure, B_unsure, B_sure.
Vote parse_vote(const std::string& token);
std::string vote_name(Vote v);

struct PreferenceAnnotation {
  std::string pair_id;
  std::string id_a;
  std::string id_b;
  std::vector<Vote> votes;
};

enum class PrefLabel { kAPreferred, kBPreferred };

// A screened binary ordering between two samples.
struct PreferencePair {
  std::string id_a;
  std::string id_b;
  PrefLabel label = PrefLabel::kAPreferred;
};

// Pearson linear correlation of the id-aligned score vectors.
// Throws InputError when the id sets differ or fewer than 2 samples are
// given; UndefinedMetricError when either side has zero variance.
double lcc(const std::vector<ScoredSample>& pred,
           const std::vector<ScoredSample>& truth);

// Spearman rank correlation: Pearson on fractional average ranks
// (ties share the mean of their positions in the sorted order).
double srcc(const std::vector<ScoredSample>& pred,
            const std::vector<ScoredSample>& truth);

// Fractional average ranks of a score vector, 1-based.
std::vector<double> average_ranks(const std::vector<double>& values);

// Keep A>B when at least min_agree annotators voted A_sure or A_unsure and
// nobody voted B_sure; mirrored for A<B. Pairs meeting neither rule are
// dropped.
std::vector<PreferencePair> screen_preferences(
    const std::vector<PreferenceAnnotation>& annotations, int min_agree = 3);

// Fraction of pairs whose predicted score ordering matches the label.
// A tied prediction counts as incorrect. Throws UndefinedMetricError on an
// empty pair list; InputError when a pair references an unknown id.
double ppref(const std::vector<ScoredSample>& pred,
             const std::vector<PreferencePair>& pairs);

}  // namespace mosfit

#endif  // MOSFIT_METRICS_HPP_
