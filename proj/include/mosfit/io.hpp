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

#ifndef MOSFIT_IO_HPP_
#define MOSFIT_IO_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "mosfit/metrics.hpp"
#include "mosfit/ratings.hpp"

namespace mosfit {

enum class DatasetFormat { kAuto, kCsv, kJsonl };

// Ratings dataset, one record per sample:
//   CSV:   sample_id,rating_1,...,rating_N  (ragged rows allowed; an
//          optional header row is detected by a non-numeric second field)
//   JSONL: {"sample_id": "...", "ratings": [...]}
// Format kAuto picks JSONL when the first non-blank line starts with '{'.
// Parse errors report the offending line number and sample id.
std::vector<RatingSet> read_dataset(const std::string& path,
                                    int scale_max = kDefaultScaleMax,
                                    DatasetFormat format = DatasetFormat::kAuto);

void write_dataset_csv(const std::string& path,
                       const std::vector<RatingSet>& data);
void write_dataset_jsonl(const std::string& path,
                         const std::vector<RatingSet>& data);

// CSV `sample_id,score` (optional header).
std::vector<ScoredSample> read_scores(const std::string& path);

// CSV `pair_id,id_a,id_b,vote_1,...` with votes in
// {A_sure, A_unsure, B_unsure, B_sure}.
std::vector<PreferenceAnnotation> read_annotations(const std::string& path);

// CSV `id_a,id_b,label` with label A or B.
std::vector<PreferencePair> read_pairs(const std::string& path);
void write_pairs(const std::string& path,
                 const std::vector<PreferencePair>& pairs);

// Shortest decimal form with the given significant digits (default 12),
// chosen so re-parsing recovers the printed value.
std::string format_double(double x, int significant_digits = 12);

// FNV-1a 64-bit digest of a file's bytes, as "fnv1a64:<hex>".
// Throws InputError when the file cannot be read.
std::string file_digest(const std::string& path);

}  // namespace mosfit

#endif  // MOSFIT_IO_HPP_
