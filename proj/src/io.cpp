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

#include "mosfit/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mosfit/errors.hpp"

namespace mosfit {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

bool parse_int(const std::string& s, int& out) {
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(*begin))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(end[-1]))) --end;
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end && begin != end;
}

bool parse_real(const std::string& s, double& out) {
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(*begin))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(end[-1]))) --end;
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end && begin != end;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot open '" + path + "'");
  }
  return in;
}

std::ofstream create_or_throw(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw InputError("cannot write '" + path + "'");
  }
  return out;
}

[[noreturn]] void line_error(const std::string& path, std::size_t line_no,
                             const std::string& msg) {
  throw InputError(path + ":" + std::to_string(line_no) + ": " + msg);
}

std::vector<RatingSet> read_dataset_csv(std::istream& in,
                                        const std::string& path,
                                        int scale_max) {
  std::vector<RatingSet> out;
  std::string line;
  std::size_t line_no = 0;
  bool first_row = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv(line);
    if (fields.size() < 2) {
      line_error(path, line_no, "expected sample_id plus at least one rating");
    }
    // Header rows have a non-numeric second field; "4.5" is numeric and
    // must fall through to the integer check so it is rejected, not skipped.
    double numeric_probe;
    if (first_row && !parse_real(fields[1], numeric_probe)) {
      first_row = false;
      continue;
    }
    first_row = false;
    RatingSet rs;
    rs.sample_id = fields[0];
    for (std::size_t i = 1; i < fields.size(); ++i) {
      if (fields[i].empty() && i + 1 == fields.size()) continue;  // trailing comma
      int r;
      if (!parse_int(fields[i], r)) {
        line_error(path, line_no, "sample '" + rs.sample_id +
                                      "': rating '" + fields[i] +
                                      "' is not an integer");
      }
      rs.ratings.push_back(r);
    }
    try {
      validate(rs, scale_max);
    } catch (const InputError& e) {
      line_error(path, line_no, e.what());
    }
    out.push_back(std::move(rs));
  }
  return out;
}

std::vector<RatingSet> read_dataset_jsonl(std::istream& in,
                                          const std::string& path,
                                          int scale_max) {
  std::vector<RatingSet> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      line_error(path, line_no, std::string("invalid JSON: ") + e.what());
    }
    if (!rec.is_object() || !rec.contains("sample_id") ||
        !rec.contains("ratings") || !rec["ratings"].is_array()) {
      line_error(path, line_no, "expected {\"sample_id\", \"ratings\": [...]}");
    }
    RatingSet rs;
    rs.sample_id = rec["sample_id"].get<std::string>();
    for (const auto& v : rec["ratings"]) {
      if (!v.is_number_integer()) {
        line_error(path, line_no,
                   "sample '" + rs.sample_id + "': non-integer rating");
      }
      rs.ratings.push_back(v.get<int>());
    }
    try {
      validate(rs, scale_max);
    } catch (const InputError& e) {
      line_error(path, line_no, e.what());
    }
    out.push_back(std::move(rs));
  }
  return out;
}

}  // namespace

std::vector<RatingSet> read_dataset(const std::string& path, int scale_max,
                                    DatasetFormat format) {
  std::ifstream in = open_or_throw(path);
  if (format == DatasetFormat::kAuto) {
    std::string probe;
    std::streampos pos = in.tellg();
    while (std::getline(in, probe)) {
      auto i = probe.find_first_not_of(" \t\r");
      if (i != std::string::npos) {
        format = (probe[i] == '{') ? DatasetFormat::kJsonl : DatasetFormat::kCsv;
        break;
      }
    }
    if (format == DatasetFormat::kAuto) return {};  // empty file
    in.clear();
    in.seekg(pos);
  }
  return format == DatasetFormat::kJsonl
             ? read_dataset_jsonl(in, path, scale_max)
             : read_dataset_csv(in, path, scale_max);
}

void write_dataset_csv(const std::string& path,
                       const std::vector<RatingSet>& data) {
  std::ofstream out = create_or_throw(path);
  for (const auto& rs : data) {
    out << rs.sample_id;
    for (int r : rs.ratings) out << ',' << r;
    out << '\n';
  }
}

void write_dataset_jsonl(const std::string& path,
                         const std::vector<RatingSet>& data) {
  std::ofstream out = create_or_throw(path);
  for (const auto& rs : data) {
    nlohmann::ordered_json rec;
    rec["sample_id"] = rs.sample_id;
    rec["ratings"] = rs.ratings;
    out << rec.dump() << '\n';
  }
}

std::vector<ScoredSample> read_scores(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  std::vector<ScoredSample> out;
  std::string line;
  std::size_t line_no = 0;
  bool first_row = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv(line);
    if (fields.size() != 2) {
      line_error(path, line_no, "expected sample_id,score");
    }
    double score;
    if (!parse_real(fields[1], score)) {
      if (first_row) {
        first_row = false;
        continue;
      }
      line_error(path, line_no, "score '" + fields[1] + "' is not a number");
    }
    first_row = false;
    if (!std::isfinite(score)) {
      line_error(path, line_no, "non-finite score");
    }
    out.push_back({fields[0], score});
  }
  return out;
}

std::vector<PreferenceAnnotation> read_annotations(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  std::vector<PreferenceAnnotation> out;
  std::string line;
  std::size_t line_no = 0;
  bool first_row = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv(line);
    if (fields.size() < 4) {
      line_error(path, line_no,
                 "expected pair_id,id_a,id_b and at least one vote");
    }
    if (first_row) {
      first_row = false;
      // Header detection: fourth field is not a vote token.
      try {
        parse_vote(fields[3]);
      } catch (const InputError&) {
        continue;
      }
    }
    PreferenceAnnotation ann;
    ann.pair_id = fields[0];
    ann.id_a = fields[1];
    ann.id_b = fields[2];
    for (std::size_t i = 3; i < fields.size(); ++i) {
      try {
        ann.votes.push_back(parse_vote(fields[i]));
      } catch (const InputError& e) {
        line_error(path, line_no, e.what());
      }
    }
    out.push_back(std::move(ann));
  }
  return out;
}

std::vector<PreferencePair> read_pairs(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  std::vector<PreferencePair> out;
  std::string line;
  std::size_t line_no = 0;
  bool first_row = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv(line);
    if (fields.size() != 3) {
      line_error(path, line_no, "expected id_a,id_b,label");
    }
    if (fields[2] == "A") {
      out.push_back({fields[0], fields[1], PrefLabel::kAPreferred});
    } else if (fields[2] == "B") {
      out.push_back({fields[0], fields[1], PrefLabel::kBPreferred});
    } else if (first_row) {
      // header
    } else {
      line_error(path, line_no, "label '" + fields[2] + "' must be A or B");
    }
    first_row = false;
  }
  return out;
}

void write_pairs(const std::string& path,
                 const std::vector<PreferencePair>& pairs) {
  std::ofstream out = create_or_throw(path);
  out << "id_a,id_b,label\n";
  for (const auto& p : pairs) {
    out << p.id_a << ',' << p.id_b << ','
        << (p.label == PrefLabel::kAPreferred ? 'A' : 'B') << '\n';
  }
}

std::string format_double(double x, int significant_digits) {
  std::ostringstream ss;
  ss.precision(significant_digits);
  ss << x;
  return ss.str();
}

std::string file_digest(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  char buf[4096];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 0x100000001b3ULL;
    }
    if (!in) break;
  }
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + hex;
}

}  // namespace mosfit
