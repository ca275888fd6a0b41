// experiment.hpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Full evaluation run: score every tweet of every hashtag file under one
// model, evaluate both subtasks, aggregate into a report.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "humorlm/backoff_model.hpp"
#include "humorlm/ranking.hpp"

namespace humorlm {

struct HashtagResult {
  std::string hashtag;
  std::optional<double> accuracy_a;  // absent when the hashtag has no pairs
  double distance_b = 0.0;
  std::uint64_t pair_count = 0;
};

struct EvalReport {
  double accuracy_a = 0.0;   // pooled over pairs of every hashtag
  double distance_b = 0.0;   // mean of per-hashtag distances
  std::uint64_t pair_count = 0;
  std::uint64_t hashtag_count = 0;
  std::vector<HashtagResult> per_hashtag;  // hashtag-name order
};

struct ExperimentResult {
  EvalReport report;
  std::vector<std::string> warnings;  // one line per skipped file
};

// Evaluates every "*.tsv" file under data_dir (sorted by file name) with
// gold labels present. Files that fail to ingest or validate are skipped
// and reported as warnings; the rest are scored and evaluated. Throws
// NoPairs if no file contributes a labeled pair.
ExperimentResult run_experiment(const BackoffModel& model, Polarity polarity,
                                bool per_token,
                                const std::filesystem::path& data_dir,
                                std::size_t threads = 1);

// Report serialization: one object with the aggregate fields and a
// per_hashtag array, written as JSON.
std::string report_to_json(const EvalReport& report);
void write_report(const EvalReport& report, const std::filesystem::path& path);

}  // namespace humorlm
