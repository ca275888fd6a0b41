// experiment.cpp
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

#include "humorlm/experiment.hpp"

#include <algorithm>
#include <fstream>
#include <thread>
#include <unordered_map>

#include "json.hpp"

#include "humorlm/corpus_io.hpp"
#include "humorlm/errors.hpp"

namespace humorlm {

namespace {

struct HashtagOutcome {
  bool ok = false;
  std::string warning;
  HashtagResult result;
  PairTally tally;
};

HashtagOutcome evaluate_file(const BackoffModel& model, Polarity polarity,
                             bool per_token,
                             const std::filesystem::path& path) {
  HashtagOutcome outcome;
  try {
    const HashtagSet gold = ingest_tweet_tsv_file(path);
    gold.validate_gold();

    std::vector<ScoredTweet> scored;
    scored.reserve(gold.tweets.size());
    std::unordered_map<std::string, const ScoredTweet*> by_id;
    for (const TweetRecord& tweet : gold.tweets)
      scored.push_back(score_tweet(model, polarity, per_token, tweet));
    for (const ScoredTweet& s : scored) by_id.emplace(s.tweet.tweet_id, &s);

    outcome.tally = tally_pairs(
        gold, [&](const TweetRecord& a, const TweetRecord& b) {
          return compare_pair(*by_id.at(a.tweet_id), *by_id.at(b.tweet_id));
        });

    outcome.result.hashtag = gold.hashtag;
    outcome.result.pair_count = outcome.tally.total;
    if (outcome.tally.total > 0)
      outcome.result.accuracy_a = static_cast<double>(outcome.tally.correct) /
                                  static_cast<double>(outcome.tally.total);
    outcome.result.distance_b = eval_subtask_b(gold, semi_rank(scored));
    outcome.ok = true;
  } catch (const Error& e) {
    outcome.warning = path.string() + ": " + e.what();
  }
  return outcome;
}

}  // namespace

ExperimentResult run_experiment(const BackoffModel& model, Polarity polarity,
                                bool per_token,
                                const std::filesystem::path& data_dir,
                                std::size_t threads) {
  std::vector<std::filesystem::path> files;
  {
    std::error_code ec;
    std::filesystem::directory_iterator it(data_dir, ec);
    if (ec)
      throw IngestError("cannot read data directory: " + data_dir.string());
    for (const auto& entry : it) {
      if (entry.is_regular_file() && entry.path().extension() == ".tsv")
        files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  std::vector<HashtagOutcome> outcomes(files.size());
  if (threads < 1) threads = 1;
  threads = std::min(threads, std::max<std::size_t>(files.size(), 1));
  if (threads <= 1) {
    for (std::size_t i = 0; i < files.size(); ++i)
      outcomes[i] = evaluate_file(model, polarity, per_token, files[i]);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        for (std::size_t i = t; i < files.size(); i += threads)
          outcomes[i] = evaluate_file(model, polarity, per_token, files[i]);
      });
    }
    for (auto& worker : workers) worker.join();
  }

  ExperimentResult result;
  PairTally pooled;
  double distance_sum = 0.0;
  for (HashtagOutcome& outcome : outcomes) {
    if (!outcome.ok) {
      result.warnings.push_back(std::move(outcome.warning));
      continue;
    }
    pooled.correct += outcome.tally.correct;
    pooled.total += outcome.tally.total;
    distance_sum += outcome.result.distance_b;
    result.report.per_hashtag.push_back(std::move(outcome.result));
  }

  result.report.hashtag_count = result.report.per_hashtag.size();
  result.report.pair_count = pooled.total;
  if (pooled.total == 0)
    throw NoPairs("no labeled pairs found under " + data_dir.string());
  result.report.accuracy_a = static_cast<double>(pooled.correct) /
                             static_cast<double>(pooled.total);
  result.report.distance_b =
      distance_sum / static_cast<double>(result.report.hashtag_count);
  return result;
}

std::string report_to_json(const EvalReport& report) {
  nlohmann::ordered_json doc;
  doc["accuracy_a"] = report.accuracy_a;
  doc["distance_b"] = report.distance_b;
  doc["pair_count"] = report.pair_count;
  doc["hashtag_count"] = report.hashtag_count;
  doc["per_hashtag"] = nlohmann::ordered_json::array();
  for (const HashtagResult& h : report.per_hashtag) {
    nlohmann::ordered_json row;
    row["hashtag"] = h.hashtag;
    if (h.accuracy_a)
      row["accuracy_a"] = *h.accuracy_a;
    else
      row["accuracy_a"] = nullptr;
    row["distance_b"] = h.distance_b;
    row["pair_count"] = h.pair_count;
    doc["per_hashtag"].push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

void write_report(const EvalReport& report,
                  const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write report file: " + path.string());
  out << report_to_json(report);
  out.flush();
  if (!out) throw Error("write failure on report file: " + path.string());
}

}  // namespace humorlm
