// ranking.hpp
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
// Funniness scoring and ranking on top of a trained model. A score is a
// model log probability oriented so that greater always means funnier:
// identity under the funny-tweet model, negated under the news model.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "humorlm/backoff_model.hpp"
#include "humorlm/corpus_io.hpp"

namespace humorlm {

enum class Polarity {
  kHigherIsFunnier,  // funny-tweet model
  kLowerIsFunnier,   // news model
};

// Orients a sentence log10 probability: optional division by token_count,
// then a sign flip under kLowerIsFunnier.
double oriented_score(double log10_prob, std::size_t token_count,
                      Polarity polarity, bool per_token);

struct ScoredTweet {
  TweetRecord tweet;
  double log10_prob = 0.0;
  std::size_t token_count = 0;
  double score = 0.0;
};

// Tokenizes the tweet text and scores it under the model.
ScoredTweet score_tweet(const BackoffModel& model, Polarity polarity,
                        bool per_token, const TweetRecord& tweet);

// Winner of a pair: the higher score; exact score tie goes to the
// lexicographically smaller tweet_id. Throws SamePair if both sides carry
// the same tweet_id.
std::string compare_pair(const ScoredTweet& a, const ScoredTweet& b);

// Three-bucket semi-ranking of one hashtag's tweets.
struct SemiRanking {
  std::string top1;
  std::vector<std::string> next9;  // up to 9 ids, rank order
  std::vector<std::string> rest;   // remaining ids, rank order
};

// Sorts descending by score (ties by ascending tweet_id) and splits into
// top1 / next min(9, n-1) / rest. Throws EmptySet on empty input.
SemiRanking semi_rank(std::vector<ScoredTweet> scored);

// Pairwise-comparison bookkeeping for one hashtag.
struct PairTally {
  std::uint64_t correct = 0;
  std::uint64_t total = 0;
};

// Decides a pair given the two gold records; returns the winner tweet_id.
using PairWinner =
    std::function<std::string(const TweetRecord&, const TweetRecord&)>;

// Evaluates, within one labeled hashtag, every unordered tweet pair whose
// gold labels differ; a pair is correct when the winner carries the
// strictly higher gold label. Throws MalformedRecord on unlabeled tweets.
PairTally tally_pairs(const HashtagSet& gold, const PairWinner& winner);

// Pooled pair accuracy over all hashtags: correct / total. Throws NoPairs
// if no hashtag yields a labeled pair.
double eval_subtask_a(const std::vector<HashtagSet>& gold,
                      const PairWinner& winner);

// Bucket distance between gold labels and a predicted semi-ranking over
// the same ids: sum of |gold - predicted| label differences, normalized by
// 2n. Throws PartitionMismatch if the id sets differ.
double eval_subtask_b(const HashtagSet& gold, const SemiRanking& predicted);

}  // namespace humorlm
