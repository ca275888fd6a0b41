// ranking.cpp
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

#include "humorlm/ranking.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>

#include "humorlm/errors.hpp"
#include "humorlm/tokenizer.hpp"

namespace humorlm {

double oriented_score(double log10_prob, std::size_t token_count,
                      Polarity polarity, bool per_token) {
  double score = log10_prob;
  if (per_token) score /= static_cast<double>(token_count);
  return polarity == Polarity::kLowerIsFunnier ? -score : score;
}

ScoredTweet score_tweet(const BackoffModel& model, Polarity polarity,
                        bool per_token, const TweetRecord& tweet) {
  ScoredTweet scored;
  scored.tweet = tweet;
  const SentenceScore s = model.sentence_logprob(tokenize(tweet.text));
  scored.log10_prob = s.log10_prob;
  scored.token_count = s.token_count;
  scored.score = oriented_score(s.log10_prob, s.token_count, polarity, per_token);
  return scored;
}

std::string compare_pair(const ScoredTweet& a, const ScoredTweet& b) {
  if (a.tweet.tweet_id == b.tweet.tweet_id)
    throw SamePair("both sides are tweet '" + a.tweet.tweet_id + "'");
  if (a.score > b.score) return a.tweet.tweet_id;
  if (b.score > a.score) return b.tweet.tweet_id;
  return std::min(a.tweet.tweet_id, b.tweet.tweet_id);
}

SemiRanking semi_rank(std::vector<ScoredTweet> scored) {
  if (scored.empty()) throw EmptySet("nothing to rank");
  std::sort(scored.begin(), scored.end(),
            [](const ScoredTweet& a, const ScoredTweet& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.tweet.tweet_id < b.tweet.tweet_id;
            });
  SemiRanking ranking;
  ranking.top1 = scored[0].tweet.tweet_id;
  const std::size_t next9_end = std::min<std::size_t>(scored.size(), 10);
  for (std::size_t i = 1; i < next9_end; ++i)
    ranking.next9.push_back(scored[i].tweet.tweet_id);
  for (std::size_t i = next9_end; i < scored.size(); ++i)
    ranking.rest.push_back(scored[i].tweet.tweet_id);
  return ranking;
}

PairTally tally_pairs(const HashtagSet& gold, const PairWinner& winner) {
  for (const auto& t : gold.tweets) {
    if (!t.gold)
      throw MalformedRecord("tweet '" + t.tweet_id +
                            "' has no gold label in hashtag '" + gold.hashtag +
                            "'");
  }
  PairTally tally;
  for (std::size_t i = 0; i < gold.tweets.size(); ++i) {
    for (std::size_t j = i + 1; j < gold.tweets.size(); ++j) {
      const TweetRecord& a = gold.tweets[i];
      const TweetRecord& b = gold.tweets[j];
      if (*a.gold == *b.gold) continue;
      ++tally.total;
      const std::string& funnier =
          static_cast<int>(*a.gold) > static_cast<int>(*b.gold) ? a.tweet_id
                                                                : b.tweet_id;
      if (winner(a, b) == funnier) ++tally.correct;
    }
  }
  return tally;
}

double eval_subtask_a(const std::vector<HashtagSet>& gold,
                      const PairWinner& winner) {
  PairTally pooled;
  for (const HashtagSet& set : gold) {
    const PairTally tally = tally_pairs(set, winner);
    pooled.correct += tally.correct;
    pooled.total += tally.total;
  }
  if (pooled.total == 0)
    throw NoPairs("no hashtag yields a pair with distinct gold labels");
  return static_cast<double>(pooled.correct) /
         static_cast<double>(pooled.total);
}

double eval_subtask_b(const HashtagSet& gold, const SemiRanking& predicted) {
  std::unordered_map<std::string, int> predicted_label;
  predicted_label.emplace(predicted.top1, 2);
  for (const std::string& id : predicted.next9) {
    if (!predicted_label.emplace(id, 1).second)
      throw PartitionMismatch("tweet '" + id +
                              "' appears twice in the prediction");
  }
  for (const std::string& id : predicted.rest) {
    if (!predicted_label.emplace(id, 0).second)
      throw PartitionMismatch("tweet '" + id +
                              "' appears twice in the prediction");
  }
  if (predicted_label.size() != gold.tweets.size())
    throw PartitionMismatch("prediction covers " +
                            std::to_string(predicted_label.size()) +
                            " ids, gold has " +
                            std::to_string(gold.tweets.size()));

  std::uint64_t diff_sum = 0;
  for (const TweetRecord& t : gold.tweets) {
    if (!t.gold)
      throw MalformedRecord("tweet '" + t.tweet_id + "' has no gold label");
    const auto it = predicted_label.find(t.tweet_id);
    if (it == predicted_label.end())
      throw PartitionMismatch("tweet '" + t.tweet_id +
                              "' is missing from the prediction");
    diff_sum += static_cast<std::uint64_t>(
        std::abs(static_cast<int>(*t.gold) - it->second));
  }
  return static_cast<double>(diff_sum) /
         (2.0 * static_cast<double>(gold.tweets.size()));
}

}  // namespace humorlm
