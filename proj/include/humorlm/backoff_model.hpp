// backoff_model.hpp
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
// Backoff n-gram model with interpolated modified Kneser-Ney estimates.
// Every stored n-gram carries a log10 probability; stored contexts carry a
// log10 backoff weight. Queries walk the standard backoff recursion; an
// unstored context backs off with weight exactly 1.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "humorlm/counts.hpp"
#include "humorlm/discounts.hpp"
#include "humorlm/vocabulary.hpp"

namespace humorlm {

// Sentinel for probabilities that are zero by construction (<s> as a
// prediction target) and for underflowed backoff weights. Matches the
// conventional ARPA placeholder.
inline constexpr double kLog10PseudoZero = -99.0;

inline double log10_clamped(double value) {
  if (value > 0.0) return std::max(std::log10(value), kLog10PseudoZero);
  return kLog10PseudoZero;
}

struct ModelEntry {
  double log10_prob = kLog10PseudoZero;
  double log10_backoff = 0.0;
  bool has_backoff = false;
};

using EntryMap = std::unordered_map<NgramKey, ModelEntry, NgramKeyHash>;

struct SentenceScore {
  double log10_prob = 0.0;
  std::size_t token_count = 0;
};

class BackoffModel {
 public:
  // Assembles a model from deserialized tables; train() is the usual way
  // to obtain one.
  BackoffModel(std::size_t order, Vocabulary vocab,
               std::vector<EntryMap> tables);

  std::size_t order() const { return order_; }
  const Vocabulary& vocab() const { return vocab_; }
  const EntryMap& entries(std::size_t k) const;

  // log10 P(word | context). The context is truncated to its last order-1
  // ids. Throws UnknownId on any id outside the vocabulary.
  double log10_prob(std::span<const TokenId> context, TokenId word) const;
  double prob(std::span<const TokenId> context, TokenId word) const;

  // Total log10 probability of the padded sentence, plus the
  // number of scored positions (every token and the final </s>). Tokens
  // outside the vocabulary are scored as <unk>. An empty sentence scores
  // the bare </s> with token_count 1.
  SentenceScore sentence_logprob(const std::vector<std::string>& tokens) const;

  // 10^(-total_log10 / positions) over all sentences. Throws EmptyInput if
  // there is nothing to score.
  double perplexity(const std::vector<std::vector<std::string>>& sentences) const;

 private:
  std::size_t order_;
  Vocabulary vocab_;
  std::vector<EntryMap> tables_;  // tables_[k-1] holds order k
};

// Builds the interpolated modified Kneser-Ney estimates from adjusted
// counts and stores them in backoff form. The discounts must cover orders
// 1..order. Throws EmptyCorpus if the top order has no counts.
BackoffModel train(const CountTable& counts, const Discounts& discounts,
                   const Vocabulary& vocab, std::size_t order);

}  // namespace humorlm
