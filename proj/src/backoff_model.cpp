// backoff_model.cpp
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

#include "humorlm/backoff_model.hpp"

#include <cmath>
#include <stdexcept>

#include "humorlm/errors.hpp"

namespace humorlm {

namespace {

// Follower statistics of one context, over event followers only
// (a follower w = <s> is never a prediction target).
struct ContextStats {
  std::uint64_t total = 0;    // sum of adjusted follower counts
  std::uint64_t n1 = 0;       // follower types with adjusted count 1
  std::uint64_t n2 = 0;       // ... count 2
  std::uint64_t n3plus = 0;   // ... count >= 3

  void add(std::uint64_t count) {
    total += count;
    if (count == 1) ++n1;
    else if (count == 2) ++n2;
    else ++n3plus;
  }

  double gamma(const OrderDiscounts& d) const {
    return (d.d1 * static_cast<double>(n1) + d.d2 * static_cast<double>(n2) +
            d.d3plus * static_cast<double>(n3plus)) /
           static_cast<double>(total);
  }
};

using LinearMap = std::unordered_map<NgramKey, double, NgramKeyHash>;

}  // namespace

BackoffModel::BackoffModel(std::size_t order, Vocabulary vocab,
                           std::vector<EntryMap> tables)
    : order_(order), vocab_(std::move(vocab)), tables_(std::move(tables)) {
  if (order < 1 || order > kMaxOrder)
    throw std::invalid_argument("model order out of range");
  if (tables_.size() != order)
    throw std::invalid_argument("expected one entry table per order");
}

const EntryMap& BackoffModel::entries(std::size_t k) const {
  if (k < 1 || k > order_) throw std::invalid_argument("order out of range");
  return tables_[k - 1];
}

double BackoffModel::log10_prob(std::span<const TokenId> context,
                                TokenId word) const {
  if (word >= vocab_.size())
    throw UnknownId("token id " + std::to_string(word) +
                    " outside the vocabulary");
  for (TokenId id : context) {
    if (id >= vocab_.size())
      throw UnknownId("context id " + std::to_string(id) +
                      " outside the vocabulary");
  }
  if (context.size() > order_ - 1) context = context.last(order_ - 1);

  double accumulated = 0.0;
  for (;;) {
    NgramKey key;
    key.len = static_cast<std::uint8_t>(context.size() + 1);
    for (std::size_t i = 0; i < context.size(); ++i) key.ids[i] = context[i];
    key.ids[context.size()] = word;

    const EntryMap& table = tables_[context.size()];
    if (auto it = table.find(key); it != table.end())
      return accumulated + it->second.log10_prob;

    if (context.empty()) {
      // Every vocabulary id has a unigram entry; only reachable if the
      // tables were assembled by hand.
      return accumulated + kLog10PseudoZero;
    }
    const EntryMap& ctx_table = tables_[context.size() - 1];
    if (auto it = ctx_table.find(NgramKey::from(context));
        it != ctx_table.end() && it->second.has_backoff)
      accumulated += it->second.log10_backoff;
    context = context.subspan(1);
  }
}

double BackoffModel::prob(std::span<const TokenId> context,
                          TokenId word) const {
  return std::pow(10.0, log10_prob(context, word));
}

SentenceScore BackoffModel::sentence_logprob(
    const std::vector<std::string>& tokens) const {
  std::vector<TokenId> padded;
  padded.reserve(tokens.size() + order_);
  for (std::size_t i = 0; i + 1 < order_; ++i) padded.push_back(kSosId);
  for (const std::string& token : tokens)
    padded.push_back(vocab_.id_or_unk(token));
  padded.push_back(kEosId);

  SentenceScore score;
  const std::span<const TokenId> all(padded);
  for (std::size_t pos = order_ - 1; pos < padded.size(); ++pos) {
    score.log10_prob +=
        log10_prob(all.subspan(pos - (order_ - 1), order_ - 1), padded[pos]);
    ++score.token_count;
  }
  return score;
}

double BackoffModel::perplexity(
    const std::vector<std::vector<std::string>>& sentences) const {
  double total = 0.0;
  std::size_t positions = 0;
  for (const auto& sentence : sentences) {
    const SentenceScore score = sentence_logprob(sentence);
    total += score.log10_prob;
    positions += score.token_count;
  }
  if (positions == 0) throw EmptyInput("no positions to score");
  return std::pow(10.0, -total / static_cast<double>(positions));
}

BackoffModel train(const CountTable& counts, const Discounts& discounts,
                   const Vocabulary& vocab, std::size_t order) {
  if (order != counts.order())
    throw std::invalid_argument("order does not match the count table");
  if (discounts.order() < order)
    throw std::invalid_argument("discounts do not cover every order");
  if (counts.raw(order).empty())
    throw EmptyCorpus("no ngrams at the top order");

  std::vector<EntryMap> tables(order);

  // Unigram level: interpolate the adjusted-count estimate with the uniform
  // distribution over prediction targets (everything but <s>), so every
  // vocabulary id gets a positive probability.
  const CountMap& unigrams = counts.effective(1);
  ContextStats root;
  for (const auto& [key, count] : unigrams) {
    if (key.front() == kSosId) continue;
    root.add(count);
  }
  const OrderDiscounts& d1 = discounts.at(1);
  const double floor =
      root.gamma(d1) / static_cast<double>(vocab.prediction_targets());

  LinearMap linear;
  linear.reserve(vocab.size());
  for (TokenId id = 0; id < vocab.size(); ++id) {
    const NgramKey key = NgramKey::from(std::span(&id, 1));
    ModelEntry entry;
    double p = 0.0;
    if (id != kSosId) {
      std::uint64_t count = 0;
      if (auto it = unigrams.find(key); it != unigrams.end())
        count = it->second;
      p = (static_cast<double>(count) - discount_for(d1, count)) /
              static_cast<double>(root.total) +
          floor;
      entry.log10_prob = log10_clamped(p);
    }
    tables[0].emplace(key, entry);
    linear.emplace(key, p);
  }

  for (std::size_t k = 2; k <= order; ++k) {
    const CountMap& grams = counts.effective(k);
    const OrderDiscounts& dk = discounts.at(k);

    std::unordered_map<NgramKey, ContextStats, NgramKeyHash> stats;
    for (const auto& [key, count] : grams) {
      if (key.back() == kSosId) continue;
      const NgramKey context = key.prefix();
      if (context.back() == kEosId) continue;
      stats[context].add(count);
    }

    LinearMap next_linear;
    next_linear.reserve(grams.size());
    for (const auto& [key, count] : grams) {
      const NgramKey context = key.prefix();
      if (context.back() == kEosId) continue;
      ModelEntry entry;
      double p = 0.0;
      if (key.back() != kSosId) {
        const ContextStats& follower = stats.at(context);
        p = (static_cast<double>(count) - discount_for(dk, count)) /
                static_cast<double>(follower.total) +
            follower.gamma(dk) * linear.at(key.suffix());
        entry.log10_prob = log10_clamped(p);
      }
      tables[k - 1].emplace(key, entry);
      next_linear.emplace(key, p);
    }

    for (const auto& [context, follower] : stats) {
      ModelEntry& ctx_entry = tables[k - 2].at(context);
      ctx_entry.has_backoff = true;
      ctx_entry.log10_backoff = log10_clamped(follower.gamma(dk));
    }
    linear = std::move(next_linear);
  }

  return BackoffModel(order, vocab, std::move(tables));
}

}  // namespace humorlm
