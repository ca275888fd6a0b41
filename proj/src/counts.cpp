// counts.cpp
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

#include "humorlm/counts.hpp"

#include <stdexcept>
#include <thread>

#include "humorlm/errors.hpp"

namespace humorlm {

NgramKey NgramKey::from(std::span<const TokenId> tokens) {
  if (tokens.size() > kMaxOrder)
    throw std::invalid_argument("ngram longer than kMaxOrder");
  NgramKey key;
  key.len = static_cast<std::uint8_t>(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) key.ids[i] = tokens[i];
  return key;
}

NgramKey NgramKey::suffix() const {
  NgramKey key;
  key.len = static_cast<std::uint8_t>(len - 1);
  for (std::size_t i = 1; i < len; ++i) key.ids[i - 1] = ids[i];
  return key;
}

NgramKey NgramKey::prefix() const {
  NgramKey key;
  key.len = static_cast<std::uint8_t>(len - 1);
  for (std::size_t i = 0; i + 1 < len; ++i) key.ids[i] = ids[i];
  return key;
}

NgramKey NgramKey::append(TokenId id) const {
  if (len >= kMaxOrder) throw std::invalid_argument("ngram key is full");
  NgramKey key = *this;
  key.ids[key.len] = id;
  ++key.len;
  return key;
}

std::size_t NgramKeyHash::operator()(const NgramKey& key) const {
  // splitmix64-style mixing of each slot plus the length.
  std::uint64_t h = 0x9e3779b97f4a7c15ull * (key.len + 1);
  for (std::size_t i = 0; i < key.len; ++i) {
    std::uint64_t x = h ^ (static_cast<std::uint64_t>(key.ids[i]) + 1);
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    h = x;
  }
  return static_cast<std::size_t>(h);
}

CountTable::CountTable(std::size_t order) : order_(order) {
  if (order < 1 || order > kMaxOrder)
    throw std::invalid_argument("order must be between 1 and " +
                                std::to_string(kMaxOrder));
  raw_.resize(order);
}

void CountTable::add_sentence(std::span<const TokenId> sentence) {
  std::vector<TokenId> padded;
  padded.reserve(sentence.size() + order_);
  for (std::size_t i = 0; i + 1 < order_; ++i) padded.push_back(kSosId);
  padded.insert(padded.end(), sentence.begin(), sentence.end());
  padded.push_back(kEosId);

  for (std::size_t k = 1; k <= order_; ++k) {
    if (padded.size() < k) continue;
    CountMap& table = raw_[k - 1];
    for (std::size_t i = 0; i + k <= padded.size(); ++i)
      ++table[NgramKey::from(std::span(padded).subspan(i, k))];
  }
  ++sentences_;
  effective_valid_ = false;
}

void CountTable::merge_from(const CountTable& other) {
  if (other.order_ != order_)
    throw std::invalid_argument("cannot merge tables of different order");
  for (std::size_t k = 0; k < order_; ++k)
    for (const auto& [key, count] : other.raw_[k]) raw_[k][key] += count;
  sentences_ += other.sentences_;
  effective_valid_ = false;
}

const CountMap& CountTable::raw(std::size_t k) const {
  if (k < 1 || k > order_) throw std::invalid_argument("order out of range");
  return raw_[k - 1];
}

const CountMap& CountTable::effective(std::size_t k) const {
  if (k < 1 || k > order_) throw std::invalid_argument("order out of range");
  ensure_effective();
  return effective_[k - 1];
}

std::uint64_t CountTable::continuation_count(const NgramKey& key) const {
  if (static_cast<std::size_t>(key.len) + 1 > order_) return 0;
  const CountMap& higher = raw_[key.len];
  std::uint64_t distinct = 0;
  for (const auto& [higher_key, count] : higher) {
    (void)count;
    if (higher_key.suffix() == key) ++distinct;
  }
  return distinct;
}

void CountTable::ensure_effective() const {
  if (effective_valid_) return;
  effective_.assign(order_, CountMap{});

  // Top order: adjusted count is the raw count.
  effective_[order_ - 1] = raw_[order_ - 1];

  // Lower orders: number of distinct left extensions in the raw table one
  // order up, except for <s>-initial n-grams which keep raw counts.
  for (std::size_t k = order_ - 1; k >= 1; --k) {
    CountMap& out = effective_[k - 1];
    for (const auto& [key, count] : raw_[k - 1]) {
      if (key.front() == kSosId) out[key] = count;
    }
    for (const auto& [higher_key, count] : raw_[k]) {
      (void)count;
      const NgramKey lower = higher_key.suffix();
      if (lower.front() == kSosId) continue;
      ++out[lower];
    }
    if (k == 1) break;
  }
  effective_valid_ = true;
}

CountsOfCounts CountTable::counts_of_counts(std::size_t k) const {
  const CountMap& table = effective(k);
  CountsOfCounts coc;
  for (const auto& [key, count] : table) {
    if (key.back() == kSosId) continue;
    switch (count) {
      case 1: ++coc.n1; break;
      case 2: ++coc.n2; break;
      case 3: ++coc.n3; break;
      case 4: ++coc.n4; break;
      default: break;
    }
  }
  return coc;
}

CountTable count_ngrams(const std::vector<std::vector<std::string>>& sentences,
                        const Vocabulary& vocab, std::size_t order,
                        std::size_t threads) {
  if (threads < 1) threads = 1;

  std::vector<std::vector<TokenId>> mapped(sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    mapped[i].reserve(sentences[i].size());
    for (const std::string& token : sentences[i])
      mapped[i].push_back(vocab.id_or_unk(token));
  }

  if (threads == 1 || mapped.size() < 2) {
    CountTable table(order);
    for (const auto& sentence : mapped) table.add_sentence(sentence);
    return table;
  }

  threads = std::min(threads, mapped.size());
  std::vector<CountTable> shards(threads, CountTable(order));
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t i = t; i < mapped.size(); i += threads)
        shards[t].add_sentence(mapped[i]);
    });
  }
  for (auto& worker : workers) worker.join();

  CountTable table = std::move(shards[0]);
  for (std::size_t t = 1; t < threads; ++t) table.merge_from(shards[t]);
  return table;
}

}  // namespace humorlm
