// counts.hpp
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
// N-gram count collection. A CountTable accumulates raw counts for every
// order 1..N over sentences padded with <s>/</s>, and derives the adjusted
// (continuation) counts that Kneser-Ney smoothing estimates from.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "humorlm/vocabulary.hpp"

namespace humorlm {

inline constexpr std::size_t kMaxOrder = 5;

// Fixed-capacity n-gram identifier. Unused slots stay zero so that
// defaulted equality and hashing see a canonical value.
struct NgramKey {
  std::array<TokenId, kMaxOrder> ids{};
  std::uint8_t len = 0;

  static NgramKey from(std::span<const TokenId> tokens);

  NgramKey suffix() const;               // drop first token
  NgramKey prefix() const;               // drop last token
  NgramKey append(TokenId id) const;     // extend on the right
  TokenId front() const { return ids[0]; }
  TokenId back() const { return ids[len - 1]; }

  bool operator==(const NgramKey&) const = default;
};

struct NgramKeyHash {
  std::size_t operator()(const NgramKey& key) const;
};

using CountMap = std::unordered_map<NgramKey, std::uint64_t, NgramKeyHash>;

// Counts of counts over the adjusted counts of one order: n[k] is the
// number of distinct n-grams whose adjusted count equals k.
struct CountsOfCounts {
  std::uint64_t n1 = 0;
  std::uint64_t n2 = 0;
  std::uint64_t n3 = 0;
  std::uint64_t n4 = 0;

  bool operator==(const CountsOfCounts&) const = default;
};

class CountTable {
 public:
  explicit CountTable(std::size_t order);

  std::size_t order() const { return order_; }
  std::uint64_t sentence_count() const { return sentences_; }

  // Counts every k-gram, 1 <= k <= order, over the sentence padded with
  // order-1 leading <s> tokens and one trailing </s>.
  void add_sentence(std::span<const TokenId> sentence);

  // Pointwise integer sum of another table's raw counts. Both tables must
  // have the same order.
  void merge_from(const CountTable& other);

  // Raw occurrence counts for order k.
  const CountMap& raw(std::size_t k) const;

  // Adjusted counts for order k: the top order keeps raw counts, lower
  // orders use continuation counts, except that k-grams starting with <s>
  // keep their raw counts (they can never be extended to the left).
  const CountMap& effective(std::size_t k) const;

  // Number of distinct tokens observed immediately before the given k-gram
  // in the raw (k+1)-gram table.
  std::uint64_t continuation_count(const NgramKey& key) const;

  // Counts of counts over effective(k), excluding n-grams that end in <s>.
  CountsOfCounts counts_of_counts(std::size_t k) const;

 private:
  void ensure_effective() const;

  std::size_t order_;
  std::uint64_t sentences_ = 0;
  std::vector<CountMap> raw_;                  // raw_[k-1] holds order k
  mutable std::vector<CountMap> effective_;    // derived lazily
  mutable bool effective_valid_ = false;
};

// Maps sentences through the vocabulary (OOV tokens become <unk>) and counts
// them, optionally splitting the work over several threads. The result is
// identical for any thread count.
CountTable count_ngrams(const std::vector<std::vector<std::string>>& sentences,
                        const Vocabulary& vocab, std::size_t order,
                        std::size_t threads = 1);

}  // namespace humorlm
