// test_counts.cpp
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

#include <random>
#include <stdexcept>

#include "doctest.h"
#include "toy_corpus.hpp"

using namespace humorlm;
using humorlm::test::random_corpus;

namespace {

NgramKey key2(TokenId a, TokenId b) {
  const TokenId ids[] = {a, b};
  return NgramKey::from(ids);
}

std::uint64_t count_of(const CountMap& table, const NgramKey& key) {
  const auto it = table.find(key);
  return it == table.end() ? 0 : it->second;
}

}  // namespace

TEST_CASE("bigram counts of a single sentence") {
  const std::vector<std::vector<std::string>> corpus = {{"a", "b"}};
  const Vocabulary vocab = build_vocabulary(corpus, 1);
  const TokenId a = *vocab.id_of("a");
  const TokenId b = *vocab.id_of("b");

  const CountTable counts = count_ngrams(corpus, vocab, 2);
  const CountMap& bigrams = counts.raw(2);
  CHECK(bigrams.size() == 3);
  CHECK(count_of(bigrams, key2(kSosId, a)) == 1);
  CHECK(count_of(bigrams, key2(a, b)) == 1);
  CHECK(count_of(bigrams, key2(b, kEosId)) == 1);
}

TEST_CASE("adding the same sentence twice doubles every count") {
  const std::vector<std::vector<std::string>> once = {{"a", "b"}};
  const std::vector<std::vector<std::string>> twice = {{"a", "b"}, {"a", "b"}};
  const Vocabulary vocab = build_vocabulary(once, 1);
  const CountTable c1 = count_ngrams(once, vocab, 2);
  const CountTable c2 = count_ngrams(twice, vocab, 2);
  for (std::size_t k = 1; k <= 2; ++k) {
    REQUIRE(c1.raw(k).size() == c2.raw(k).size());
    for (const auto& [key, count] : c1.raw(k))
      CHECK(count_of(c2.raw(k), key) == 2 * count);
  }
}

TEST_CASE("order-2 counts-of-counts of the three-sentence corpus") {
  const std::vector<std::vector<std::string>> corpus = {
      {"a", "b"}, {"a", "b"}, {"a", "c"}};
  const Vocabulary vocab = build_vocabulary(corpus, 1);
  const CountTable counts = count_ngrams(corpus, vocab, 2);
  const CountsOfCounts coc = counts.counts_of_counts(2);
  CHECK(coc == CountsOfCounts{2, 2, 1, 0});
}

TEST_CASE("lower orders carry continuation counts, <s>-initial keep raw") {
  const std::vector<std::vector<std::string>> corpus = {{"the", "cat", "sat"},
                                                        {"the", "cat", "ran"}};
  const Vocabulary vocab = build_vocabulary(corpus, 1);
  const CountTable counts = count_ngrams(corpus, vocab, 2);

  const CountMap& unigrams = counts.effective(1);
  const TokenId the = *vocab.id_of("the");
  const TokenId cat = *vocab.id_of("cat");
  // "the" occurs twice but is preceded only by <s>: continuation count 1.
  CHECK(count_of(unigrams, NgramKey::from({&the, 1})) == 1);
  CHECK(count_of(unigrams, NgramKey::from({&cat, 1})) == 1);
  // </s> follows both "sat" and "ran".
  const TokenId eos = kEosId;
  CHECK(count_of(unigrams, NgramKey::from({&eos, 1})) == 2);
  // <s> cannot be extended left; its raw count stays.
  const TokenId sos = kSosId;
  CHECK(count_of(unigrams, NgramKey::from({&sos, 1})) == 2);
  // The top order keeps raw counts untouched.
  CHECK(counts.effective(2).size() == counts.raw(2).size());
  for (const auto& [key, count] : counts.raw(2))
    CHECK(count_of(counts.effective(2), key) == count);
}

TEST_CASE("trigram padding uses two leading <s>") {
  const std::vector<std::vector<std::string>> corpus = {{"a"}};
  const Vocabulary vocab = build_vocabulary(corpus, 1);
  const CountTable counts = count_ngrams(corpus, vocab, 3);
  const TokenId a = *vocab.id_of("a");

  CHECK(count_of(counts.raw(2), key2(kSosId, kSosId)) == 1);
  CHECK(count_of(counts.raw(2), key2(kSosId, a)) == 1);
  const TokenId tri1[] = {kSosId, kSosId, a};
  const TokenId tri2[] = {kSosId, a, kEosId};
  CHECK(count_of(counts.raw(3), NgramKey::from(tri1)) == 1);
  CHECK(count_of(counts.raw(3), NgramKey::from(tri2)) == 1);
}

TEST_CASE("counts-of-counts exclude grams ending in <s>") {
  // With order 3 the bigram (<s>,<s>) occurs once per sentence; it must
  // not show up in n1.
  const std::vector<std::vector<std::string>> corpus = {{"a"}};
  const Vocabulary vocab = build_vocabulary(corpus, 1);
  const CountTable counts = count_ngrams(corpus, vocab, 3);
  const CountsOfCounts coc = counts.counts_of_counts(2);
  // Event bigrams: (<s>,a) raw kept = 1, (a,</s>) continuation = 1.
  CHECK(coc == CountsOfCounts{2, 0, 0, 0});
}

TEST_CASE("merge is pointwise addition") {
  std::mt19937 rng(7);
  const auto corpus = random_corpus(rng);
  const auto half = corpus.size() / 2;
  const std::vector<std::vector<std::string>> first(corpus.begin(),
                                                    corpus.begin() + half);
  const std::vector<std::vector<std::string>> second(corpus.begin() + half,
                                                     corpus.end());
  const Vocabulary vocab = build_vocabulary(corpus, 1);

  const CountTable whole = count_ngrams(corpus, vocab, 3);
  CountTable merged = count_ngrams(first, vocab, 3);
  merged.merge_from(count_ngrams(second, vocab, 3));

  CHECK(merged.sentence_count() == whole.sentence_count());
  for (std::size_t k = 1; k <= 3; ++k) {
    REQUIRE(merged.raw(k).size() == whole.raw(k).size());
    for (const auto& [key, count] : whole.raw(k))
      CHECK(count_of(merged.raw(k), key) == count);
    REQUIRE(merged.effective(k).size() == whole.effective(k).size());
    for (const auto& [key, count] : whole.effective(k))
      CHECK(count_of(merged.effective(k), key) == count);
  }
}

TEST_CASE("threaded counting matches single-threaded") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const auto corpus = random_corpus(rng);
    const Vocabulary vocab = build_vocabulary(corpus, 1);
    const CountTable serial = count_ngrams(corpus, vocab, 3, 1);
    const CountTable parallel = count_ngrams(corpus, vocab, 3, 8);
    for (std::size_t k = 1; k <= 3; ++k) {
      REQUIRE(serial.raw(k).size() == parallel.raw(k).size());
      for (const auto& [key, count] : serial.raw(k))
        CHECK(count_of(parallel.raw(k), key) == count);
    }
  }
}

TEST_CASE("continuation_count counts distinct left extensions") {
  const std::vector<std::vector<std::string>> corpus = {{"x", "z"},
                                                        {"y", "z"}};
  const Vocabulary vocab = build_vocabulary(corpus, 1);
  const CountTable counts = count_ngrams(corpus, vocab, 2);
  const TokenId z = *vocab.id_of("z");
  CHECK(counts.continuation_count(NgramKey::from({&z, 1})) == 2);
  const TokenId x = *vocab.id_of("x");
  CHECK(counts.continuation_count(NgramKey::from({&x, 1})) == 1);
}

TEST_CASE("order is validated") {
  CHECK_THROWS_AS(CountTable(0), std::invalid_argument);
  CHECK_THROWS_AS(CountTable(kMaxOrder + 1), std::invalid_argument);
  const CountTable table(2);
  CHECK_THROWS_AS((void)table.raw(3), std::invalid_argument);
}
