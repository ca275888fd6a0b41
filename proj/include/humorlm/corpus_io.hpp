// corpus_io.hpp
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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace humorlm {

// Gold funniness bucket of a tweet within its hashtag.
enum class GoldLabel : int { kRest = 0, kNext9 = 1, kTop1 = 2 };

struct TweetRecord {
  std::string tweet_id;
  std::string text;
  std::optional<GoldLabel> gold;
};

// All tweets answering one hashtag prompt, in file order.
struct HashtagSet {
  std::string hashtag;
  std::vector<TweetRecord> tweets;

  bool fully_labeled() const;

  // Checks the gold invariant: every tweet labeled, exactly one Top1 and
  // exactly min(9, n-1) Next9.  Throws MalformedRecord otherwise.
  void validate_gold() const;
};

// One tokenized sentence per non-blank input line.  Throws IngestError on
// stream failure, with the line number reached.
std::vector<std::vector<std::string>> ingest_plaintext(std::istream& in);
std::vector<std::vector<std::string>> ingest_plaintext_file(
    const std::filesystem::path& path);

// Parses tweet TSV lines: tweet_id<TAB>text[<TAB>label], label in {0,1,2}.
// Blank lines are skipped.  Throws MalformedRecord / DuplicateId.
HashtagSet ingest_tweet_tsv(std::istream& in, std::string hashtag);

// Hashtag name comes from the file name stem.
HashtagSet ingest_tweet_tsv_file(const std::filesystem::path& path);

// Inverse of ingest_tweet_tsv on well-formed sets.  Throws MalformedRecord
// if a field contains a tab or newline.
void write_tweet_tsv(const HashtagSet& set, std::ostream& out);

}  // namespace humorlm
