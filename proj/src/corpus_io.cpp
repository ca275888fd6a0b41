// corpus_io.cpp
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

#include "humorlm/corpus_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "humorlm/errors.hpp"
#include "humorlm/tokenizer.hpp"

namespace humorlm {

namespace {

// getline with a trailing '\r' stripped, so CRLF input is tolerated.
bool next_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

}  // namespace

bool HashtagSet::fully_labeled() const {
  return std::all_of(tweets.begin(), tweets.end(),
                     [](const TweetRecord& t) { return t.gold.has_value(); });
}

void HashtagSet::validate_gold() const {
  if (tweets.empty())
    throw MalformedRecord("hashtag '" + hashtag + "' has no tweets");
  std::size_t top1 = 0, next9 = 0;
  for (const auto& t : tweets) {
    if (!t.gold)
      throw MalformedRecord("hashtag '" + hashtag + "': tweet " + t.tweet_id +
                            " has no gold label");
    if (*t.gold == GoldLabel::kTop1) ++top1;
    if (*t.gold == GoldLabel::kNext9) ++next9;
  }
  if (top1 != 1)
    throw MalformedRecord("hashtag '" + hashtag + "': expected exactly one "
                          "top-1 label, found " + std::to_string(top1));
  const std::size_t want_next9 = std::min<std::size_t>(9, tweets.size() - 1);
  if (next9 != want_next9)
    throw MalformedRecord("hashtag '" + hashtag + "': expected " +
                          std::to_string(want_next9) + " next-9 labels, found " +
                          std::to_string(next9));
}

std::vector<std::vector<std::string>> ingest_plaintext(std::istream& in) {
  std::vector<std::vector<std::string>> sentences;
  std::string line;
  std::size_t lineno = 0;
  while (next_line(in, line)) {
    ++lineno;
    auto tokens = tokenize(line);
    if (!tokens.empty()) sentences.push_back(std::move(tokens));
  }
  if (in.bad())
    throw IngestError("read failure in plaintext corpus", lineno + 1);
  return sentences;
}

std::vector<std::vector<std::string>> ingest_plaintext_file(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError("cannot open corpus file: " + path.string());
  return ingest_plaintext(in);
}

HashtagSet ingest_tweet_tsv(std::istream& in, std::string hashtag) {
  HashtagSet set;
  set.hashtag = std::move(hashtag);
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t lineno = 0;
  while (next_line(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto fields = split_tabs(line);
    if (fields.size() < 2 || fields.size() > 3)
      throw MalformedRecord("expected 2 or 3 tab-separated fields, got " +
                            std::to_string(fields.size()), lineno);
    if (fields[0].empty()) throw MalformedRecord("empty tweet_id", lineno);

    TweetRecord record;
    record.tweet_id = fields[0];
    record.text = fields[1];
    if (fields.size() == 3) {
      if (fields[2] == "0") record.gold = GoldLabel::kRest;
      else if (fields[2] == "1") record.gold = GoldLabel::kNext9;
      else if (fields[2] == "2") record.gold = GoldLabel::kTop1;
      else
        throw MalformedRecord("label must be 0, 1 or 2, got '" + fields[2] + "'",
                              lineno);
    }
    if (!seen.insert(record.tweet_id).second)
      throw DuplicateId("duplicate tweet_id '" + record.tweet_id + "' at line " +
                        std::to_string(lineno));
    set.tweets.push_back(std::move(record));
  }
  if (in.bad()) throw IngestError("read failure in tweet TSV", lineno + 1);
  return set;
}

HashtagSet ingest_tweet_tsv_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError("cannot open tweet file: " + path.string());
  return ingest_tweet_tsv(in, path.stem().string());
}

void write_tweet_tsv(const HashtagSet& set, std::ostream& out) {
  for (const auto& t : set.tweets) {
    for (const std::string* field : {&t.tweet_id, &t.text}) {
      if (field->find_first_of("\t\n") != std::string::npos)
        throw MalformedRecord("field contains tab or newline in tweet '" +
                              t.tweet_id + "'");
    }
    out << t.tweet_id << '\t' << t.text;
    if (t.gold) out << '\t' << static_cast<int>(*t.gold);
    out << '\n';
  }
}

}  // namespace humorlm
