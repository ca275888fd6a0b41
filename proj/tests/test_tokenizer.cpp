// test_tokenizer.cpp
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

#include "humorlm/tokenizer.hpp"

#include <string>
#include <vector>

#include "doctest.h"

using humorlm::sanitize_utf8;
using humorlm::tokenize;

namespace {

std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

}  // namespace

TEST_CASE("tokenize lowercases and splits trailing punctuation") {
  CHECK(tokenize("The CAT sat.") ==
        std::vector<std::string>{"the", "cat", "sat", "."});
}

TEST_CASE("tokenize keeps mentions and hashtags whole") {
  CHECK(tokenize("@midnight loves #GhostMovies!") ==
        std::vector<std::string>{"@midnight", "loves", "#ghostmovies", "!"});
}

TEST_CASE("tokenize of empty input is empty") {
  CHECK(tokenize("").empty());
  CHECK(tokenize("   \t  ").empty());
}

TEST_CASE("tokenize keeps URLs whole") {
  CHECK(tokenize("see Http://X.co/a,b now") ==
        std::vector<std::string>{"see", "http://x.co/a,b", "now"});
}

TEST_CASE("tokenize splits interior punctuation of plain words") {
  CHECK(tokenize("well-known (really)") ==
        std::vector<std::string>{"well", "-", "known", "(", "really", ")"});
}

TEST_CASE("a sigil followed only by punctuation is ordinary punctuation") {
  CHECK(tokenize("@! #") == std::vector<std::string>{"@", "!", "#"});
  CHECK(tokenize("#tag!!") == std::vector<std::string>{"#tag", "!", "!"});
}

TEST_CASE("tokenize never emits special tokens") {
  for (const char* input : {"<s>", "</s>", "<unk>", "a <s> b"}) {
    for (const auto& token : tokenize(input)) {
      CHECK(token != "<s>");
      CHECK(token != "</s>");
      CHECK(token != "<unk>");
    }
  }
}

TEST_CASE("tokenize emits no empty tokens and no whitespace") {
  const auto tokens = tokenize("  a\t\tb  ,, c!d  ");
  for (const auto& token : tokens) {
    CHECK(!token.empty());
    CHECK(token.find(' ') == std::string::npos);
    CHECK(token.find('\t') == std::string::npos);
  }
}

TEST_CASE("tokenize is idempotent on its own joined output") {
  const char* inputs[] = {
      "The CAT sat.",
      "@midnight loves #GhostMovies!",
      "see Http://X.co/a,b now",
      "well-known (really)",
      "#tag!! @x @! ...",
      "MiXeD CaSe AND 123 numbers, too!",
  };
  for (const char* input : inputs) {
    const auto once = tokenize(input);
    CHECK(tokenize(join(once)) == once);
  }
}

TEST_CASE("invalid bytes are replaced, never fatal") {
  const std::string bad = "ok \xff\xfe then";
  const auto tokens = tokenize(bad);
  REQUIRE(tokens.size() == 3);
  CHECK(tokens[0] == "ok");
  CHECK(tokens[1] == "\xEF\xBF\xBD\xEF\xBF\xBD");
  CHECK(tokens[2] == "then");
}

TEST_CASE("sanitize_utf8 accepts valid multi-byte sequences") {
  const std::string text = "caf\xC3\xA9 \xE2\x82\xAC \xF0\x9F\x98\x80";
  CHECK(sanitize_utf8(text) == text);
}

TEST_CASE("sanitize_utf8 rejects overlongs, surrogates and out-of-range") {
  CHECK(sanitize_utf8("\xC0\xAF") == "\xEF\xBF\xBD\xEF\xBF\xBD");
  CHECK(sanitize_utf8("\xED\xA0\x80") ==
        "\xEF\xBF\xBD\xEF\xBF\xBD\xEF\xBF\xBD");
  CHECK(sanitize_utf8("\xF5\x80\x80\x80") ==
        "\xEF\xBF\xBD\xEF\xBF\xBD\xEF\xBF\xBD\xEF\xBF\xBD");
}

TEST_CASE("multi-byte sequences pass through tokenization unchanged") {
  CHECK(tokenize("caf\xC3\xA9") == std::vector<std::string>{"caf\xC3\xA9"});
}
