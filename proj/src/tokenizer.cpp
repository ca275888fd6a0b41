// tokenizer.cpp
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

#include <cstddef>

namespace humorlm {

namespace {

constexpr const char kReplacement[] = "\xEF\xBF\xBD";  // U+FFFD

constexpr bool is_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

constexpr bool is_punct(unsigned char c) {
  return (c >= 0x21 && c <= 0x2f) || (c >= 0x3a && c <= 0x40) ||
         (c >= 0x5b && c <= 0x60) || (c >= 0x7b && c <= 0x7e);
}

constexpr char to_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

constexpr bool is_continuation(unsigned char c) { return (c & 0xc0) == 0x80; }

// Length of the valid UTF-8 sequence starting at text[i], or 0 if invalid.
std::size_t sequence_length(std::string_view text, std::size_t i) {
  const auto b0 = static_cast<unsigned char>(text[i]);
  if (b0 < 0x80) return 1;
  std::size_t len;
  unsigned char lo = 0x80, hi = 0xbf;  // allowed range of the second byte
  if (b0 >= 0xc2 && b0 <= 0xdf) {
    len = 2;
  } else if (b0 >= 0xe0 && b0 <= 0xef) {
    len = 3;
    if (b0 == 0xe0) lo = 0xa0;        // no overlong encodings
    if (b0 == 0xed) hi = 0x9f;        // no surrogates
  } else if (b0 >= 0xf0 && b0 <= 0xf4) {
    len = 4;
    if (b0 == 0xf0) lo = 0x90;
    if (b0 == 0xf4) hi = 0x8f;        // no code points above U+10FFFF
  } else {
    return 0;
  }
  if (i + len > text.size()) return 0;
  const auto b1 = static_cast<unsigned char>(text[i + 1]);
  if (b1 < lo || b1 > hi) return 0;
  for (std::size_t j = 2; j < len; ++j) {
    if (!is_continuation(static_cast<unsigned char>(text[i + j]))) return 0;
  }
  return len;
}

// Splits one whitespace-free, lowercased word into tokens.
void emit_word(std::string_view word, std::vector<std::string>& out) {
  if (word.find("://") != std::string_view::npos) {
    out.emplace_back(word);
    return;
  }
  std::size_t i = 0;
  const std::size_t n = word.size();
  while (i < n) {
    const auto c = static_cast<unsigned char>(word[i]);
    if (is_punct(c)) {
      // A '@' or '#' sigil glues the rest of the word together as one
      // token; trailing punctuation still splits off (so "#tag!" is two
      // tokens).  A sigil followed only by punctuation is ordinary.
      if ((c == '@' || c == '#') && i + 1 < n) {
        std::size_t j = n;
        while (j > i + 1 && is_punct(static_cast<unsigned char>(word[j - 1])))
          --j;
        if (j > i + 1) {
          out.emplace_back(word.substr(i, j - i));
          i = j;
          continue;
        }
      }
      out.emplace_back(1, word[i]);
      ++i;
    } else {
      std::size_t j = i;
      while (j < n && !is_punct(static_cast<unsigned char>(word[j]))) ++j;
      out.emplace_back(word.substr(i, j - i));
      i = j;
    }
  }
}

}  // namespace

std::string sanitize_utf8(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const std::size_t len = sequence_length(text, i);
    if (len == 0) {
      out += kReplacement;
      ++i;
    } else {
      out.append(text.substr(i, len));
      i += len;
    }
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  const std::string clean = sanitize_utf8(text);
  std::string lowered;
  lowered.reserve(clean.size());
  for (char c : clean) lowered.push_back(to_lower(c));

  std::vector<std::string> out;
  std::size_t i = 0;
  const std::size_t n = lowered.size();
  while (i < n) {
    while (i < n && is_space(static_cast<unsigned char>(lowered[i]))) ++i;
    std::size_t j = i;
    while (j < n && !is_space(static_cast<unsigned char>(lowered[j]))) ++j;
    if (j > i) emit_word(std::string_view(lowered).substr(i, j - i), out);
    i = j;
  }
  return out;
}

}  // namespace humorlm
