// tokenizer.hpp
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

#include <string>
#include <string_view>
#include <vector>

namespace humorlm {

inline constexpr const char* kUnkToken = "<unk>";
inline constexpr const char* kSosToken = "<s>";
inline constexpr const char* kEosToken = "</s>";

// Replaces every byte that is not part of a valid UTF-8 sequence with
// U+FFFD.  Never fails.
std::string sanitize_utf8(std::string_view text);

// Splits raw text into lowercased tokens.  Whitespace separates words;
// within a word, ASCII punctuation becomes standalone single-character
// tokens, except that words containing "://" are emitted whole and a
// leading '@' or '#' keeps its word together (trailing punctuation still
// splits off).  Lowercasing is ASCII-only; multi-byte UTF-8 sequences pass
// through unchanged.  Total: any byte string is accepted (invalid UTF-8 is
// sanitized first) and the output never contains "<s>", "</s>" or "<unk>".
std::vector<std::string> tokenize(std::string_view text);

}  // namespace humorlm
