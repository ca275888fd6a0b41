// vocabulary.hpp
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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "humorlm/tokenizer.hpp"

namespace humorlm {

using TokenId = std::uint32_t;

inline constexpr TokenId kUnkId = 0;
inline constexpr TokenId kSosId = 1;
inline constexpr TokenId kEosId = 2;

// Interned token <-> dense id table.  "<unk>", "<s>" and "</s>" are always
// present as ids 0, 1, 2.
class Vocabulary {
 public:
  Vocabulary();

  // Interns a token; returns the existing id if already present.
  TokenId add(std::string token);

  std::optional<TokenId> id_of(std::string_view token) const;
  TokenId id_or_unk(std::string_view token) const;
  bool contains(std::string_view token) const;

  // Throws UnknownId if id is out of range.
  const std::string& token_of(TokenId id) const;

  std::size_t size() const { return tokens_.size(); }

  // Number of words the model may predict: everything but "<s>".
  std::size_t prediction_targets() const { return tokens_.size() - 1; }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, TokenId> ids_;
};

// Collects every token with corpus frequency >= min_count into a vocabulary.
// Ids after the specials are assigned by decreasing frequency, ties broken
// by token, so the result does not depend on sentence order.
Vocabulary build_vocabulary(const std::vector<std::vector<std::string>>& sentences,
                            std::uint64_t min_count = 1);

}  // namespace humorlm
