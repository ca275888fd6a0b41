// vocabulary.cpp
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

#include "humorlm/vocabulary.hpp"

#include <algorithm>
#include <stdexcept>

#include "humorlm/errors.hpp"

namespace humorlm {

Vocabulary::Vocabulary() {
  add(kUnkToken);
  add(kSosToken);
  add(kEosToken);
}

TokenId Vocabulary::add(std::string token) {
  auto it = ids_.find(token);
  if (it != ids_.end()) return it->second;
  const auto id = static_cast<TokenId>(tokens_.size());
  ids_.emplace(token, id);
  tokens_.push_back(std::move(token));
  return id;
}

std::optional<TokenId> Vocabulary::id_of(std::string_view token) const {
  auto it = ids_.find(std::string(token));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

TokenId Vocabulary::id_or_unk(std::string_view token) const {
  auto it = ids_.find(std::string(token));
  return it == ids_.end() ? kUnkId : it->second;
}

bool Vocabulary::contains(std::string_view token) const {
  return ids_.count(std::string(token)) != 0;
}

const std::string& Vocabulary::token_of(TokenId id) const {
  if (id >= tokens_.size())
    throw UnknownId("token id " + std::to_string(id) + " out of range");
  return tokens_[id];
}

Vocabulary build_vocabulary(const std::vector<std::vector<std::string>>& sentences,
                            std::uint64_t min_count) {
  if (min_count < 1) throw std::invalid_argument("min_count must be >= 1");
  std::unordered_map<std::string, std::uint64_t> freq;
  for (const auto& sentence : sentences)
    for (const auto& token : sentence) ++freq[token];

  std::vector<std::pair<std::string_view, std::uint64_t>> kept;
  kept.reserve(freq.size());
  for (const auto& [token, count] : freq)
    if (count >= min_count) kept.emplace_back(token, count);
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });

  Vocabulary vocab;
  for (const auto& [token, count] : kept) vocab.add(std::string(token));
  return vocab;
}

}  // namespace humorlm
