// arpa.hpp
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
// ARPA text serialization of backoff models: a \data\ header with one
// "ngram k=<count>" line per order, then per order a \k-grams: section of
// lines
//
//   <log10prob>\t<w1> ... <wk>[\t<log10backoff>]
//
// and a closing \end\ sentinel. Values are printed with six fractional
// digits; the backoff field is omitted for the highest order and for
// entries without a stored backoff (meaning weight 1, log10 0). Sections
// are sorted by token id, so the writer's output is byte-reproducible.

#pragma once

#include <filesystem>
#include <iosfwd>

#include "humorlm/backoff_model.hpp"

namespace humorlm {

void write_arpa(const BackoffModel& model, std::ostream& out);
void write_arpa(const BackoffModel& model, const std::filesystem::path& path);

// Strict reader for the grammar above (blank lines between sections are
// tolerated). The vocabulary is rebuilt from the unigram section, which
// must contain <unk>, <s> and </s>. Throws ArpaParseError with the
// offending line, or ArpaCountMismatch if a section's size disagrees with
// the \data\ header.
BackoffModel read_arpa(std::istream& in);
BackoffModel read_arpa(const std::filesystem::path& path);

}  // namespace humorlm
