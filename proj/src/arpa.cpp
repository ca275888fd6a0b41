// arpa.cpp
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

#include "humorlm/arpa.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "humorlm/errors.hpp"
#include "humorlm/tokenizer.hpp"

namespace humorlm {

namespace {

void print_value(std::ostream& out, double value) {
  if (value == 0.0) value = 0.0;  // normalize -0
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6f", value);
  out << buffer;
}

bool key_less(const NgramKey& a, const NgramKey& b) {
  for (std::size_t i = 0; i < a.len; ++i) {
    if (a.ids[i] != b.ids[i]) return a.ids[i] < b.ids[i];
  }
  return false;
}

struct Line {
  std::string text;
  std::size_t number = 0;
};

// Reads the next line, stripping a trailing '\r'. Returns false at EOF.
bool next_line(std::istream& in, Line& line) {
  if (!std::getline(in, line.text)) return false;
  if (!line.text.empty() && line.text.back() == '\r') line.text.pop_back();
  ++line.number;
  return true;
}

bool is_blank(const std::string& text) {
  return text.find_first_not_of(" \t") == std::string::npos;
}

double parse_value(const std::string& field, std::size_t lineno) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ArpaParseError("malformed numeric field '" + field + "'", lineno);
  return value;
}

std::vector<std::string> split_whitespace(const std::string& text) {
  std::vector<std::string> fields;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t') ++i;
    if (i > start) fields.push_back(text.substr(start, i - start));
  }
  return fields;
}

}  // namespace

void write_arpa(const BackoffModel& model, std::ostream& out) {
  const std::size_t order = model.order();
  out << "\\data\\\n";
  for (std::size_t k = 1; k <= order; ++k)
    out << "ngram " << k << '=' << model.entries(k).size() << '\n';

  std::vector<NgramKey> keys;
  for (std::size_t k = 1; k <= order; ++k) {
    const EntryMap& table = model.entries(k);
    keys.clear();
    keys.reserve(table.size());
    for (const auto& [key, entry] : table) {
      (void)entry;
      keys.push_back(key);
    }
    std::sort(keys.begin(), keys.end(), key_less);

    out << "\n\\" << k << "-grams:\n";
    for (const NgramKey& key : keys) {
      const ModelEntry& entry = table.at(key);
      print_value(out, entry.log10_prob);
      out << '\t';
      for (std::size_t i = 0; i < key.len; ++i) {
        if (i) out << ' ';
        out << model.vocab().token_of(key.ids[i]);
      }
      if (entry.has_backoff && k < order) {
        out << '\t';
        print_value(out, entry.log10_backoff);
      }
      out << '\n';
    }
  }
  out << "\n\\end\\\n";
}

void write_arpa(const BackoffModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write model file: " + path.string());
  write_arpa(model, out);
  out.flush();
  if (!out) throw Error("write failure on model file: " + path.string());
}

BackoffModel read_arpa(std::istream& in) {
  Line line;

  // Header: optional blank lines, then \data\.
  for (;;) {
    if (!next_line(in, line))
      throw ArpaParseError("missing \\data\\ header", line.number);
    if (!is_blank(line.text)) break;
  }
  if (line.text != "\\data\\")
    throw ArpaParseError("expected \\data\\ header, got '" + line.text + "'",
                         line.number);

  // ngram k=<count> lines, k strictly increasing from 1.
  std::vector<std::uint64_t> declared;
  for (;;) {
    if (!next_line(in, line))
      throw ArpaParseError("unexpected end of file in \\data\\ section",
                           line.number);
    if (is_blank(line.text)) {
      if (declared.empty()) continue;
      break;
    }
    if (line.text.rfind("ngram ", 0) != 0) break;
    const std::size_t eq = line.text.find('=');
    if (eq == std::string::npos)
      throw ArpaParseError("malformed ngram count line", line.number);
    const std::string order_field = line.text.substr(6, eq - 6);
    const std::string count_field = line.text.substr(eq + 1);
    std::uint64_t k = 0, count = 0;
    auto r1 = std::from_chars(order_field.data(),
                              order_field.data() + order_field.size(), k);
    auto r2 = std::from_chars(count_field.data(),
                              count_field.data() + count_field.size(), count);
    if (r1.ec != std::errc() || r1.ptr != order_field.data() + order_field.size() ||
        r2.ec != std::errc() || r2.ptr != count_field.data() + count_field.size())
      throw ArpaParseError("malformed ngram count line", line.number);
    if (k != declared.size() + 1)
      throw ArpaParseError("ngram orders must run 1..N without gaps",
                           line.number);
    if (k > kMaxOrder)
      throw ArpaParseError("order exceeds the supported maximum", line.number);
    declared.push_back(count);
  }
  if (declared.empty())
    throw ArpaParseError("\\data\\ section declares no ngram orders",
                         line.number);
  const std::size_t order = declared.size();

  // If the loop above stopped on a non-blank line, it must already be the
  // first section header; remember it.
  bool have_pending = !is_blank(line.text) && line.text.rfind("ngram ", 0) != 0;
  Line pending = line;

  Vocabulary vocab;
  std::vector<EntryMap> tables(order);

  for (std::size_t k = 1; k <= order; ++k) {
    // Section header.
    for (;;) {
      if (have_pending) {
        line = pending;
        have_pending = false;
      } else if (!next_line(in, line)) {
        throw ArpaParseError("unexpected end of file before \\" +
                                 std::to_string(k) + "-grams: section",
                             line.number);
      }
      if (!is_blank(line.text)) break;
    }
    const std::string expected = "\\" + std::to_string(k) + "-grams:";
    if (line.text != expected)
      throw ArpaParseError("expected " + expected + ", got '" + line.text + "'",
                           line.number);

    EntryMap& table = tables[k - 1];
    table.reserve(declared[k - 1]);
    for (;;) {
      if (!next_line(in, line))
        throw ArpaParseError("unexpected end of file inside \\" +
                                 std::to_string(k) + "-grams: section",
                             line.number);
      if (is_blank(line.text)) continue;
      if (line.text[0] == '\\') {
        have_pending = true;
        pending = line;
        break;
      }

      const auto fields = split_whitespace(line.text);
      const bool has_backoff = fields.size() == k + 2;
      if (fields.size() != k + 1 && !has_backoff)
        throw ArpaParseError("expected " + std::to_string(k + 1) + " or " +
                                 std::to_string(k + 2) + " fields, got " +
                                 std::to_string(fields.size()),
                             line.number);
      if (has_backoff && k == order)
        throw ArpaParseError("backoff weight on the highest order",
                             line.number);

      ModelEntry entry;
      entry.log10_prob = parse_value(fields[0], line.number);
      if (has_backoff) {
        entry.has_backoff = true;
        entry.log10_backoff = parse_value(fields[k + 1], line.number);
      }

      NgramKey key;
      key.len = static_cast<std::uint8_t>(k);
      for (std::size_t i = 0; i < k; ++i) {
        const std::string& token = fields[1 + i];
        if (k == 1) {
          key.ids[i] = vocab.add(token);
        } else {
          const auto id = vocab.id_of(token);
          if (!id)
            throw ArpaParseError("token '" + token +
                                     "' does not appear in the unigram section",
                                 line.number);
          key.ids[i] = *id;
        }
      }
      if (!table.emplace(key, entry).second)
        throw ArpaParseError("duplicate " + std::to_string(k) + "-gram",
                             line.number);
    }

    if (table.size() != declared[k - 1])
      throw ArpaCountMismatch(
          "\\data\\ declares " + std::to_string(declared[k - 1]) + " " +
          std::to_string(k) + "-grams but the section has " +
          std::to_string(table.size()));
  }

  // Trailer.
  for (;;) {
    if (have_pending) {
      line = pending;
      have_pending = false;
    } else if (!next_line(in, line)) {
      throw ArpaParseError("missing \\end\\ sentinel", line.number);
    }
    if (!is_blank(line.text)) break;
  }
  if (line.text != "\\end\\")
    throw ArpaParseError("expected \\end\\, got '" + line.text + "'",
                         line.number);

  // The unigram section must cover the special tokens; the Vocabulary
  // constructor interns them eagerly, so check they were actually listed.
  if (tables[0].size() != vocab.size())
    throw ArpaParseError(
        "unigram section must list every token, including <unk>, <s>, </s>");

  // Suffix resolvability: the backoff chain of every stored ngram must be
  // stored too, or queries would silently lose mass.
  for (std::size_t k = 2; k <= order; ++k) {
    for (const auto& [key, entry] : tables[k - 1]) {
      (void)entry;
      if (!tables[k - 2].contains(key.suffix()))
        throw ArpaParseError(
            "stored " + std::to_string(k) +
            "-gram lacks its suffix at order " + std::to_string(k - 1));
    }
  }

  return BackoffModel(order, std::move(vocab), std::move(tables));
}

BackoffModel read_arpa(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArpaParseError("cannot open model file: " + path.string());
  return read_arpa(in);
}

}  // namespace humorlm
