// Copyright 2026 The kpx Authors.
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

#include "kpx/corpus.hpp"

#include <fstream>
#include <json.hpp>

#include "kpx/csv.hpp"
#include "kpx/error.hpp"
#include "kpx/text.hpp"

namespace kpx {

namespace {

using json = nlohmann::json;

std::optional<std::string> string_field(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) return std::nullopt;
  return it->get<std::string>();
}

class IdRegistry {
 public:
  bool fresh(const std::string& id) { return seen_.insert(id).second; }

 private:
  WordSet seen_;
};

void parse_jsonl(std::istream& in, ReadReport& report, std::vector<RawComment>& out) {
  IdRegistry ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    ++report.records;
    const std::string clean = text::sanitize_utf8(line, &report.replaced_bytes);
    const json obj = json::parse(clean, nullptr, /*allow_exceptions=*/false);
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (obj.is_discarded() || !obj.is_object()) {
      report.warn(where + "not a JSON object");
      continue;
    }
    auto id = string_field(obj, "id");
    auto body = string_field(obj, "text");
    if (!id || id->empty()) {
      report.warn(where + "missing string field \"id\"");
      continue;
    }
    if (!body) {
      report.warn(where + "missing string field \"text\"");
      continue;
    }
    if (!ids.fresh(*id)) {
      report.warn(where + "duplicate id \"" + *id + "\"");
      continue;
    }
    RawComment c;
    c.id = std::move(*id);
    c.text = std::move(*body);
    c.source = string_field(obj, "source").value_or("");
    c.timestamp = string_field(obj, "timestamp");
    out.push_back(std::move(c));
  }
}

void parse_csv(std::istream& in, ReadReport& report, std::vector<RawComment>& out) {
  csv::Reader reader(in);
  const auto header = reader.next();
  if (!header) return;
  std::optional<std::size_t> id_col, text_col, source_col, ts_col;
  for (std::size_t i = 0; i < header->size(); ++i) {
    std::string name = text::to_lower(text::collapse_whitespace((*header)[i]));
    if (i == 0 && name.rfind("\xEF\xBB\xBF", 0) == 0) name.erase(0, 3);  // BOM
    if (name == "id") id_col = i;
    if (name == "text") text_col = i;
    if (name == "source") source_col = i;
    if (name == "timestamp") ts_col = i;
  }
  if (!id_col || !text_col) throw IoError("CSV header must declare `id` and `text` columns");

  IdRegistry ids;
  while (auto row = reader.next()) {
    if (row->size() == 1 && (*row)[0].empty()) continue;  // blank line
    ++report.records;
    const std::string where = "line " + std::to_string(reader.line()) + ": ";
    if (reader.error()) {
      report.warn(where + "unterminated quoted field");
      continue;
    }
    if (row->size() != header->size()) {
      report.warn(where + "expected " + std::to_string(header->size()) + " fields, got " +
                  std::to_string(row->size()));
      continue;
    }
    for (auto& field : *row) field = text::sanitize_utf8(field, &report.replaced_bytes);
    RawComment c;
    c.id = (*row)[*id_col];
    if (c.id.empty()) {
      report.warn(where + "empty id");
      continue;
    }
    if (!ids.fresh(c.id)) {
      report.warn(where + "duplicate id \"" + c.id + "\"");
      continue;
    }
    c.text = (*row)[*text_col];
    if (source_col) c.source = (*row)[*source_col];
    if (ts_col && !(*row)[*ts_col].empty()) c.timestamp = (*row)[*ts_col];
    out.push_back(std::move(c));
  }
}

// Splits into runs of letters joined by internal apostrophes.
std::vector<std::string> alphabetic_tokens(std::string_view s) {
  std::vector<std::string> tokens;
  std::string current;
  bool pending_apostrophe = false;
  for (std::size_t pos = 0; pos < s.size();) {
    const char32_t cp = text::decode(s, pos);
    if (text::is_letter(cp)) {
      if (pending_apostrophe) current.push_back('\'');
      pending_apostrophe = false;
      text::append_utf8(current, text::to_lower(cp));
    } else if ((cp == '\'' || cp == 0x2019) && !current.empty() && !pending_apostrophe) {
      pending_apostrophe = true;
    } else {
      pending_apostrophe = false;
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

CorpusFormat parse_corpus_format(std::string_view name) {
  if (name == "jsonl") return CorpusFormat::jsonl;
  if (name == "csv") return CorpusFormat::csv;
  throw ConfigError("unknown corpus format: " + std::string(name));
}

void CorpusConfig::validate() const {
  if (!(sample_fraction >= 0.0 && sample_fraction <= 1.0))
    throw ConfigError("sample fraction must lie in [0, 1]");
  if (!(english_threshold >= 0.0 && english_threshold <= 1.0))
    throw ConfigError("english threshold must lie in [0, 1]");
}

void ReadReport::warn(std::string message) {
  ++malformed;
  if (diagnostics.size() < kMaxDiagnostics) diagnostics.push_back(std::move(message));
}

std::vector<RawComment> parse_corpus(std::istream& in, CorpusFormat format, ReadReport& report) {
  std::vector<RawComment> out;
  if (format == CorpusFormat::jsonl) {
    parse_jsonl(in, report, out);
  } else {
    parse_csv(in, report, out);
  }
  return out;
}

std::vector<RawComment> read_corpus(const std::filesystem::path& path, CorpusFormat format,
                                    ReadReport& report) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus file: " + path.string());
  auto comments = parse_corpus(in, format, report);
  if (in.bad()) throw IoError("read error on corpus file: " + path.string());
  return comments;
}

std::string_view to_string(Language language) {
  switch (language) {
    case Language::english: return "english";
    case Language::other: return "other";
    case Language::unknown: return "unknown";
  }
  return "unknown";
}

EnglishDetector::EnglishDetector(WordSet words, double threshold)
    : words_(std::move(words)), threshold_(threshold) {}

LanguageGuess EnglishDetector::detect(std::string_view text) const {
  const auto tokens = alphabetic_tokens(text);
  if (tokens.size() < kMinTokens) return {Language::unknown, 0.0};
  std::size_t hits = 0;
  for (const auto& t : tokens) hits += words_.contains(t) ? 1 : 0;
  const double coverage = static_cast<double>(hits) / static_cast<double>(tokens.size());
  return {coverage >= threshold_ ? Language::english : Language::other, coverage};
}

std::string dedup_key(std::string_view text) {
  return text::collapse_whitespace(text::to_lower(text));
}

bool Deduplicator::admit(std::string_view text) { return seen_.insert(dedup_key(text)).second; }

std::vector<RawComment> dedup(std::vector<RawComment> comments) {
  Deduplicator seen;
  std::vector<RawComment> out;
  out.reserve(comments.size());
  for (auto& c : comments) {
    if (seen.admit(c.text)) out.push_back(std::move(c));
  }
  return out;
}

std::uint64_t sample_hash(std::string_view id, std::uint64_t seed) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : id) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return splitmix64(h ^ splitmix64(seed));
}

bool in_sample(std::string_view id, double fraction, std::uint64_t seed) {
  if (fraction >= 1.0) return true;
  if (!(fraction > 0.0)) return false;
  // 2^64 * fraction is exact in long double; so is the 64-bit hash.
  const long double threshold = static_cast<long double>(fraction) * 18446744073709551616.0L;
  return static_cast<long double>(sample_hash(id, seed)) < threshold;
}

std::vector<RawComment> sample(std::vector<RawComment> comments, const CorpusConfig& cfg) {
  std::vector<RawComment> out;
  for (auto& c : comments) {
    if (in_sample(c.id, cfg.sample_fraction, cfg.sample_seed)) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace kpx
