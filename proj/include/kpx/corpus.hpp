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

// Corpus ingestion and reduction: reading JSONL/CSV comment files, the
// English gate, exact-duplicate removal and seeded Bernoulli sampling.

#ifndef KPX_CORPUS_HPP_
#define KPX_CORPUS_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kpx/tables.hpp"

namespace kpx {

struct RawComment {
  std::string id;
  std::string source;
  std::string text;
  std::optional<std::string> timestamp;

  bool operator==(const RawComment&) const = default;
};

enum class CorpusFormat { jsonl, csv };

CorpusFormat parse_corpus_format(std::string_view name);

struct CorpusConfig {
  double sample_fraction = 1.0;
  std::uint64_t sample_seed = 0;
  double english_threshold = 0.35;

  /// Throws ConfigError when a fraction or threshold lies outside [0, 1].
  void validate() const;
};

/// Per-file ingestion diagnostics. Only the first `kMaxDiagnostics` messages
/// are kept; `malformed` always counts every skipped record.
struct ReadReport {
  static constexpr std::size_t kMaxDiagnostics = 100;

  std::size_t records = 0;
  std::size_t malformed = 0;
  std::size_t replaced_bytes = 0;
  std::vector<std::string> diagnostics;

  void warn(std::string message);
};

/// Reads every record in file order. Records without a string `id` or `text`,
/// or with an id seen earlier in the file, are skipped with a diagnostic.
/// Throws IoError when the file cannot be opened, and for CSV input whose
/// header lacks `id` or `text`.
std::vector<RawComment> read_corpus(const std::filesystem::path& path, CorpusFormat format,
                                    ReadReport& report);
std::vector<RawComment> parse_corpus(std::istream& in, CorpusFormat format, ReadReport& report);

enum class Language { english, other, unknown };

std::string_view to_string(Language language);

struct LanguageGuess {
  Language language = Language::unknown;
  double confidence = 0.0;
};

/// English/other gate scored as the fraction of alphabetic tokens found in a
/// high-frequency English word list. Fewer than three tokens is `unknown`.
class EnglishDetector {
 public:
  static constexpr std::size_t kMinTokens = 3;

  EnglishDetector(WordSet words, double threshold);

  LanguageGuess detect(std::string_view text) const;
  double threshold() const { return threshold_; }

 private:
  WordSet words_;
  double threshold_;
};

/// Lowercased text with whitespace runs collapsed and trimmed.
std::string dedup_key(std::string_view text);

/// Keeps the first comment for each dedup key. Not thread-safe.
class Deduplicator {
 public:
  bool admit(std::string_view text);
  std::size_t size() const { return seen_.size(); }

 private:
  WordSet seen_;
};

std::vector<RawComment> dedup(std::vector<RawComment> comments);

/// Seeded 64-bit hash of a comment id (FNV-1a folded through a SplitMix64
/// finalizer).
std::uint64_t sample_hash(std::string_view id, std::uint64_t seed);

/// True iff sample_hash(id, seed) / 2^64 < fraction.
bool in_sample(std::string_view id, double fraction, std::uint64_t seed);

std::vector<RawComment> sample(std::vector<RawComment> comments, const CorpusConfig& cfg);

}  // namespace kpx

#endif  // KPX_CORPUS_HPP_
