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

// Keyphrase frequency aggregation and report writers.

#ifndef KPX_REPORT_HPP_
#define KPX_REPORT_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kpx/refine.hpp"

namespace kpx {

struct KeyphraseStat {
  std::string keyphrase;
  Polarity polarity = Polarity::negative;
  std::size_t count = 0;

  bool operator==(const KeyphraseStat&) const = default;
};

/// Mergeable (keyphrase, polarity) -> count map.
class KeyphraseCounts {
 public:
  void add(const ScoredKeyphrase& k) { add(k.text, k.polarity, 1); }
  void add(const std::string& keyphrase, Polarity polarity, std::size_t n);
  void merge(const KeyphraseCounts& other);

  /// Count descending, then keyphrase ascending, then polarity.
  std::vector<KeyphraseStat> stats() const;

  std::size_t total() const;
  std::size_t unique(Polarity polarity) const;
  std::size_t size() const { return counts_.size(); }

  bool operator==(const KeyphraseCounts&) const = default;

 private:
  std::map<std::pair<std::string, Polarity>, std::size_t> counts_;
};

KeyphraseCounts aggregate(std::span<const ScoredKeyphrase> keyphrases);

/// The first k stats of one polarity, in stats() order.
std::vector<KeyphraseStat> top_k(std::span<const KeyphraseStat> stats, Polarity polarity,
                                 std::size_t k);

enum class ReportFormat { csv, json };

ReportFormat parse_report_format(std::string_view name);

/// Funnel counters and the configuration that produced them.
struct RunSummary {
  // corpus
  std::size_t records = 0;
  std::size_t malformed = 0;
  std::size_t replaced_bytes = 0;
  std::size_t read = 0;
  std::size_t deduped = 0;
  std::size_t sampled = 0;
  std::size_t non_english_dropped = 0;
  std::size_t language_unknown = 0;
  std::size_t english = 0;
  // extraction
  std::size_t processed = 0;
  std::size_t sentences = 0;
  RefineCounters refine;
  std::size_t unique_negative = 0;
  std::size_t unique_positive = 0;
  // configuration
  std::string grammar;
  std::size_t max_len = 0;
  double neutral_band = 0.0;
  double sample_fraction = 1.0;
  std::uint64_t sample_seed = 0;
  double english_threshold = 0.0;
  bool dedup = true;
  bool merge_adjacent_chunks = true;
};

/// Pretty-printed JSON, keys in a fixed order.
std::string summary_json(const RunSummary& summary);

void write_stats_csv(std::ostream& out, std::span<const KeyphraseStat> stats);
void write_stats_json(std::ostream& out, std::span<const KeyphraseStat> stats);
/// One JSON object per line.
void write_keyphrases_jsonl(std::ostream& out, std::span<const ScoredKeyphrase> keyphrases);

/// Writes keyphrase_stats.{csv|json} and summary.json into `out_dir`,
/// creating it if needed. Throws IoError on failure.
void write_report(std::span<const KeyphraseStat> stats, const RunSummary& summary,
                  ReportFormat format, const std::filesystem::path& out_dir);

}  // namespace kpx

#endif  // KPX_REPORT_HPP_
