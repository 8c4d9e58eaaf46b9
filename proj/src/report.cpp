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

#include "kpx/report.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <system_error>

#include "kpx/csv.hpp"
#include "kpx/error.hpp"

namespace kpx {

namespace {

using ojson = nlohmann::ordered_json;

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open output file: " + path.string());
  out << content;
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace

void KeyphraseCounts::add(const std::string& keyphrase, Polarity polarity, std::size_t n) {
  if (n == 0) return;
  counts_[{keyphrase, polarity}] += n;
}

void KeyphraseCounts::merge(const KeyphraseCounts& other) {
  for (const auto& [key, n] : other.counts_) counts_[key] += n;
}

std::vector<KeyphraseStat> KeyphraseCounts::stats() const {
  std::vector<KeyphraseStat> out;
  out.reserve(counts_.size());
  for (const auto& [key, n] : counts_) out.push_back({key.first, key.second, n});
  // counts_ iterates in (keyphrase, polarity) order; a stable sort on count
  // keeps that as the tie-break.
  std::stable_sort(out.begin(), out.end(),
                   [](const KeyphraseStat& a, const KeyphraseStat& b) { return a.count > b.count; });
  return out;
}

std::size_t KeyphraseCounts::total() const {
  std::size_t n = 0;
  for (const auto& [key, c] : counts_) n += c;
  return n;
}

std::size_t KeyphraseCounts::unique(Polarity polarity) const {
  return static_cast<std::size_t>(std::count_if(
      counts_.begin(), counts_.end(), [&](const auto& kv) { return kv.first.second == polarity; }));
}

KeyphraseCounts aggregate(std::span<const ScoredKeyphrase> keyphrases) {
  KeyphraseCounts counts;
  for (const auto& k : keyphrases) counts.add(k);
  return counts;
}

std::vector<KeyphraseStat> top_k(std::span<const KeyphraseStat> stats, Polarity polarity,
                                 std::size_t k) {
  std::vector<KeyphraseStat> out;
  for (const auto& s : stats) {
    if (out.size() >= k) break;
    if (s.polarity == polarity) out.push_back(s);
  }
  return out;
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  throw ConfigError("unknown report format: " + std::string(name));
}

std::string summary_json(const RunSummary& s) {
  ojson rejected = ojson::object();
  for (std::size_t i = 0; i < kRejectReasonCount; ++i)
    rejected[std::string(to_string(static_cast<RejectReason>(i)))] = s.refine.rejected[i];

  ojson j;
  j["corpus"] = {
      {"records", s.records},
      {"malformed", s.malformed},
      {"replaced_bytes", s.replaced_bytes},
      {"read", s.read},
      {"deduped", s.deduped},
      {"sampled", s.sampled},
      {"non_english_dropped", s.non_english_dropped},
      {"language_unknown", s.language_unknown},
      {"english", s.english},
  };
  j["extraction"] = {
      {"processed", s.processed},
      {"sentences", s.sentences},
      {"candidates", s.refine.candidates},
      {"rejected", rejected},
      {"neutral_dropped", s.refine.neutral_dropped},
      {"emitted", s.refine.emitted},
      {"unique_negative", s.unique_negative},
      {"unique_positive", s.unique_positive},
  };
  j["config"] = {
      {"grammar", s.grammar},
      {"max_len", s.max_len},
      {"neutral_band", s.neutral_band},
      {"sample_fraction", s.sample_fraction},
      {"sample_seed", s.sample_seed},
      {"english_threshold", s.english_threshold},
      {"dedup", s.dedup},
      {"merge_adjacent_chunks", s.merge_adjacent_chunks},
  };
  return j.dump(2) + "\n";
}

void write_stats_csv(std::ostream& out, std::span<const KeyphraseStat> stats) {
  out << "keyphrase,polarity,count\n";
  for (const auto& s : stats) {
    out << csv::format_row({s.keyphrase, std::string(to_string(s.polarity)), std::to_string(s.count)})
        << '\n';
  }
}

void write_stats_json(std::ostream& out, std::span<const KeyphraseStat> stats) {
  ojson arr = ojson::array();
  for (const auto& s : stats) {
    arr.push_back({{"keyphrase", s.keyphrase},
                   {"polarity", std::string(to_string(s.polarity))},
                   {"count", s.count}});
  }
  out << arr.dump(2) << '\n';
}

void write_keyphrases_jsonl(std::ostream& out, std::span<const ScoredKeyphrase> keyphrases) {
  for (const auto& k : keyphrases) {
    const ojson j = {{"doc_id", k.doc_id},
                     {"sentence_index", k.sentence_index},
                     {"keyphrase", k.text},
                     {"token_count", k.token_count},
                     {"score", k.score},
                     {"polarity", std::string(to_string(k.polarity))}};
    out << j.dump() << '\n';
  }
}

void write_report(std::span<const KeyphraseStat> stats, const RunSummary& summary,
                  ReportFormat format, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create output directory " + out_dir.string() + ": " + ec.message());

  std::ostringstream body;
  if (format == ReportFormat::csv) {
    write_stats_csv(body, stats);
    write_file(out_dir / "keyphrase_stats.csv", body.str());
  } else {
    write_stats_json(body, stats);
    write_file(out_dir / "keyphrase_stats.json", body.str());
  }
  write_file(out_dir / "summary.json", summary_json(summary));
}

}  // namespace kpx
