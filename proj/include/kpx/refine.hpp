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

// Candidate filtering and the sentiment gate.

#ifndef KPX_REFINE_HPP_
#define KPX_REFINE_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kpx/sentiment.hpp"
#include "kpx/tables.hpp"

namespace kpx {

enum class Polarity { negative, neutral, positive };

std::string_view to_string(Polarity p);
std::optional<Polarity> parse_polarity(std::string_view name);

struct FilterConfig {
  WordSet stopwords;
  WordSet boundary_stopwords;
  WordSet internal_stopwords;
  std::size_t max_len = 10;
  double neutral_band = 0.05;

  /// Throws ConfigError unless max_len >= 1 and 0 <= neutral_band < 1.
  void validate() const;
};

enum class RejectReason { is_stopword, stripped_empty, too_long };
inline constexpr std::size_t kRejectReasonCount = 3;

std::string_view to_string(RejectReason r);

/// Drops leading, then trailing boundary stopwords, then interior internal
/// stopwords.
std::vector<std::string> strip_boundary_stopwords(std::vector<std::string> lemmas,
                                                  const FilterConfig& cfg);

struct FilterOutcome {
  std::vector<std::string> lemmas;  // empty when rejected
  std::optional<RejectReason> rejected;

  bool accepted() const { return !rejected.has_value(); }
};

FilterOutcome filter_candidate(const std::vector<std::string>& lemmas, const FilterConfig& cfg);

/// Band-inclusive neutral zone: |score| <= band is neutral.
Polarity classify_polarity(double score, const FilterConfig& cfg);

/// Rounds to 4 decimal places (correctly rounded from the binary value).
double round_score(double score);

struct Candidate {
  std::size_t sentence_index = 0;
  std::vector<std::string> lemmas;
};

struct ScoredKeyphrase {
  std::string doc_id;
  std::size_t sentence_index = 0;
  std::string text;
  std::size_t token_count = 0;
  double score = 0.0;  // rounded to 4 places
  Polarity polarity = Polarity::neutral;

  bool operator==(const ScoredKeyphrase&) const = default;
};

struct RefineCounters {
  std::size_t candidates = 0;
  std::array<std::size_t, kRejectReasonCount> rejected{};
  std::size_t neutral_dropped = 0;
  std::size_t emitted = 0;

  void merge(const RefineCounters& other);
  bool operator==(const RefineCounters&) const = default;
};

/// filter_candidate, score the stripped phrase, drop neutral. Order of the
/// candidates is kept.
std::vector<ScoredKeyphrase> refine(std::string_view doc_id, const std::vector<Candidate>& candidates,
                                    const FilterConfig& cfg, const SentimentLexicon& lexicon,
                                    RefineCounters* counters = nullptr);

}  // namespace kpx

#endif  // KPX_REFINE_HPP_
