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

// Rule-based valence scoring (VADER compound score, vaderSentiment 3.3.2
// semantics without emoji translation).

#ifndef KPX_SENTIMENT_HPP_
#define KPX_SENTIMENT_HPP_

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "kpx/tables.hpp"

namespace kpx {

class SentimentLexicon {
 public:
  SentimentLexicon() = default;

  /// TSV `token<TAB>mean-valence[<TAB>...]`.
  static SentimentLexicon load(const std::filesystem::path& path);

  void add(std::string_view token, double valence);
  std::optional<double> valence(std::string_view lowercase_token) const;
  bool contains(std::string_view lowercase_token) const { return entries_.contains(lowercase_token); }
  std::size_t size() const { return entries_.size(); }

 private:
  StringMap<double> entries_;
};

namespace vader {

inline constexpr double kBoosterIncrement = 0.293;
inline constexpr double kCapsIncrement = 0.733;
inline constexpr double kNegationScalar = -0.74;
inline constexpr double kNormalizationAlpha = 15.0;

/// Degree modifier increment for a lowercase word, 0 when not a booster.
double booster(std::string_view lowercase_word);
bool is_negation(std::string_view lowercase_word);

/// x / sqrt(x^2 + alpha), clamped to [-1, 1].
double normalize(double sum);

}  // namespace vader

/// Compound score in [-1, 1], unrounded. Empty or all-unknown text scores 0.
double sentiment_score(std::string_view text, const SentimentLexicon& lexicon);

}  // namespace kpx

#endif  // KPX_SENTIMENT_HPP_
