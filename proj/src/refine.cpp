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

#include "kpx/refine.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "kpx/error.hpp"
#include "kpx/text.hpp"

namespace kpx {

std::string_view to_string(Polarity p) {
  switch (p) {
    case Polarity::negative: return "negative";
    case Polarity::neutral: return "neutral";
    case Polarity::positive: return "positive";
  }
  return "neutral";
}

std::optional<Polarity> parse_polarity(std::string_view name) {
  if (name == "negative") return Polarity::negative;
  if (name == "neutral") return Polarity::neutral;
  if (name == "positive") return Polarity::positive;
  return std::nullopt;
}

void FilterConfig::validate() const {
  if (max_len < 1) throw ConfigError("max-len must be at least 1");
  if (!(neutral_band >= 0.0 && neutral_band < 1.0))
    throw ConfigError("neutral band must lie in [0, 1)");
}

std::string_view to_string(RejectReason r) {
  switch (r) {
    case RejectReason::is_stopword: return "is_stopword";
    case RejectReason::stripped_empty: return "stripped_empty";
    case RejectReason::too_long: return "too_long";
  }
  return "is_stopword";
}

std::vector<std::string> strip_boundary_stopwords(std::vector<std::string> lemmas,
                                                  const FilterConfig& cfg) {
  std::size_t b = 0, e = lemmas.size();
  while (b < e && cfg.boundary_stopwords.contains(lemmas[b])) ++b;
  while (e > b && cfg.boundary_stopwords.contains(lemmas[e - 1])) --e;
  std::vector<std::string> out;
  out.reserve(e - b);
  for (std::size_t i = b; i < e; ++i) {
    const bool interior = i != b && i + 1 != e;
    if (interior && cfg.internal_stopwords.contains(lemmas[i])) continue;
    out.push_back(std::move(lemmas[i]));
  }
  return out;
}

FilterOutcome filter_candidate(const std::vector<std::string>& lemmas, const FilterConfig& cfg) {
  if (cfg.stopwords.contains(text::join(lemmas, " "))) return {{}, RejectReason::is_stopword};
  auto stripped = strip_boundary_stopwords(lemmas, cfg);
  if (stripped.empty()) return {{}, RejectReason::stripped_empty};
  if (stripped.size() > cfg.max_len) return {{}, RejectReason::too_long};
  return {std::move(stripped), std::nullopt};
}

Polarity classify_polarity(double score, const FilterConfig& cfg) {
  if (score > cfg.neutral_band) return Polarity::positive;
  if (score < -cfg.neutral_band) return Polarity::negative;
  return Polarity::neutral;
}

double round_score(double score) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", score);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // no negative zero
}

void RefineCounters::merge(const RefineCounters& other) {
  candidates += other.candidates;
  for (std::size_t i = 0; i < rejected.size(); ++i) rejected[i] += other.rejected[i];
  neutral_dropped += other.neutral_dropped;
  emitted += other.emitted;
}

std::vector<ScoredKeyphrase> refine(std::string_view doc_id, const std::vector<Candidate>& candidates,
                                    const FilterConfig& cfg, const SentimentLexicon& lexicon,
                                    RefineCounters* counters) {
  RefineCounters local;
  std::vector<ScoredKeyphrase> out;
  for (const Candidate& c : candidates) {
    if (c.lemmas.empty()) continue;
    ++local.candidates;
    FilterOutcome f = filter_candidate(c.lemmas, cfg);
    if (!f.accepted()) {
      ++local.rejected[static_cast<std::size_t>(*f.rejected)];
      continue;
    }
    std::string phrase = text::join(f.lemmas, " ");
    const double score = round_score(sentiment_score(phrase, lexicon));
    const Polarity p = classify_polarity(score, cfg);
    if (p == Polarity::neutral) {
      ++local.neutral_dropped;
      continue;
    }
    ++local.emitted;
    out.push_back({std::string(doc_id), c.sentence_index, std::move(phrase), f.lemmas.size(), score, p});
  }
  if (counters) counters->merge(local);
  return out;
}

}  // namespace kpx
