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

// End-to-end extraction: corpus funnel, per-document processing on a worker
// pool, ordered merge and report writing.

#ifndef KPX_PIPELINE_HPP_
#define KPX_PIPELINE_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "kpx/annotate.hpp"
#include "kpx/chunk.hpp"
#include "kpx/corpus.hpp"
#include "kpx/grammar.hpp"
#include "kpx/preprocess.hpp"
#include "kpx/refine.hpp"
#include "kpx/report.hpp"
#include "kpx/sentiment.hpp"

namespace kpx {

/// $KPX_DATA_DIR if set, else the data directory of the source tree.
std::filesystem::path default_data_dir();

struct DataPaths {
  std::filesystem::path contractions;
  std::filesystem::path slang;
  std::filesystem::path tagger_lexicon;
  std::filesystem::path abbreviations;
  std::filesystem::path lemma_exceptions;
  std::filesystem::path stopwords;
  std::filesystem::path boundary_stopwords;
  std::optional<std::filesystem::path> internal_stopwords;
  std::filesystem::path sentiment_lexicon;
  std::filesystem::path english_words;

  static DataPaths defaults(const std::filesystem::path& dir = default_data_dir());
};

struct RunConfig {
  std::filesystem::path input;
  CorpusFormat format = CorpusFormat::jsonl;
  std::filesystem::path out_dir = "kpx_out";
  ReportFormat report_format = ReportFormat::csv;
  std::string grammar{kDefaultGrammar};
  CorpusConfig corpus;
  std::size_t max_len = 10;
  double neutral_band = 0.05;
  bool dedup = true;
  bool merge_adjacent_chunks = true;
  unsigned jobs = 1;
  DataPaths data = DataPaths::defaults();

  /// Throws ConfigError on out-of-range values.
  void validate() const;
};

struct DocumentResult {
  Language language = Language::unknown;
  bool kept = false;  // passed the language gate
  std::size_t sentences = 0;
  RefineCounters counters;
  std::vector<ScoredKeyphrase> keyphrases;
};

/// Immutable, shareable resources for every stage.
class Extractor {
 public:
  /// Loads and validates every data file; throws ConfigError on failure.
  static Extractor load(const RunConfig& cfg);

  Extractor(Preprocessor preprocessor, Annotator annotator, CompiledGrammar grammar,
            FilterConfig filter, SentimentLexicon lexicon, EnglishDetector detector,
            bool merge_adjacent_chunks);

  DocumentResult process(const RawComment& comment) const;

  /// Chunk, IOB-label and assemble the candidates of annotated sentences.
  std::vector<Candidate> candidates(const std::vector<std::vector<TaggedToken>>& sentences) const;

  const Preprocessor& preprocessor() const { return preprocessor_; }
  const Annotator& annotator() const { return annotator_; }
  const CompiledGrammar& grammar() const { return grammar_; }
  const FilterConfig& filter() const { return filter_; }
  const SentimentLexicon& lexicon() const { return lexicon_; }
  const EnglishDetector& detector() const { return detector_; }
  bool merge_adjacent_chunks() const { return merge_adjacent_; }

 private:
  Preprocessor preprocessor_;
  Annotator annotator_;
  CompiledGrammar grammar_;
  FilterConfig filter_;
  SentimentLexicon lexicon_;
  EnglishDetector detector_;
  bool merge_adjacent_;
};

struct RunOutput {
  std::vector<ScoredKeyphrase> keyphrases;  // corpus order
  KeyphraseCounts counts;
  RunSummary summary;
};

/// Dedup, sample, then process on `jobs` workers. Output does not depend on
/// the worker count.
RunOutput run_corpus(std::vector<RawComment> comments, const Extractor& extractor,
                     const RunConfig& cfg);

/// Reads the corpus, runs it and writes keyphrases.jsonl, the stats report
/// and summary.json. Throws ConfigError or IoError.
RunSummary run_pipeline(const RunConfig& cfg, std::ostream* log = nullptr);

}  // namespace kpx

#endif  // KPX_PIPELINE_HPP_
