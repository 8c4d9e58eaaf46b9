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

#include "kpx/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "kpx/error.hpp"

#ifndef KPX_DATA_DIR
#define KPX_DATA_DIR "data"
#endif

namespace kpx {

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("KPX_DATA_DIR"); env && *env) return env;
  return KPX_DATA_DIR;
}

DataPaths DataPaths::defaults(const std::filesystem::path& dir) {
  DataPaths p;
  p.contractions = dir / "contractions.csv";
  p.slang = dir / "slang.csv";
  p.tagger_lexicon = dir / "tagger_lexicon.tsv";
  p.abbreviations = dir / "abbreviations.txt";
  p.lemma_exceptions = dir / "lemma_exceptions.tsv";
  p.stopwords = dir / "stopwords.txt";
  p.boundary_stopwords = dir / "boundary_stopwords.txt";
  p.sentiment_lexicon = dir / "sentiment_lexicon.tsv";
  p.english_words = dir / "english_words.txt";
  return p;
}

void RunConfig::validate() const {
  corpus.validate();
  if (max_len < 1) throw ConfigError("max-len must be at least 1");
  if (!(neutral_band >= 0.0 && neutral_band < 1.0))
    throw ConfigError("neutral band must lie in [0, 1)");
  if (jobs < 1) throw ConfigError("jobs must be at least 1");
}

Extractor Extractor::load(const RunConfig& cfg) {
  cfg.validate();
  const DataPaths& d = cfg.data;
  FilterConfig filter;
  filter.stopwords = load_word_list(d.stopwords);
  filter.boundary_stopwords = load_word_list(d.boundary_stopwords);
  if (d.internal_stopwords) filter.internal_stopwords = load_word_list(*d.internal_stopwords);
  filter.max_len = cfg.max_len;
  filter.neutral_band = cfg.neutral_band;
  filter.validate();

  return Extractor(
      Preprocessor(ExpansionTable::load(d.contractions, "contraction"),
                   ExpansionTable::load(d.slang, "slang")),
      Annotator(load_word_list(d.abbreviations), PosTagger(TaggerLexicon::load(d.tagger_lexicon)),
                Lemmatizer(LemmaTable::load(d.lemma_exceptions))),
      CompiledGrammar::compile(cfg.grammar), std::move(filter),
      SentimentLexicon::load(d.sentiment_lexicon),
      EnglishDetector(load_word_list(d.english_words), cfg.corpus.english_threshold),
      cfg.merge_adjacent_chunks);
}

Extractor::Extractor(Preprocessor preprocessor, Annotator annotator, CompiledGrammar grammar,
                     FilterConfig filter, SentimentLexicon lexicon, EnglishDetector detector,
                     bool merge_adjacent_chunks)
    : preprocessor_(std::move(preprocessor)),
      annotator_(std::move(annotator)),
      grammar_(std::move(grammar)),
      filter_(std::move(filter)),
      lexicon_(std::move(lexicon)),
      detector_(std::move(detector)),
      merge_adjacent_(merge_adjacent_chunks) {}

std::vector<Candidate> Extractor::candidates(
    const std::vector<std::vector<TaggedToken>>& sentences) const {
  std::vector<Candidate> out;
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    const auto chunks = find_chunks(sentences[s], grammar_);
    const auto iob = to_iob(sentences[s], chunks);
    for (auto& lemmas : assemble_keyphrases(iob, merge_adjacent_)) out.push_back({s, std::move(lemmas)});
  }
  return out;
}

DocumentResult Extractor::process(const RawComment& comment) const {
  DocumentResult r;
  const std::string clean = preprocessor_(comment.text);
  r.language = detector_.detect(clean).language;
  r.kept = r.language != Language::other;
  if (!r.kept) return r;
  const auto sentences = annotator_.annotate(clean);
  r.sentences = sentences.size();
  r.keyphrases = refine(comment.id, candidates(sentences), filter_, lexicon_, &r.counters);
  return r;
}

RunOutput run_corpus(std::vector<RawComment> comments, const Extractor& extractor,
                     const RunConfig& cfg) {
  RunOutput out;
  RunSummary& s = out.summary;
  s.read = comments.size();
  if (cfg.dedup) comments = dedup(std::move(comments));
  s.deduped = comments.size();
  comments = sample(std::move(comments), cfg.corpus);
  s.sampled = comments.size();

  std::vector<DocumentResult> results(comments.size());
  constexpr std::size_t kBatch = 64;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    try {
      for (;;) {
        const std::size_t begin = next.fetch_add(kBatch);
        if (begin >= comments.size()) return;
        const std::size_t end = std::min(begin + kBatch, comments.size());
        for (std::size_t i = begin; i < end; ++i) results[i] = extractor.process(comments[i]);
      }
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
      next.store(comments.size());
    }
  };
  const unsigned jobs = std::max(1u, cfg.jobs);
  if (jobs == 1 || comments.size() <= kBatch) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  for (auto& r : results) {
    if (!r.kept) {
      ++s.non_english_dropped;
      continue;
    }
    ++s.english;
    if (r.language == Language::unknown) ++s.language_unknown;
    if (r.sentences > 0) ++s.processed;
    s.sentences += r.sentences;
    s.refine.merge(r.counters);
    for (auto& k : r.keyphrases) {
      out.counts.add(k);
      out.keyphrases.push_back(std::move(k));
    }
  }
  s.unique_negative = out.counts.unique(Polarity::negative);
  s.unique_positive = out.counts.unique(Polarity::positive);

  s.grammar = cfg.grammar;
  s.max_len = cfg.max_len;
  s.neutral_band = cfg.neutral_band;
  s.sample_fraction = cfg.corpus.sample_fraction;
  s.sample_seed = cfg.corpus.sample_seed;
  s.english_threshold = cfg.corpus.english_threshold;
  s.dedup = cfg.dedup;
  s.merge_adjacent_chunks = cfg.merge_adjacent_chunks;
  return out;
}

RunSummary run_pipeline(const RunConfig& cfg, std::ostream* log) {
  const Extractor extractor = Extractor::load(cfg);

  ReadReport report;
  auto comments = read_corpus(cfg.input, cfg.format, report);
  if (log) {
    for (const auto& d : report.diagnostics) *log << "warning: " << cfg.input.string() << ": " << d << '\n';
    if (report.malformed > report.diagnostics.size())
      *log << "warning: " << (report.malformed - report.diagnostics.size())
           << " further malformed records\n";
  }

  RunOutput out = run_corpus(std::move(comments), extractor, cfg);
  out.summary.records = report.records;
  out.summary.malformed = report.malformed;
  out.summary.replaced_bytes = report.replaced_bytes;

  const auto stats = out.counts.stats();
  write_report(stats, out.summary, cfg.report_format, cfg.out_dir);
  std::ostringstream jsonl;
  write_keyphrases_jsonl(jsonl, out.keyphrases);
  std::ofstream f(cfg.out_dir / "keyphrases.jsonl", std::ios::binary | std::ios::trunc);
  f << jsonl.str();
  f.flush();
  if (!f) throw IoError("write failed: " + (cfg.out_dir / "keyphrases.jsonl").string());
  return out.summary;
}

}  // namespace kpx
