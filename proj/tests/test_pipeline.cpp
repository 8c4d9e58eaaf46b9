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

#include <gtest/gtest.h>

#include "kpx/error.hpp"
#include "kpx/pipeline.hpp"
#include "support.hpp"

namespace kpx {
namespace {

const Extractor& ex() { return testing::extractor(); }

RawComment comment(std::string id, std::string text) {
  RawComment c;
  c.id = std::move(id);
  c.text = std::move(text);
  return c;
}

std::vector<RawComment> synthetic(std::size_t n, std::uint64_t seed) {
  testing::DocumentGenerator gen(seed);
  std::vector<RawComment> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(comment("c" + std::to_string(i), gen.document()));
  return out;
}

TEST(Extractor, WorkedDocument) {
  const auto r = ex().process(
      comment("d1", "Stop panic buying and be sure to use face masks in public areas"));
  EXPECT_TRUE(r.kept);
  EXPECT_EQ(r.sentences, 1u);
  EXPECT_EQ(r.counters.candidates, 3u);
  ASSERT_EQ(r.keyphrases.size(), 1u);
  EXPECT_EQ(r.keyphrases[0].text, "stop panic buying");
  EXPECT_EQ(r.keyphrases[0].score, -0.6705);
  for (const auto& k : r.keyphrases) EXPECT_NE(k.text, "be sure");
}

TEST(Extractor, NeutralOnlyDocument) {
  const auto r = ex().process(comment("n", "the table is in the kitchen and the chair is near the window"));
  EXPECT_TRUE(r.kept);
  EXPECT_TRUE(r.keyphrases.empty());
  EXPECT_GT(r.counters.neutral_dropped, 0u);
}

TEST(Extractor, NonEnglishDropped) {
  const auto r = ex().process(comment("x", "el gobierno de la ciudad ha cerrado todas las escuelas hoy"));
  EXPECT_EQ(r.language, Language::other);
  EXPECT_FALSE(r.kept);
  EXPECT_TRUE(r.keyphrases.empty());
}

TEST(Extractor, CandidatesFromAnnotation) {
  const auto sentences =
      ex().annotator().annotate("Stop panic buying and be sure to use face masks in public areas");
  const auto c = ex().candidates(sentences);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[2].lemmas, (std::vector<std::string>{"use", "face", "mask", "in", "public", "area"}));
}

TEST(RunCorpus, EmptyCorpus) {
  const auto out = run_corpus({}, ex(), testing::default_config());
  EXPECT_TRUE(out.keyphrases.empty());
  EXPECT_EQ(out.summary.read, 0u);
  EXPECT_EQ(out.summary.refine.emitted, 0u);
  EXPECT_EQ(out.counts.size(), 0u);
}

TEST(RunCorpus, FunnelConsistency) {
  auto docs = synthetic(3000, 1);
  for (int i = 0; i < 200; ++i) docs.push_back(comment("dup" + std::to_string(i), docs[i].text));
  RunConfig cfg = testing::default_config();
  cfg.corpus.sample_fraction = 0.6;
  cfg.jobs = 4;
  const auto out = run_corpus(docs, ex(), cfg);
  const auto& s = out.summary;
  EXPECT_EQ(s.read, docs.size());
  EXPECT_LE(s.deduped, s.read - 200);
  EXPECT_GE(s.deduped, s.sampled);
  EXPECT_GE(s.sampled, s.english);
  EXPECT_GE(s.english, s.processed);
  EXPECT_EQ(s.english + s.non_english_dropped, s.sampled);
  EXPECT_EQ(s.refine.emitted, out.counts.total());
  EXPECT_EQ(s.refine.emitted, out.keyphrases.size());
  std::size_t rejected = 0;
  for (auto n : s.refine.rejected) rejected += n;
  EXPECT_EQ(s.refine.candidates, rejected + s.refine.neutral_dropped + s.refine.emitted);
}

TEST(RunCorpus, JobsDoNotChangeResults) {
  const auto docs = synthetic(2000, 2);
  RunConfig one = testing::default_config();
  RunConfig many = one;
  many.jobs = 8;
  const auto a = run_corpus(docs, ex(), one);
  const auto b = run_corpus(docs, ex(), many);
  EXPECT_EQ(a.keyphrases, b.keyphrases);
  EXPECT_EQ(a.counts, b.counts);
  EXPECT_EQ(summary_json(a.summary), summary_json(b.summary));
}

TEST(RunPipeline, RerunIsByteIdentical) {
  const auto dir = testing::temp_dir("pipe");
  {
    std::ofstream in(dir / "in.jsonl");
    for (const auto& c : synthetic(500, 3))
      in << "{\"id\":\"" << c.id << "\",\"text\":\"" << c.text << "\"}\n";
  }
  RunConfig cfg = testing::default_config();
  cfg.input = dir / "in.jsonl";
  cfg.out_dir = dir / "a";
  run_pipeline(cfg);
  cfg.out_dir = dir / "b";
  cfg.jobs = 8;
  run_pipeline(cfg);
  for (const char* f : {"keyphrase_stats.csv", "summary.json", "keyphrases.jsonl"}) {
    const std::string a = testing::slurp(dir / "a" / f);
    EXPECT_FALSE(a.empty()) << f;
    EXPECT_EQ(a, testing::slurp(dir / "b" / f)) << f;
  }
}

TEST(RunPipeline, MissingInputIsIoError) {
  RunConfig cfg = testing::default_config();
  cfg.input = "/nonexistent/kpx/in.jsonl";
  cfg.out_dir = testing::temp_dir("missing");
  EXPECT_THROW(run_pipeline(cfg), IoError);
}

TEST(RunConfig, Validation) {
  RunConfig cfg = testing::default_config();
  EXPECT_NO_THROW(cfg.validate());
  cfg.max_len = 0;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg = testing::default_config();
  cfg.corpus.sample_fraction = 1.5;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg = testing::default_config();
  cfg.data.slang = "/nonexistent/kpx/slang.csv";
  EXPECT_THROW(Extractor::load(cfg), ConfigError);
  cfg = testing::default_config();
  cfg.grammar = "<NN";
  EXPECT_THROW(Extractor::load(cfg), ConfigError);
}

}  // namespace
}  // namespace kpx
