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

#include "support.hpp"

namespace kpx {
namespace {

using testing::cli;
using testing::run_command;

std::string q(const std::filesystem::path& p) { return "'" + p.string() + "'"; }

TEST(Cli, PreprocessDecodeStep) {
  const auto r = run_command("printf '&amp;\\n' | " + cli() + " preprocess --plain --steps decode_html");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "&\n");
}

TEST(Cli, PreprocessFull) {
  const auto r = run_command("printf 'Stop panic buying &amp; use masks!!\\n' | " + cli() +
                             " preprocess --plain");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "Stop panic buying use masks!!\n");
}

TEST(Cli, ChunkGoldTags) {
  const auto r = run_command(
      "echo 'Stop/NNP panic/NN buying/NN and/CC be/VB sure/JJ to/TO use/VB face/NN masks/NNS "
      "in/IN public/JJ areas/NNS' | " + cli() + " chunk");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("[\"stop\",\"NNP\",\"B-KT\"],[\"panic\",\"NN\",\"I-KT\"],"
                       "[\"buying\",\"NN\",\"I-KT\"],[\"and\",\"CC\",\"O\"],"
                       "[\"be\",\"VB\",\"B-KT\"],[\"sure\",\"JJ\",\"I-KT\"],[\"to\",\"TO\",\"O\"],"
                       "[\"use\",\"VB\",\"B-KT\"],[\"face\",\"NN\",\"I-KT\"],"
                       "[\"mask\",\"NNS\",\"I-KT\"],[\"in\",\"IN\",\"B-KT\"],"
                       "[\"public\",\"JJ\",\"I-KT\"],[\"area\",\"NNS\",\"I-KT\"]"),
            std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("\"candidates\":[\"stop panic buying\",\"be sure\","
                       "\"use face mask in public area\"]"),
            std::string::npos)
      << r.out;
}

TEST(Cli, ScorePlain) {
  const auto r = run_command("printf 'stop panic buying\\ngood\\n' | " + cli() + " score --plain");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "-0.6705 negative\n0.4404 positive\n");
}

TEST(Cli, AnnotateWorkedSentence) {
  const auto r = run_command("echo 'Stop panic buying and be sure to use face masks in public areas' | " +
                             cli() + " annotate");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("NNP"), std::string::npos);
  EXPECT_NE(r.out.find("\"mask\""), std::string::npos);
}

TEST(Cli, RunWritesReports) {
  const auto dir = testing::temp_dir("cli_run");
  std::ofstream(dir / "in.jsonl")
      << "{\"id\":\"1\",\"text\":\"Stop panic buying and be sure to use face masks in public areas\"}\n";
  const auto r = run_command(cli() + " run --input " + q(dir / "in.jsonl") + " --out-dir " +
                             q(dir / "out") + " 2>&1");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(testing::slurp(dir / "out" / "keyphrase_stats.csv"),
            "keyphrase,polarity,count\nstop panic buying,negative,1\n");
  EXPECT_NE(testing::slurp(dir / "out" / "keyphrases.jsonl").find("-0.6705"), std::string::npos);
}

TEST(Cli, EmptyCorpusSucceeds) {
  const auto dir = testing::temp_dir("cli_empty");
  std::ofstream(dir / "in.jsonl").flush();
  const auto r = run_command(cli() + " run --input " + q(dir / "in.jsonl") + " --out-dir " +
                             q(dir / "out") + " 2>&1");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(testing::slurp(dir / "out" / "keyphrase_stats.csv"), "keyphrase,polarity,count\n");
  EXPECT_EQ(testing::slurp(dir / "out" / "keyphrases.jsonl"), "");
}

TEST(Cli, ConfigFileAndPrecedence) {
  const auto dir = testing::temp_dir("cli_cfg");
  std::ofstream(dir / "in.jsonl")
      << "{\"id\":\"1\",\"text\":\"Stop panic buying and be sure to use face masks in public areas\"}\n";
  std::ofstream(dir / "kpx.ini") << "# run settings\nmax-len = 2\n";
  auto r = run_command(cli() + " run --config " + q(dir / "kpx.ini") + " --input " +
                       q(dir / "in.jsonl") + " --out-dir " + q(dir / "a") + " 2>&1");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(testing::slurp(dir / "a" / "keyphrase_stats.csv"), "keyphrase,polarity,count\n");
  r = run_command(cli() + " run --config " + q(dir / "kpx.ini") + " --max-len 10 --input " +
                  q(dir / "in.jsonl") + " --out-dir " + q(dir / "b") + " 2>&1");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(testing::slurp(dir / "b" / "keyphrase_stats.csv").find("stop panic buying"),
            std::string::npos);
}

TEST(Cli, ExitCodes) {
  const auto dir = testing::temp_dir("cli_exit");
  std::ofstream(dir / "in.jsonl") << "{\"id\":\"1\",\"text\":\"hello there\"}\n";
  const std::string base = cli() + " run --input " + q(dir / "in.jsonl") + " --out-dir " + q(dir / "o");
  EXPECT_EQ(run_command(base + " --max-len 0 2>/dev/null").status, 2);
  EXPECT_EQ(run_command(base + " --neutral-band 1.5 2>/dev/null").status, 2);
  EXPECT_EQ(run_command(base + " --grammar '<NN' 2>/dev/null").status, 2);
  EXPECT_EQ(run_command(base + " --slang /nonexistent/kpx.csv 2>/dev/null").status, 2);
  EXPECT_EQ(run_command(base + " --config /nonexistent/kpx.ini 2>/dev/null").status, 2);
  EXPECT_EQ(run_command(base + " --bogus-flag 2>/dev/null").status, 2);
  EXPECT_EQ(run_command(cli() + " run --input /nonexistent/kpx.jsonl --out-dir " + q(dir / "o") +
                        " 2>/dev/null").status,
            1);
}

TEST(Cli, MalformedRecordsWarnButSucceed) {
  const auto dir = testing::temp_dir("cli_bad");
  std::ofstream(dir / "in.jsonl") << "{\"id\":\"1\",\"text\":\"good news\"}\nnot json\n"
                                  << "{\"id\":\"2\"}\n";
  const auto r = run_command(cli() + " run --input " + q(dir / "in.jsonl") + " --out-dir " +
                             q(dir / "o") + " 2>&1");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("warning"), std::string::npos);
  EXPECT_NE(testing::slurp(dir / "o" / "summary.json").find("\"malformed\": 2"), std::string::npos);
}

}  // namespace
}  // namespace kpx
