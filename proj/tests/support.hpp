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

// Shared fixtures for the test binaries.

#ifndef KPX_TESTS_SUPPORT_HPP_
#define KPX_TESTS_SUPPORT_HPP_

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <sys/wait.h>
#include <string>
#include <vector>

#include "kpx/pipeline.hpp"

namespace kpx::testing {

inline std::filesystem::path test_data(const std::string& name) {
  return std::filesystem::path(KPX_TEST_DATA_DIR) / name;
}

inline const RunConfig& default_config() {
  static const RunConfig cfg;
  return cfg;
}

/// Loaded once per process; every resource is immutable.
inline const Extractor& extractor() {
  static const Extractor e = Extractor::load(default_config());
  return e;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path temp_dir(const std::string& tag) {
  static std::mt19937_64 rng(std::random_device{}());
  auto dir = std::filesystem::temp_directory_path() /
             ("kpx_" + tag + "_" + std::to_string(rng() % 1000000000ULL));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

struct CommandResult {
  int status = -1;
  std::string out;
};

/// Runs a shell command, capturing standard output.
inline CommandResult run_command(const std::string& cmd) {
  CommandResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

inline std::string cli() { return KPX_CLI_PATH; }

/// Deterministic pseudo-social-media document generator.
class DocumentGenerator {
 public:
  explicit DocumentGenerator(std::uint64_t seed) : rng_(seed) {}

  std::string document() {
    static const std::vector<std::string> words = {
        "the", "virus", "is", "spreading", "and", "we", "must", "stay", "at", "home",
        "masks", "help", "people", "feel", "safe", "panic", "buying", "hurts", "everyone",
        "good", "bad", "terrible", "great", "hope", "fear", "death", "die", "fight", "kill",
        "lockdown", "vaccine", "doctors", "nurses", "are", "amazing", "very", "not", "never",
        "really", "sad", "happy", "news", "government", "failed", "us", "in", "public",
        "areas", "love", "hate", "worried", "about", "my", "family", "sick", "healthy",
        "I'm", "can't", "don't", "won't", "lol", "idk", "tbh", "so", "much", "a", "of",
        "to", "for", "with", "this", "that", "crisis", "pandemic", "economy", "jobs", "lost",
        "Stop", "Trump", "China", "quarantine", "is", "boring", "soooo", "goooood", "2020",
        "10,000", "&amp;", "<b>", "</b>", "@user", "#covid", "https://t.co/x", "!!", "?",
        "better", "worse", "running", "tested", "positive", "negative", "cases", "rising"};
    std::uniform_int_distribution<int> sentences(1, 3);
    std::uniform_int_distribution<int> len(2, 14);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    std::string out;
    const int n = sentences(rng_);
    for (int s = 0; s < n; ++s) {
      const int m = len(rng_);
      for (int i = 0; i < m; ++i) {
        if (!out.empty()) out += ' ';
        out += words[pick(rng_)];
      }
      out += (rng_() % 3 == 0) ? "!" : ".";
    }
    return out;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace kpx::testing

#endif  // KPX_TESTS_SUPPORT_HPP_
