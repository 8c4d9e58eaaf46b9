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

#include <algorithm>
#include <random>
#include <stdexcept>
#include <tuple>

#include "kpx/chunk.hpp"
#include "oracle/backtracking_matcher.hpp"

namespace kpx {
namespace {

using T = PosTag;
using L = IobLabel;

std::vector<TaggedToken> sentence(const std::vector<std::pair<std::string, PosTag>>& words) {
  std::vector<TaggedToken> out;
  for (const auto& [w, t] : words) {
    TaggedToken tok;
    tok.surface = w;
    tok.lemma = w;
    tok.tag = t;
    tok.token_index = out.size();
    out.push_back(tok);
  }
  return out;
}

std::vector<TaggedToken> worked() {
  return sentence({{"stop", T::NNP}, {"panic", T::NN},  {"buying", T::NN}, {"and", T::CC},
                   {"be", T::VB},    {"sure", T::JJ},   {"to", T::TO},     {"use", T::VB},
                   {"face", T::NN},  {"mask", T::NNS},  {"in", T::IN},     {"public", T::JJ},
                   {"area", T::NNS}});
}

const CompiledGrammar& grammar() {
  static const CompiledGrammar g = CompiledGrammar::compile(kDefaultGrammar);
  return g;
}

std::vector<IobToken> iob_of(const std::vector<std::tuple<std::string, PosTag, IobLabel>>& rows) {
  std::vector<IobToken> out;
  for (const auto& [l, t, b] : rows) out.push_back({l, t, b});
  return out;
}

TEST(FindChunks, WorkedSentence) {
  const auto s = worked();
  const auto chunks = find_chunks(s, grammar());
  std::vector<Span> spans;
  for (const auto& c : chunks) {
    spans.push_back({c.start, c.end});
    EXPECT_EQ(c.tokens.size(), c.end - c.start);
  }
  EXPECT_EQ(spans, (std::vector<Span>{{0, 3}, {4, 6}, {7, 10}, {10, 13}}));
}

TEST(FindChunks, AllOutside) {
  const std::vector<T> tags = {T::CC, T::TO, T::CC};
  EXPECT_TRUE(find_chunk_spans(tags, grammar()).empty());
  EXPECT_TRUE(find_chunk_spans(std::vector<T>{}, grammar()).empty());
}

TEST(FindChunks, MatchesOracleOnRandomSequences) {
  const oracle::BacktrackingMatcher o{std::string(kDefaultGrammar)};
  const std::vector<T> alphabet = {T::DT, T::JJ, T::NN, T::NNS, T::VB, T::IN, T::CC, T::TO};
  std::mt19937_64 rng(8);
  for (int i = 0; i < 10000; ++i) {
    std::vector<T> tags(rng() % 20);
    for (auto& t : tags) t = alphabet[rng() % alphabet.size()];
    std::vector<Span> expected;
    for (const auto& [a, b] : o.chunk(tags)) expected.push_back({a, b});
    ASSERT_EQ(find_chunk_spans(tags, grammar()), expected);
  }
}

TEST(ToIob, WorkedSentence) {
  const auto s = worked();
  const auto iob = to_iob(s, find_chunks(s, grammar()));
  const auto expected = iob_of({{"stop", T::NNP, L::B},  {"panic", T::NN, L::I},
                                {"buying", T::NN, L::I}, {"and", T::CC, L::O},
                                {"be", T::VB, L::B},     {"sure", T::JJ, L::I},
                                {"to", T::TO, L::O},     {"use", T::VB, L::B},
                                {"face", T::NN, L::I},   {"mask", T::NNS, L::I},
                                {"in", T::IN, L::B},     {"public", T::JJ, L::I},
                                {"area", T::NNS, L::I}});
  EXPECT_EQ(iob, expected);
}

TEST(ToIob, LabelNames) {
  EXPECT_EQ(to_string(L::B), "B-KT");
  EXPECT_EQ(to_string(L::I), "I-KT");
  EXPECT_EQ(to_string(L::O), "O");
}

TEST(ToIob, NoChunksAllOutside) {
  const auto s = sentence({{"and", T::CC}, {"to", T::TO}});
  for (const auto& t : to_iob(s, {})) EXPECT_EQ(t.label, L::O);
}

TEST(ToIob, SingleTokenChunk) {
  const auto s = sentence({{"and", T::CC}, {"mask", T::NN}, {"to", T::TO}});
  const auto chunks = find_chunks(s, grammar());
  ASSERT_EQ(chunks.size(), 1u);
  const auto iob = to_iob(s, chunks);
  EXPECT_EQ(std::count_if(iob.begin(), iob.end(), [](auto& t) { return t.label == L::B; }), 1);
  EXPECT_EQ(std::count_if(iob.begin(), iob.end(), [](auto& t) { return t.label == L::I; }), 0);
}

TEST(ToIob, OverlappingOrOutOfBoundsIsLogicError) {
  const auto s = sentence({{"a", T::NN}, {"b", T::NN}, {"c", T::NN}});
  std::vector<Chunk> overlap = {{0, 2, {}}, {1, 3, {}}};
  EXPECT_THROW(to_iob(s, overlap), std::logic_error);
  std::vector<Chunk> outside = {{2, 4, {}}};
  EXPECT_THROW(to_iob(s, outside), std::logic_error);
  std::vector<Chunk> empty = {{1, 1, {}}};
  EXPECT_THROW(to_iob(s, empty), std::logic_error);
}

TEST(Assemble, WorkedSentence) {
  const auto s = worked();
  const auto iob = to_iob(s, find_chunks(s, grammar()));
  const auto phrases = assemble_keyphrases(iob);
  ASSERT_EQ(phrases.size(), 3u);
  EXPECT_EQ(phrases[0], (std::vector<std::string>{"stop", "panic", "buying"}));
  EXPECT_EQ(phrases[1], (std::vector<std::string>{"be", "sure"}));
  EXPECT_EQ(phrases[2], (std::vector<std::string>{"use", "face", "mask", "in", "public", "area"}));
}

TEST(Assemble, WithoutMergeSplitsAtBegin) {
  const auto s = worked();
  const auto phrases = assemble_keyphrases(to_iob(s, find_chunks(s, grammar())), false);
  ASSERT_EQ(phrases.size(), 4u);
  EXPECT_EQ(phrases[2], (std::vector<std::string>{"use", "face", "mask"}));
  EXPECT_EQ(phrases[3], (std::vector<std::string>{"in", "public", "area"}));
}

TEST(Assemble, AllOutsideAndMergedRun) {
  EXPECT_TRUE(assemble_keyphrases(iob_of({{"and", T::CC, L::O}, {"to", T::TO, L::O}})).empty());
  const auto run = iob_of({{"a", T::NN, L::B}, {"b", T::NN, L::I}, {"c", T::IN, L::B},
                           {"d", T::NN, L::I}});
  const auto phrases = assemble_keyphrases(run);
  ASSERT_EQ(phrases.size(), 1u);
  EXPECT_EQ(phrases[0].size(), 4u);
}

}  // namespace
}  // namespace kpx
