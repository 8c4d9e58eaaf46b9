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

// Chunking of tagged sentences, IOB conversion and candidate assembly.

#ifndef KPX_CHUNK_HPP_
#define KPX_CHUNK_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kpx/annotate.hpp"
#include "kpx/grammar.hpp"

namespace kpx {

struct Span {
  std::size_t start = 0;
  std::size_t end = 0;  // exclusive

  bool operator==(const Span&) const = default;
};

struct Chunk {
  std::size_t start = 0;
  std::size_t end = 0;  // exclusive
  std::vector<TaggedToken> tokens;
};

/// Greedy leftmost-longest: at each position take the longest non-empty
/// match and resume after it, else advance one token.
std::vector<Span> find_chunk_spans(std::span<const PosTag> tags, const CompiledGrammar& grammar);
std::vector<Chunk> find_chunks(std::span<const TaggedToken> sentence,
                               const CompiledGrammar& grammar);

enum class IobLabel { B, I, O };

/// "B-KT", "I-KT" or "O".
std::string_view to_string(IobLabel label);

struct IobToken {
  std::string lemma;
  PosTag tag = PosTag::NN;
  IobLabel label = IobLabel::O;

  bool operator==(const IobToken&) const = default;
};

/// Throws std::logic_error when chunks overlap, are unordered, empty or out
/// of bounds.
std::vector<IobToken> to_iob(std::span<const TaggedToken> sentence, std::span<const Chunk> chunks);

/// Lemmas of each maximal run of non-O tokens. Without merging, a B-KT
/// inside a run starts a new candidate.
std::vector<std::vector<std::string>> assemble_keyphrases(std::span<const IobToken> iob,
                                                          bool merge_adjacent = true);

}  // namespace kpx

#endif  // KPX_CHUNK_HPP_
