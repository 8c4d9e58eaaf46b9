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

#include "kpx/chunk.hpp"

#include <stdexcept>

namespace kpx {

std::vector<Span> find_chunk_spans(std::span<const PosTag> tags, const CompiledGrammar& grammar) {
  std::vector<Span> spans;
  std::size_t i = 0;
  while (i < tags.size()) {
    const std::size_t len = grammar.longest_match(tags, i);
    if (len == 0) {
      ++i;
      continue;
    }
    spans.push_back({i, i + len});
    i += len;
  }
  return spans;
}

std::vector<Chunk> find_chunks(std::span<const TaggedToken> sentence,
                               const CompiledGrammar& grammar) {
  std::vector<PosTag> tags;
  tags.reserve(sentence.size());
  for (const auto& t : sentence) tags.push_back(t.tag);
  std::vector<Chunk> chunks;
  for (const Span& s : find_chunk_spans(tags, grammar)) {
    chunks.push_back({s.start, s.end,
                      std::vector<TaggedToken>(sentence.begin() + static_cast<std::ptrdiff_t>(s.start),
                                               sentence.begin() + static_cast<std::ptrdiff_t>(s.end))});
  }
  return chunks;
}

std::string_view to_string(IobLabel label) {
  switch (label) {
    case IobLabel::B: return "B-KT";
    case IobLabel::I: return "I-KT";
    case IobLabel::O: return "O";
  }
  return "O";
}

std::vector<IobToken> to_iob(std::span<const TaggedToken> sentence, std::span<const Chunk> chunks) {
  std::vector<IobToken> out;
  out.reserve(sentence.size());
  for (const auto& t : sentence) out.push_back({t.lemma, t.tag, IobLabel::O});
  std::size_t floor = 0;
  for (const Chunk& c : chunks) {
    if (c.start >= c.end || c.end > sentence.size() || c.start < floor)
      throw std::logic_error("to_iob: chunks must be non-empty, ordered, disjoint and in bounds");
    out[c.start].label = IobLabel::B;
    for (std::size_t i = c.start + 1; i < c.end; ++i) out[i].label = IobLabel::I;
    floor = c.end;
  }
  return out;
}

std::vector<std::vector<std::string>> assemble_keyphrases(std::span<const IobToken> iob,
                                                          bool merge_adjacent) {
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> current;
  for (const auto& t : iob) {
    const bool boundary = t.label == IobLabel::O || (t.label == IobLabel::B && !merge_adjacent);
    if (boundary && !current.empty()) out.push_back(std::move(current));
    if (boundary) current.clear();
    if (t.label != IobLabel::O) current.push_back(t.lemma);
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

}  // namespace kpx
