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

// Regular patterns over POS tags.
//
//   pattern  := '{' seq '}' | seq
//   seq      := item*
//   item     := (atom | '(' seq ')') quant?
//   atom     := '<' TAG '>' | '<' PREFIX '.*' '>'
//   quant    := '?' | '*' | '+'
//
// Patterns compile to a DFA over the tag alphabet.

#ifndef KPX_GRAMMAR_HPP_
#define KPX_GRAMMAR_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kpx/pos_tag.hpp"

namespace kpx {

inline constexpr std::string_view kDefaultGrammar =
    "{ <DT>? <JJ.*>* <NN.*>* <VB.*>? (<IN>? <DT>? <JJ.*>* <NN.*>*)? }";

class CompiledGrammar {
 public:
  /// Throws GrammarError on syntax errors and on patterns whose only match
  /// is the empty sequence.
  static CompiledGrammar compile(std::string_view source);

  /// Whole-sequence match. The empty sequence is never accepted.
  bool accepts(std::span<const PosTag> tags) const;

  /// Length of the longest non-empty match starting at `start`, 0 if none.
  std::size_t longest_match(std::span<const PosTag> tags, std::size_t start) const;

  const std::string& source() const { return source_; }
  std::size_t state_count() const { return states_.size(); }

 private:
  static constexpr int kDead = -1;

  struct State {
    std::array<int, kPosTagCount> next;
    bool accepting = false;
  };

  std::string source_;
  std::vector<State> states_;  // state 0 is the start state
};

}  // namespace kpx

#endif  // KPX_GRAMMAR_HPP_
