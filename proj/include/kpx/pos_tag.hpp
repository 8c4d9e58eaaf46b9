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

#ifndef KPX_POS_TAG_HPP_
#define KPX_POS_TAG_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace kpx {

/// Penn Treebank tagset, including the punctuation tags.
enum class PosTag : std::uint8_t {
  CC, CD, DT, EX, FW, IN, JJ, JJR, JJS, LS, MD, NN, NNS, NNP, NNPS, PDT, POS,
  PRP, PRP_S, RB, RBR, RBS, RP, SYM, TO, UH, VB, VBD, VBG, VBN, VBP, VBZ, WDT,
  WP, WP_S, WRB,
  Period,      // .
  Comma,       // ,
  Colon,       // :
  OpenQuote,   // ``
  CloseQuote,  // ''
  LeftParen,   // (
  RightParen,  // )
  Hash,        // #
  Dollar,      // $
};

inline constexpr std::size_t kPosTagCount = static_cast<std::size_t>(PosTag::Dollar) + 1;

std::string_view to_string(PosTag tag);

/// Parses a tag name such as "NNS", "PRP$" or ".".
std::optional<PosTag> parse_pos_tag(std::string_view name);

const std::array<PosTag, kPosTagCount>& all_pos_tags();

inline std::size_t index_of(PosTag tag) { return static_cast<std::size_t>(tag); }

bool is_noun(PosTag tag);
bool is_verb(PosTag tag);
bool is_adjective(PosTag tag);
bool is_adverb(PosTag tag);

}  // namespace kpx

#endif  // KPX_POS_TAG_HPP_
