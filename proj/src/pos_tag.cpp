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

#include "kpx/pos_tag.hpp"

namespace kpx {

namespace {

constexpr std::array<std::string_view, kPosTagCount> kNames = {
    "CC",  "CD",  "DT",  "EX",   "FW",  "IN",  "JJ",  "JJR", "JJS", "LS",  "MD",  "NN",
    "NNS", "NNP", "NNPS", "PDT", "POS", "PRP", "PRP$", "RB", "RBR", "RBS", "RP",  "SYM",
    "TO",  "UH",  "VB",  "VBD",  "VBG", "VBN", "VBP", "VBZ", "WDT", "WP",  "WP$", "WRB",
    ".",   ",",   ":",   "``",   "''",  "(",   ")",   "#",   "$"};

constexpr std::array<PosTag, kPosTagCount> make_all() {
  std::array<PosTag, kPosTagCount> tags{};
  for (std::size_t i = 0; i < kPosTagCount; ++i) tags[i] = static_cast<PosTag>(i);
  return tags;
}

constexpr std::array<PosTag, kPosTagCount> kAll = make_all();

}  // namespace

std::string_view to_string(PosTag tag) { return kNames[index_of(tag)]; }

std::optional<PosTag> parse_pos_tag(std::string_view name) {
  for (std::size_t i = 0; i < kPosTagCount; ++i) {
    if (kNames[i] == name) return static_cast<PosTag>(i);
  }
  return std::nullopt;
}

const std::array<PosTag, kPosTagCount>& all_pos_tags() { return kAll; }

bool is_noun(PosTag tag) {
  return tag == PosTag::NN || tag == PosTag::NNS || tag == PosTag::NNP || tag == PosTag::NNPS;
}

bool is_verb(PosTag tag) { return tag >= PosTag::VB && tag <= PosTag::VBZ; }

bool is_adjective(PosTag tag) { return tag >= PosTag::JJ && tag <= PosTag::JJS; }

bool is_adverb(PosTag tag) { return tag >= PosTag::RB && tag <= PosTag::RBS; }

}  // namespace kpx
