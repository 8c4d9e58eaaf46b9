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

// Social-media text normalization. Each step is a total function over UTF-8
// text and returns whitespace-collapsed output.

#ifndef KPX_PREPROCESS_HPP_
#define KPX_PREPROCESS_HPP_

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "kpx/tables.hpp"

namespace kpx {

/// Case-insensitive whole-word replacement table loaded from a two-column
/// CSV (`key,expansion`). An optional header row is recognized by its first
/// field matching `header_key`.
class ExpansionTable {
 public:
  ExpansionTable() = default;

  static ExpansionTable load(const std::filesystem::path& path, std::string_view header_key);
  static ExpansionTable parse(std::istream& in, std::string_view header_key,
                              const std::string& origin);

  void add(std::string_view key, std::string expansion);
  const std::string* find(std::string_view lowercase_key) const;
  std::size_t size() const { return entries_.size(); }

 private:
  StringMap<std::string> entries_;
};

std::string strip_social_artifacts(std::string_view text);
std::string expand_contractions(std::string_view text, const ExpansionTable& contractions);
std::string decode_html(std::string_view text);
std::string strip_special_chars(std::string_view text);
std::string compress_repeats(std::string_view text);
std::string expand_slang(std::string_view text, const ExpansionTable& slang);
std::string remove_number_words(std::string_view text);

/// True for the characters strip_special_chars keeps: letters, digits,
/// whitespace and . ! ? ; : , ' -
bool in_keep_set(char32_t cp);

struct CleanDocument {
  std::string id;
  std::string text;
  std::vector<std::string> steps_applied;
};

class Preprocessor {
 public:
  /// Step labels in application order.
  static const std::vector<std::string>& step_names();

  Preprocessor(ExpansionTable contractions, ExpansionTable slang);

  /// The seven-step composition. When a pass would not be a fixed point of
  /// the composition (cross-step interactions on adversarial input), the
  /// composition is reapplied, at most kMaxPasses times in total.
  std::string operator()(std::string_view text) const;

  /// As operator(), recording the labels of steps that changed the text.
  CleanDocument clean(std::string id, std::string_view text) const;

  /// One step by its index in step_names().
  std::string apply_step(std::size_t index, std::string_view text) const;

  static constexpr int kMaxPasses = 4;

 private:
  std::string single_pass(std::string_view text, std::vector<std::string>* applied) const;

  ExpansionTable contractions_;
  ExpansionTable slang_;
};

}  // namespace kpx

#endif  // KPX_PREPROCESS_HPP_
