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

// UTF-8 helpers shared by all stages. Character classes are
// coarse: ASCII is handled exactly, Latin-1/Greek/Cyrillic get case mapping,
// and any other non-ASCII code point outside the punctuation/symbol/emoji
// blocks counts as a letter.

#ifndef KPX_TEXT_HPP_
#define KPX_TEXT_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace kpx::text {

inline constexpr char32_t kReplacement = 0xFFFD;

/// Replaces every ill-formed byte sequence with U+FFFD. `replaced`, when
/// given, is incremented once per replacement.
std::string sanitize_utf8(std::string_view in, std::size_t* replaced = nullptr);

/// Decodes the code point starting at `pos` and advances `pos` past it.
/// Ill-formed input yields U+FFFD and consumes one byte.
char32_t decode(std::string_view s, std::size_t& pos);

void append_utf8(std::string& out, char32_t cp);

/// Number of code points.
std::size_t length(std::string_view s);

bool is_space(char32_t cp);
bool is_digit(char32_t cp);
bool is_letter(char32_t cp);
bool is_upper(char32_t cp);
bool is_lower(char32_t cp);
char32_t to_lower(char32_t cp);

std::string to_lower(std::string_view s);

/// Trims and collapses every whitespace run to one ASCII space.
std::string collapse_whitespace(std::string_view s);

std::vector<std::string_view> split_whitespace(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

bool ascii_is_alpha(char c);
bool ascii_is_digit(char c);

}  // namespace kpx::text

#endif  // KPX_TEXT_HPP_
