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

// Loaders for the bundled line-oriented data files. All loaders throw
// ConfigError with the file name and line on missing or malformed files.

#ifndef KPX_TABLES_HPP_
#define KPX_TABLES_HPP_

#include <filesystem>
#include <fstream>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace kpx {

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};

using WordSet = std::unordered_set<std::string, StringHash, std::equal_to<>>;

template <typename V>
using StringMap = std::unordered_map<std::string, V, StringHash, std::equal_to<>>;

/// One entry per line; blank lines and lines starting with '#' are skipped.
/// Entries are trimmed and lowercased.
WordSet load_word_list(const std::filesystem::path& path);
WordSet parse_word_list(std::istream& in);

/// Tab-separated rows with at least `min_columns` columns. Comment and blank
/// lines are skipped.
std::vector<std::vector<std::string>> load_tsv(const std::filesystem::path& path,
                                               std::size_t min_columns);

/// Opens `path` for reading or throws ConfigError.
std::ifstream open_data_file(const std::filesystem::path& path);

}  // namespace kpx

#endif  // KPX_TABLES_HPP_
