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

#include "kpx/tables.hpp"

#include "kpx/error.hpp"
#include "kpx/text.hpp"

namespace kpx {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::ifstream open_data_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open data file: " + path.string());
  return in;
}

WordSet parse_word_list(std::istream& in) {
  WordSet words;
  std::string line;
  while (std::getline(in, line)) {
    const auto entry = trim(line);
    if (entry.empty() || entry.front() == '#') continue;
    words.insert(text::to_lower(entry));
  }
  return words;
}

WordSet load_word_list(const std::filesystem::path& path) {
  auto in = open_data_file(path);
  return parse_word_list(in);
}

std::vector<std::vector<std::string>> load_tsv(const std::filesystem::path& path,
                                               std::size_t min_columns) {
  auto in = open_data_file(path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || line.front() == '#') continue;
    std::vector<std::string> row;
    std::size_t start = 0;
    for (;;) {
      const auto tab = line.find('\t', start);
      row.emplace_back(line.substr(start, tab == std::string::npos ? tab : tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (row.size() < min_columns) {
      throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": expected " +
                        std::to_string(min_columns) + " tab-separated columns");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace kpx
