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

#ifndef KPX_CSV_HPP_
#define KPX_CSV_HPP_

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kpx::csv {

/// Streaming RFC 4180 record reader. Quoted fields may contain separators,
/// doubled quotes and line breaks; both LF and CRLF terminate records.
class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  /// Next record, or nullopt at end of input. Sets `error` (and still returns
  /// the fields read so far) when a quoted field is left unterminated.
  std::optional<std::vector<std::string>> next();

  /// 1-based line number where the last returned record started.
  std::size_t line() const { return record_line_; }
  bool error() const { return error_; }

 private:
  std::istream& in_;
  std::size_t line_ = 1;
  std::size_t record_line_ = 0;
  bool error_ = false;
};

/// Quotes `field` when it contains a separator, quote or line break.
std::string escape(std::string_view field);

std::string format_row(const std::vector<std::string>& fields);

}  // namespace kpx::csv

#endif  // KPX_CSV_HPP_
