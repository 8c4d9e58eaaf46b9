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

#ifndef KPX_ERROR_HPP_
#define KPX_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kpx {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad flag values, missing or unparseable data files, invalid grammar.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Unreadable input or unwritable output.
class IoError : public Error {
 public:
  using Error::Error;
};

class GrammarError : public ConfigError {
 public:
  GrammarError(std::size_t position, const std::string& message)
      : ConfigError("grammar error at position " + std::to_string(position) +
                    ": " + message),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace kpx

#endif  // KPX_ERROR_HPP_
